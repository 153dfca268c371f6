#include "prop/fpmatrix.hpp"

#include <algorithm>

#include "prop/error.hpp"

namespace prop {

FpMatrix::FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : field_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FpMatrix FpMatrix::from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  FpMatrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = m.field_.reduce(rows[r][c]);
  }
  return m;
}

FpMatrix FpMatrix::identity(std::uint32_t p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = static_cast<Coef>(1 % p);
  return m;
}

FpMatrix FpMatrix::transposed() const {
  FpMatrix t(prime(), cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool FpMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Coef c) { return c == 0; });
}

std::vector<std::vector<std::int64_t>> FpMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
  return out;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
  if (a.prime() != b.prime() || a.cols_ != b.rows_)
    throw InputError("matrix product shape mismatch");
  FpMatrix out(a.prime(), a.rows_, b.cols_);
  const std::uint64_t p = a.prime();
  std::vector<std::uint64_t> acc(b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      std::uint64_t x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) acc[c] = (acc[c] + x * b(k, c)) % p;
    }
    for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) = static_cast<Coef>(acc[c]);
  }
  return out;
}

FpMatrix operator+(const FpMatrix& a, const FpMatrix& b) {
  if (a.prime() != b.prime() || a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw InputError("matrix sum shape mismatch");
  FpMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i)
    out.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
  return out;
}

FpMatrix operator-(const FpMatrix& a, const FpMatrix& b) {
  if (a.prime() != b.prime() || a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw InputError("matrix difference shape mismatch");
  FpMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i)
    out.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
  return out;
}

EchelonResult echelon_rank(const FpMatrix& m) {
  const PrimeField& f = m.field();
  FpMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t sel = r;
    while (sel < a.rows() && a(sel, c) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != r)
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(sel, k), a(r, k));
    Coef inv = f.inv(a(r, c));
    for (std::size_t k = c; k < a.cols(); ++k) a(r, k) = f.mul(a(r, k), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Coef factor = a(i, c);
      for (std::size_t k = c; k < a.cols(); ++k)
        a(i, k) = f.sub(a(i, k), f.mul(factor, a(r, k)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {r, std::move(a), std::move(pivots)};
}

std::size_t rank(const FpMatrix& m) { return echelon_rank(m).rank; }

FpMatrix kernel_basis(const FpMatrix& m) {
  const PrimeField& f = m.field();
  EchelonResult e = echelon_rank(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  FpMatrix basis(m.prime(), m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    basis(fc, k) = 1;
    for (std::size_t r = 0; r < e.rank; ++r) basis(e.pivots[r], k) = f.neg(e.rref(r, fc));
  }
  return basis;
}

EchelonBasis::EchelonBasis(std::uint32_t p, std::size_t dimension)
    : field_(p), dim_(dimension), pivot_row_(dimension) {}

void EchelonBasis::reduce(std::vector<Coef>& v) const {
  if (v.size() != dim_) throw InputError("vector dimension mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::size_t pc = row_pivot_[r];
    Coef factor = v[pc];
    if (factor == 0) continue;
    const auto& row = rows_[r];
    for (std::size_t k = pc; k < dim_; ++k)
      if (row[k] != 0) v[k] = field_.sub(v[k], field_.mul(factor, row[k]));
  }
}

bool EchelonBasis::insert(std::vector<Coef> v) {
  reduce(v);
  auto lead = std::find_if(v.begin(), v.end(), [](Coef c) { return c != 0; });
  if (lead == v.end()) return false;
  std::size_t pc = static_cast<std::size_t>(lead - v.begin());
  Coef inv = field_.inv(v[pc]);
  for (std::size_t k = pc; k < dim_; ++k) v[k] = field_.mul(v[k], inv);
  // Keep existing rows reduced on the new pivot column.
  for (auto& row : rows_) {
    Coef factor = row[pc];
    if (factor == 0) continue;
    for (std::size_t k = pc; k < dim_; ++k)
      if (v[k] != 0) row[k] = field_.sub(row[k], field_.mul(factor, v[k]));
  }
  pivot_row_[pc] = rows_.size();
  row_pivot_.push_back(pc);
  rows_.push_back(std::move(v));
  return true;
}

std::vector<std::size_t> EchelonBasis::pivots() const {
  std::vector<std::size_t> out = row_pivot_;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace prop
