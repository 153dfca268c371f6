#include <nlohmann/json.hpp>

#include "prop/error.hpp"
#include "prop/simplicial.hpp"

namespace prop {

namespace {

FpMatrix stack(std::uint32_t p, const std::vector<FpMatrix>& blocks, std::size_t cols) {
  std::size_t rows = 0;
  for (const FpMatrix& b : blocks) rows += b.rows();
  FpMatrix out(p, rows, cols);
  std::size_t r0 = 0;
  for (const FpMatrix& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < cols; ++c) out(r0 + r, c) = b(r, c);
    r0 += b.rows();
  }
  return out;
}

void expect_shape(const FpMatrix& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols)
    throw InputError(std::string("simplicial module: ") + what + " has the wrong shape");
}

void expect_equal(const FpMatrix& a, const FpMatrix& b, const char* identity) {
  if (!(a == b)) throw InputError(std::string("simplicial module violates ") + identity);
}

}  // namespace

void SimplicialFpModule::validate() const {
  if (dims.empty()) throw InputError("simplicial module has no levels");
  if (!is_prime(p)) throw InputError("simplicial module: p is not prime");
  const std::uint32_t L = top_level();
  if (faces.size() != L + 1 || degeneracies.size() != L)
    throw InputError("simplicial module: operator count does not match the number of levels");
  for (std::uint32_t n = 1; n <= L; ++n) {
    if (faces[n].size() != n + 1) throw InputError("simplicial module: level needs n+1 faces");
    for (const FpMatrix& d : faces[n]) expect_shape(d, dims[n - 1], dims[n], "face");
  }
  for (std::uint32_t n = 0; n < L; ++n) {
    if (degeneracies[n].size() != n + 1)
      throw InputError("simplicial module: level needs n+1 degeneracies");
    for (const FpMatrix& s : degeneracies[n]) expect_shape(s, dims[n + 1], dims[n], "degeneracy");
  }
  for (std::uint32_t n = 2; n <= L; ++n)
    for (std::uint32_t j = 1; j <= n; ++j)
      for (std::uint32_t i = 0; i < j; ++i)
        expect_equal(faces[n - 1][i] * faces[n][j], faces[n - 1][j - 1] * faces[n][i],
                     "d_i d_j = d_{j-1} d_i");
  for (std::uint32_t n = 0; n + 2 <= L; ++n)
    for (std::uint32_t j = 0; j <= n; ++j)
      for (std::uint32_t i = 0; i <= j; ++i)
        expect_equal(degeneracies[n + 1][i] * degeneracies[n][j],
                     degeneracies[n + 1][j + 1] * degeneracies[n][i], "s_i s_j = s_{j+1} s_i");
  for (std::uint32_t n = 0; n + 1 <= L; ++n) {
    const FpMatrix id = FpMatrix::identity(p, dims[n]);
    for (std::uint32_t j = 0; j <= n; ++j) {
      const FpMatrix& s = degeneracies[n][j];
      expect_equal(faces[n + 1][j] * s, id, "d_j s_j = id");
      expect_equal(faces[n + 1][j + 1] * s, id, "d_{j+1} s_j = id");
      if (n < 1) continue;
      for (std::uint32_t i = 0; i < j; ++i)
        expect_equal(faces[n + 1][i] * s, degeneracies[n - 1][j - 1] * faces[n][i],
                     "d_i s_j = s_{j-1} d_i");
      for (std::uint32_t i = j + 2; i <= n + 1; ++i)
        expect_equal(faces[n + 1][i] * s, degeneracies[n - 1][j] * faces[n][i - 1],
                     "d_i s_j = s_j d_{i-1}");
    }
  }
}

std::vector<std::size_t> moore_homology(const SimplicialFpModule& module, std::uint32_t q_max) {
  module.validate();
  if (q_max >= module.top_level())
    throw InputError("Moore homology through q needs levels up to q+1");
  const std::uint32_t p = module.p;

  // K[n]: columns span N_n; image_rank[n] = rank of d_n restricted to N_n.
  std::vector<FpMatrix> K;
  std::vector<std::size_t> image_rank(q_max + 2, 0);
  K.push_back(FpMatrix::identity(p, module.dims[0]));
  for (std::uint32_t n = 1; n <= q_max + 1; ++n) {
    std::vector<FpMatrix> blocks(module.faces[n].begin(), module.faces[n].begin() + n);
    K.push_back(kernel_basis(stack(p, blocks, module.dims[n])));
    image_rank[n] = rank(module.faces[n][n] * K[n]);
  }
  std::vector<std::size_t> h(q_max + 1);
  for (std::uint32_t q = 0; q <= q_max; ++q) h[q] = K[q].cols() - image_rank[q] - image_rank[q + 1];
  return h;
}

FiniteGroupTable::FiniteGroupTable(std::vector<std::vector<std::uint32_t>> table)
    : table_(std::move(table)) {
  const std::size_t n = table_.size();
  if (n == 0) throw InputError("group table is empty");
  for (const auto& row : table_) {
    if (row.size() != n) throw InputError("group table is not square");
    for (std::uint32_t v : row)
      if (v >= n) throw InputError("group table entry out of range");
  }
  std::optional<std::uint32_t> e;
  for (std::uint32_t a = 0; a < n && !e; ++a) {
    bool ok = true;
    for (std::uint32_t b = 0; b < n && ok; ++b) ok = table_[a][b] == b && table_[b][a] == b;
    if (ok) e = a;
  }
  if (!e) throw InputError("group table has no identity");
  identity_ = *e;
  for (std::uint32_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::uint32_t b = 0; b < n && !has_inverse; ++b)
      has_inverse = table_[a][b] == identity_ && table_[b][a] == identity_;
    if (!has_inverse) throw InputError("group table element " + std::to_string(a) + " has no inverse");
  }
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      for (std::uint32_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw InputError("group table is not associative");
}

FiniteGroupTable FiniteGroupTable::cyclic(std::uint32_t order) {
  if (order == 0) throw InputError("cyclic group of order 0");
  std::vector<std::vector<std::uint32_t>> t(order, std::vector<std::uint32_t>(order));
  for (std::uint32_t a = 0; a < order; ++a)
    for (std::uint32_t b = 0; b < order; ++b) t[a][b] = (a + b) % order;
  return FiniteGroupTable(std::move(t));
}

FiniteGroupTable FiniteGroupTable::from_json(const nlohmann::json& j) {
  try {
    auto table = j.at("table").get<std::vector<std::vector<std::uint32_t>>>();
    if (j.contains("order") && j.at("order").get<std::size_t>() != table.size())
      throw InputError("group order does not match the table size");
    return FiniteGroupTable(std::move(table));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed group table: ") + e.what());
  }
}

std::vector<std::size_t> wbar_homology(const FiniteGroupTable& g, std::uint32_t p,
                                       std::uint32_t q_max, bool override_guardrail) {
  const PrimeField field(p);
  const std::uint64_t order = g.order();
  std::vector<std::uint64_t> size(q_max + 2, 1);
  for (std::uint32_t n = 1; n <= q_max + 1; ++n) {
    if (__builtin_mul_overflow(size[n - 1], order, &size[n]))
      throw GuardrailError("bar complex size overflows 64 bits");
  }
  if (size[q_max + 1] > kBarComplexLimit && !override_guardrail)
    throw GuardrailError("bar complex in degree " + std::to_string(q_max + 1) + " has " +
                         std::to_string(size[q_max + 1]) + " basis elements, above " +
                         std::to_string(kBarComplexLimit) + "; use the override flag to proceed");

  // Basis of C_n: tuples a[0..n-1] encoded base |G| with a[0] most significant.
  auto boundary_rank = [&](std::uint32_t n) -> std::size_t {
    if (n == 0) return 0;
    EchelonBasis basis(p, size[n - 1]);
    std::vector<std::uint32_t> a(n), b(n - 1);
    for (std::uint64_t code = 0; code < size[n]; ++code) {
      std::uint64_t c = code;
      for (std::uint32_t t = n; t-- > 0;) {
        a[t] = static_cast<std::uint32_t>(c % order);
        c /= order;
      }
      std::vector<Coef> v(size[n - 1], 0);
      for (std::uint32_t i = 0; i <= n; ++i) {
        std::uint32_t w = 0;
        for (std::uint32_t t = 0; t < n; ++t) {
          if (i == 0 && t == 0) continue;
          if (i == n && t == n - 1) continue;
          if (i > 0 && i < n && t == i) continue;
          b[w++] = (i > 0 && i < n && t == i - 1) ? g.mul(a[i - 1], a[i]) : a[t];
        }
        std::uint64_t idx = 0;
        for (std::uint32_t t = 0; t + 1 < n; ++t) idx = idx * order + b[t];
        v[idx] = i % 2 == 0 ? field.add(v[idx], 1) : field.sub(v[idx], 1);
      }
      basis.insert(std::move(v));
      if (basis.rank() == size[n - 1]) break;
    }
    return basis.rank();
  };

  std::vector<std::size_t> ranks(q_max + 2);
  for (std::uint32_t n = 0; n <= q_max + 1; ++n) ranks[n] = boundary_rank(n);
  std::vector<std::size_t> h(q_max + 1);
  for (std::uint32_t q = 0; q <= q_max; ++q) h[q] = size[q] - ranks[q] - ranks[q + 1];
  return h;
}

std::uint64_t e1_dimensions(const std::vector<std::uint64_t>& h_from_one, std::uint32_t n,
                            std::uint32_t m) {
  if (n < 1) throw InputError("E^1 term needs n >= 1");
  if (h_from_one.size() < static_cast<std::size_t>(m) + 1)
    throw InputError("E^1_{n," + std::to_string(m) + "} needs dim H_q for q = 1.." +
                     std::to_string(m + 1));
  // ways[s]: weighted count of compositions of s into the parts placed so far.
  std::vector<std::uint64_t> ways(m + 1, 0);
  ways[0] = 1;
  for (std::uint32_t part = 0; part < n; ++part) {
    std::vector<std::uint64_t> next(m + 1, 0);
    for (std::uint32_t s = 0; s <= m; ++s) {
      if (ways[s] == 0) continue;
      for (std::uint32_t i = 0; s + i <= m; ++i) {
        std::uint64_t term = 0;
        if (__builtin_mul_overflow(ways[s], h_from_one[i], &term) ||
            __builtin_add_overflow(next[s + i], term, &next[s + i]))
          throw InputError("E^1 dimension overflows 64 bits");
      }
    }
    ways = std::move(next);
  }
  return ways[m];
}

}  // namespace prop
