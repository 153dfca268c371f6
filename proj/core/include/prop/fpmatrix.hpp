#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "prop/fp.hpp"

namespace prop {

/// Dense row-major matrix over F_p.
class FpMatrix {
 public:
  FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);
  /// Entries are reduced mod p. All rows must have equal length.
  static FpMatrix from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows);
  static FpMatrix identity(std::uint32_t p, std::size_t n);

  std::uint32_t prime() const noexcept { return field_.prime(); }
  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Coef operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  Coef& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  std::span<const Coef> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }

  FpMatrix transposed() const;
  bool is_zero() const noexcept;
  std::vector<std::vector<std::int64_t>> to_rows() const;

  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
  friend FpMatrix operator+(const FpMatrix& a, const FpMatrix& b);
  friend FpMatrix operator-(const FpMatrix& a, const FpMatrix& b);
  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Coef> data_;
};

struct EchelonResult {
  std::size_t rank = 0;
  /// Reduced row echelon form, same shape as the input.
  FpMatrix rref;
  /// Pivot column of each of the first `rank` rows, strictly increasing.
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination to reduced row echelon form.
EchelonResult echelon_rank(const FpMatrix& m);

std::size_t rank(const FpMatrix& m);

/// Columns form a basis of the right null space {v : m v = 0}.
FpMatrix kernel_basis(const FpMatrix& m);

/// Incrementally maintained reduced row echelon basis of a subspace of F_p^n.
///
/// Rows are kept fully reduced against each other, so `reduce` yields the
/// canonical representative of a vector modulo the span: its entries on
/// pivot columns are zero.
class EchelonBasis {
 public:
  EchelonBasis(std::uint32_t p, std::size_t dimension);

  std::size_t dimension() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const PrimeField& field() const noexcept { return field_; }

  /// Reduces v in place modulo the span.
  void reduce(std::vector<Coef>& v) const;
  /// Adds v to the span; returns false if it was already dependent.
  bool insert(std::vector<Coef> v);

  bool is_pivot(std::size_t col) const noexcept { return pivot_row_[col].has_value(); }
  /// Pivot columns in increasing order.
  std::vector<std::size_t> pivots() const;

 private:
  PrimeField field_;
  std::size_t dim_;
  std::vector<std::vector<Coef>> rows_;
  std::vector<std::size_t> row_pivot_;
  std::vector<std::optional<std::size_t>> pivot_row_;
};

}  // namespace prop
