#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "prop/fp.hpp"

namespace prop {

/// A word X_{i1} X_{i2} ... X_{ik} in non-commuting variables. The empty
/// monomial is the unit.
///
/// Ordered degree-first, then lexicographically on letters; this order is
/// the canonical term order everywhere in the library.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const std::uint32_t> letters);
  Monomial(std::initializer_list<std::uint32_t> letters);

  static Monomial letter(std::uint32_t index, std::uint32_t power = 1);

  std::uint32_t degree() const noexcept { return static_cast<std::uint32_t>(letters_.size()); }
  bool is_unit() const noexcept { return letters_.empty(); }
  std::uint32_t operator[](std::size_t i) const noexcept { return letters_[i]; }
  std::vector<std::uint32_t> letters() const;
  /// One past the largest letter index, 0 for the unit.
  std::uint32_t letter_bound() const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);

  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    if (a.letters_.size() != b.letters_.size()) return a.letters_.size() <=> b.letters_.size();
    return a.letters_.compare(b.letters_) <=> 0;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  // char16_t gives small-string storage for the short words that dominate.
  std::u16string letters_;
};

/// Renders "X1 X2^2"; the unit renders as "1".
std::string to_string(const Monomial& m);

/// The parameters every TruncatedSeries carries: prime, truncation degree and
/// number of variables. Arithmetic requires identical shapes.
struct SeriesShape {
  std::uint32_t p = 2;
  std::uint32_t N = 0;
  std::uint32_t d = 0;

  friend bool operator==(const SeriesShape&, const SeriesShape&) = default;
};

/// An element of F_p<X_1..X_d> modulo all monomials of degree > N.
///
/// Stored sparsely in canonical order with no zero coefficients, so equality
/// is structural.
class TruncatedSeries {
 public:
  using Terms = std::map<Monomial, Coef>;

  /// The zero series. Throws InputError if p is not a supported prime.
  explicit TruncatedSeries(SeriesShape shape);

  static TruncatedSeries constant(SeriesShape shape, std::int64_t c);
  static TruncatedSeries one(SeriesShape shape) { return constant(shape, 1); }
  /// The single variable X_index (not 1 + X_index).
  static TruncatedSeries variable(SeriesShape shape, std::uint32_t index);
  static TruncatedSeries monomial(SeriesShape shape, const Monomial& m, std::int64_t c = 1);

  const SeriesShape& shape() const noexcept { return shape_; }
  const PrimeField& field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Coef coefficient(const Monomial& m) const;
  Coef constant_term() const { return coefficient(Monomial{}); }

  /// Adds c·m; terms of degree > N are dropped, zero results pruned.
  void add_term(const Monomial& m, Coef c);

  /// Lowest degree carrying a nonzero coefficient, or nullopt for zero.
  std::optional<std::uint32_t> lowest_degree() const;
  /// The degree-k homogeneous part.
  TruncatedSeries homogeneous_component(std::uint32_t k) const;

  TruncatedSeries scaled(Coef c) const;
  TruncatedSeries operator-() const;

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    return a += b;
  }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
    return a -= b;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.shape_ == b.shape_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_shape(const TruncatedSeries& other) const;

  SeriesShape shape_;
  PrimeField field_;
  Terms terms_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Inverse of a series with constant term 1, as sum_{i<=N} (1 - a)^i.
/// Throws InputError for any other constant term.
TruncatedSeries unit_inverse(const TruncatedSeries& a);

/// Human-readable "1 + 2*X1 X2 + ..." in canonical order.
std::string to_string(const TruncatedSeries& s);

/// {"p":..,"N":..,"d":..,"terms":[{"mono":[..],"coef":..},..]} in canonical order.
nlohmann::json to_json(const TruncatedSeries& s);
/// Inverse of to_json; validates shape, indices, degrees and coefficients.
TruncatedSeries series_from_json(const nlohmann::json& j);

}  // namespace prop
