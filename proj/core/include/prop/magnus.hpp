#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "prop/ncseries.hpp"
#include "prop/word.hpp"

namespace prop {

/// Magnus embedding of the free group: generator x_i maps to 1 + X_i, and
/// x_i^e to the binomial series (1 + X_i)^e truncated at degree N.
///
/// Throws InputError if the word uses a generator index >= d.
TruncatedSeries magnus_expand(const GroupWord& w, std::uint32_t p, std::uint32_t N,
                              std::uint32_t d);

/// Degree of the lowest nonzero term of 1 - magnus(w), or a lower bound when
/// that difference vanishes through the truncation degree.
class Valuation {
 public:
  static Valuation exact(std::uint32_t k) { return Valuation(k, true); }
  static Valuation at_least(std::uint32_t k) { return Valuation(k, false); }

  bool is_exact() const noexcept { return exact_; }
  /// The exact value, or the lower bound N+1 when not exact.
  std::uint32_t degree() const noexcept { return degree_; }

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  Valuation(std::uint32_t k, bool exact) : degree_(k), exact_(exact) {}

  std::uint32_t degree_;
  bool exact_;
};

/// "3" or ">=5".
std::string to_string(const Valuation& v);

Valuation valuation(const GroupWord& w, std::uint32_t p, std::uint32_t N, std::uint32_t d);
/// Valuation of 1 - s for an already expanded series.
Valuation valuation_of_expansion(const TruncatedSeries& s);

/// Homogeneous degree-k tensor with coefficients in F_p: the lowest-degree
/// part of 1 - magnus(r).
class LeadingForm {
 public:
  /// Throws InputError if terms is empty or any monomial has degree != k.
  LeadingForm(std::uint32_t p, std::uint32_t k, std::uint32_t n,
              std::map<Monomial, Coef> coefficients);

  std::uint32_t prime() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return k_; }
  std::uint32_t num_generators() const noexcept { return n_; }
  const std::map<Monomial, Coef>& coefficients() const noexcept { return coefficients_; }

  LeadingForm scaled(Coef c) const;

  friend bool operator==(const LeadingForm&, const LeadingForm&) = default;

 private:
  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t n_;
  std::map<Monomial, Coef> coefficients_;
};

/// Throws TruncationError if valuation(w) is not exact at depth N.
LeadingForm leading_form(const GroupWord& w, std::uint32_t p, std::uint32_t N, std::uint32_t d);

std::string to_string(const LeadingForm& form);
nlohmann::json to_json(const LeadingForm& form);

}  // namespace prop
