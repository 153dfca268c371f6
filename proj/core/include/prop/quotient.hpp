#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "prop/fox.hpp"
#include "prop/fpmatrix.hpp"
#include "prop/magnus.hpp"
#include "prop/ncseries.hpp"
#include "prop/word.hpp"

namespace prop {

/// Ambient dimension sum_{n<=N} d^n above which build_quotient refuses to run
/// without an override.
inline constexpr std::uint64_t kQuotientAmbientLimit = 2'000'000;

/// Dense indexing of all monomials of degree <= N in d letters, ordered by
/// degree and then lexicographically (the canonical term order).
class MonomialIndex {
 public:
  MonomialIndex(std::uint32_t d, std::uint32_t N);

  std::uint32_t num_letters() const noexcept { return d_; }
  std::uint32_t max_degree() const noexcept { return N_; }
  std::size_t size() const noexcept { return offsets_.back(); }
  /// First index of degree n; offset(N+1) == size().
  std::size_t offset(std::uint32_t n) const noexcept { return offsets_[n]; }
  std::size_t index_of(const Monomial& m) const;
  Monomial monomial_at(std::size_t index) const;
  std::uint32_t degree_of(std::size_t index) const;

  /// Total ambient dimension, saturating at UINT64_MAX.
  static std::uint64_t ambient_dimension(std::uint32_t d, std::uint32_t N) noexcept;

 private:
  std::uint32_t d_;
  std::uint32_t N_;
  std::vector<std::size_t> offsets_;
};

/// F_p<<X>> / (I^{N+1} + J) for the ideal J generated by magnus(r) - 1 over
/// the relators r of a presentation.
///
/// J is materialised as the span of u·(magnus(r) - 1)·v for monomials u, v of
/// total degree at most N - val(r), then kept as a reduced echelon basis whose
/// pivots are chosen lowest-degree-first. With that order the number of
/// pivots in degree n is exactly d^n - b_n, so the dimension sequence is
/// exact through degree N.
class QuotientAlgebra {
 public:
  const Presentation& presentation() const noexcept { return pres_; }
  std::uint32_t truncation() const noexcept { return N_; }
  const MonomialIndex& index() const noexcept { return index_; }
  /// b_n = dim (I^n + J) / (I^{n+1} + J), n = 0..N.
  const std::vector<std::uint64_t>& b() const noexcept { return b_; }
  /// c_n = b_0 + ... + b_n.
  const std::vector<std::uint64_t>& c() const noexcept { return c_; }
  /// Monomials not eliminated by J, per degree; they index the coordinates.
  const std::vector<std::vector<Monomial>>& normal_basis() const noexcept { return basis_; }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }
  std::size_t ideal_dimension() const noexcept { return ideal_.rank(); }

  /// Canonical representative of s modulo J as a dense vector over the
  /// ambient monomial index.
  std::vector<Coef> normal_form(const TruncatedSeries& s) const;

 private:
  friend QuotientAlgebra build_quotient(const Presentation&, std::uint32_t, bool);
  QuotientAlgebra(Presentation pres, std::uint32_t N);

  Presentation pres_;
  std::uint32_t N_;
  MonomialIndex index_;
  EchelonBasis ideal_;
  std::vector<std::uint64_t> b_;
  std::vector<std::uint64_t> c_;
  std::vector<std::vector<Monomial>> basis_;
  std::vector<std::string> warnings_;
};

/// Throws InputError for N < 1 and GuardrailError when the ambient dimension
/// exceeds kQuotientAmbientLimit and override_guardrail is false. If every
/// relator is invisible at depth N a warning is recorded and the result is
/// the free grading.
QuotientAlgebra build_quotient(const Presentation& pres, std::uint32_t N,
                               bool override_guardrail = false);

/// Coordinates of the image of an element in A/J, degree by degree: entry n
/// lists the coefficients on normal_basis()[n].
using Projection = std::vector<std::vector<Coef>>;

Projection project(const TruncatedSeries& s, const QuotientAlgebra& qa);
Projection project(const GroupRingElement& e, const QuotientAlgebra& qa);

bool is_zero_in_quotient(const TruncatedSeries& s, const QuotientAlgebra& qa);
bool is_zero_in_quotient(const GroupRingElement& e, const QuotientAlgebra& qa);

/// Largest n with the element in I^n + J; at_least(N+1) if it vanishes in A/J.
Valuation valuation_in_quotient(const TruncatedSeries& s, const QuotientAlgebra& qa);

/// {"b":[..],"c":[..],"N":..,"exact_through":N}.
nlohmann::json to_json(const QuotientAlgebra& qa);

}  // namespace prop
