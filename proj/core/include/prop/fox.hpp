#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "prop/fp.hpp"
#include "prop/ncseries.hpp"
#include "prop/word.hpp"

namespace prop {

/// Finite F_p-linear combination of free-group elements.
class GroupRingElement {
 public:
  using Terms = std::map<GroupWord, Coef>;

  explicit GroupRingElement(std::uint32_t p);
  /// c·w.
  GroupRingElement(std::uint32_t p, const GroupWord& w, std::int64_t c = 1);

  static GroupRingElement one(std::uint32_t p) { return GroupRingElement(p, GroupWord{}); }

  std::uint32_t prime() const noexcept { return field_.prime(); }
  const PrimeField& field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Coef coefficient(const GroupWord& w) const;
  /// One past the largest generator index appearing in any term.
  std::uint32_t generator_bound() const noexcept;

  void add_term(const GroupWord& w, Coef c);

  GroupRingElement scaled(std::int64_t c) const;
  GroupRingElement operator-() const { return scaled(-1); }
  GroupRingElement& operator+=(const GroupRingElement& other);
  GroupRingElement& operator-=(const GroupRingElement& other);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) {
    return a += b;
  }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) {
    return a -= b;
  }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  void require_same_prime(const GroupRingElement& other) const;

  PrimeField field_;
  Terms terms_;
};

/// Fox derivative d w / d x_j over F_p. Powers use closed geometric sums:
/// d(x^e)/dx = 1 + x + ... + x^(e-1) and d(x^-e)/dx = -(x^-1 + ... + x^-e).
/// Throws InputError if j >= num_generators or w uses a generator beyond it.
GroupRingElement fox_derivative(const GroupWord& w, std::uint32_t j, std::uint32_t p,
                                std::uint32_t num_generators);

/// Checks w - 1 == sum_j (dw/dx_j)(x_j - 1) exactly in F_p[F].
bool fundamental_identity_check(const GroupWord& w, std::uint32_t p,
                                std::uint32_t num_generators);

/// Entry (i, j) is the derivative of relator i with respect to generator j.
using FoxJacobian = std::vector<std::vector<GroupRingElement>>;
FoxJacobian fox_jacobian(const Presentation& pres);

/// F_p-linear extension of the Magnus embedding.
TruncatedSeries magnus_image(const GroupRingElement& e, std::uint32_t N, std::uint32_t d);

/// "x1^2*x2^-1 + 2*x1"; zero renders as "0".
std::string to_string(const GroupRingElement& e, std::span<const std::string> names);
std::string to_string(const GroupRingElement& e);

/// {"p":..,"terms":[{"word":"x1^2*x2^-1","coef":..},..]}, terms in word order.
nlohmann::json to_json(const GroupRingElement& e, std::span<const std::string> names);
GroupRingElement group_ring_from_json(const nlohmann::json& j,
                                      std::span<const std::string> names);

}  // namespace prop
