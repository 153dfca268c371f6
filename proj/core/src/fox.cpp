#include "prop/fox.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "prop/error.hpp"
#include "prop/magnus.hpp"

namespace prop {

GroupRingElement::GroupRingElement(std::uint32_t p) : field_(p) {}

GroupRingElement::GroupRingElement(std::uint32_t p, const GroupWord& w, std::int64_t c)
    : field_(p) {
  add_term(w, field_.reduce(c));
}

Coef GroupRingElement::coefficient(const GroupWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Coef{0} : it->second;
}

std::uint32_t GroupRingElement::generator_bound() const noexcept {
  std::uint32_t bound = 0;
  for (const auto& [w, c] : terms_) bound = std::max(bound, w.generator_bound());
  return bound;
}

void GroupRingElement::add_term(const GroupWord& w, Coef c) {
  c = static_cast<Coef>(c % prime());
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second = field_.add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

GroupRingElement GroupRingElement::scaled(std::int64_t c) const {
  GroupRingElement out(prime());
  Coef k = field_.reduce(c);
  if (k == 0) return out;
  for (const auto& [w, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), w, field_.mul(v, k));
  return out;
}

void GroupRingElement::require_same_prime(const GroupRingElement& other) const {
  if (prime() != other.prime()) throw InputError("group ring elements over different primes");
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
  require_same_prime(other);
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& other) {
  require_same_prime(other);
  for (const auto& [w, c] : other.terms_) add_term(w, field_.neg(c));
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  a.require_same_prime(b);
  GroupRingElement out(a.prime());
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, a.field_.mul(ca, cb));
  return out;
}

GroupRingElement fox_derivative(const GroupWord& w, std::uint32_t j, std::uint32_t p,
                                std::uint32_t num_generators) {
  if (j >= num_generators) throw InputError("Fox derivative: generator index out of range");
  if (w.generator_bound() > num_generators)
    throw InputError("Fox derivative: word uses a generator beyond the declared count");
  GroupRingElement out(p);
  const PrimeField& f = out.field();
  const Coef minus_one = f.neg(1);
  GroupWord prefix;
  for (const Syllable& s : w.syllables()) {
    if (s.gen == j) {
      // prefix · d(x^e)/dx, term by term.
      if (s.exp > 0) {
        GroupWord term = prefix;
        for (std::int64_t k = 0; k < s.exp; ++k) {
          out.add_term(term, 1);
          term *= GroupWord::generator(j);
        }
      } else {
        GroupWord term = prefix;
        for (std::int64_t k = 0; k > s.exp; --k) {
          term *= GroupWord::generator(j, -1);
          out.add_term(term, minus_one);
        }
      }
    }
    prefix *= GroupWord::generator(s.gen, s.exp);
  }
  return out;
}

bool fundamental_identity_check(const GroupWord& w, std::uint32_t p,
                                std::uint32_t num_generators) {
  GroupRingElement lhs = GroupRingElement(p, w) - GroupRingElement::one(p);
  GroupRingElement rhs(p);
  for (std::uint32_t j = 0; j < num_generators; ++j) {
    GroupRingElement xj_minus_one =
        GroupRingElement(p, GroupWord::generator(j)) - GroupRingElement::one(p);
    rhs += fox_derivative(w, j, p, num_generators) * xj_minus_one;
  }
  return lhs == rhs;
}

FoxJacobian fox_jacobian(const Presentation& pres) {
  FoxJacobian jac;
  jac.reserve(pres.num_relators());
  for (const GroupWord& r : pres.relators()) {
    std::vector<GroupRingElement> row;
    row.reserve(pres.num_generators());
    for (std::uint32_t j = 0; j < pres.num_generators(); ++j)
      row.push_back(fox_derivative(r, j, pres.prime(), pres.num_generators()));
    jac.push_back(std::move(row));
  }
  return jac;
}

TruncatedSeries magnus_image(const GroupRingElement& e, std::uint32_t N, std::uint32_t d) {
  TruncatedSeries out(SeriesShape{e.prime(), N, d});
  for (const auto& [w, c] : e.terms())
    out += magnus_expand(w, e.prime(), N, d).scaled(c);
  return out;
}

std::string to_string(const GroupRingElement& e, std::span<const std::string> names) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : e.terms()) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c) + "*";
    out += to_string(w, names);
  }
  return out;
}

std::string to_string(const GroupRingElement& e) {
  auto names = default_generator_names(e.generator_bound());
  return to_string(e, names);
}

nlohmann::json to_json(const GroupRingElement& e, std::span<const std::string> names) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : e.terms())
    terms.push_back({{"word", to_string(w, names)}, {"coef", c}});
  return {{"p", e.prime()}, {"terms", terms}};
}

GroupRingElement group_ring_from_json(const nlohmann::json& j,
                                      std::span<const std::string> names) {
  try {
    GroupRingElement e(j.at("p").get<std::uint32_t>());
    for (const auto& t : j.at("terms")) {
      auto coef = t.at("coef").get<std::int64_t>();
      if (coef <= 0 || coef >= static_cast<std::int64_t>(e.prime()))
        throw InputError("group ring coefficient outside 1..p-1");
      GroupWord w = parse_word(t.at("word").get<std::string>(), names);
      if (e.coefficient(w) != 0) throw InputError("duplicate group ring term");
      e.add_term(w, static_cast<Coef>(coef));
    }
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("malformed group ring JSON: ") + ex.what());
  }
}

}  // namespace prop
