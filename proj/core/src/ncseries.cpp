#include "prop/ncseries.hpp"

#include <limits>

#include <nlohmann/json.hpp>

#include "prop/error.hpp"

namespace prop {

Monomial::Monomial(std::span<const std::uint32_t> letters) {
  letters_.reserve(letters.size());
  for (std::uint32_t l : letters) {
    if (l > std::numeric_limits<char16_t>::max()) throw InputError("variable index too large");
    letters_.push_back(static_cast<char16_t>(l));
  }
}

Monomial::Monomial(std::initializer_list<std::uint32_t> letters)
    : Monomial(std::span<const std::uint32_t>(letters.begin(), letters.size())) {}

Monomial Monomial::letter(std::uint32_t index, std::uint32_t power) {
  if (index > std::numeric_limits<char16_t>::max()) throw InputError("variable index too large");
  Monomial m;
  m.letters_.assign(power, static_cast<char16_t>(index));
  return m;
}

std::vector<std::uint32_t> Monomial::letters() const {
  return {letters_.begin(), letters_.end()};
}

std::uint32_t Monomial::letter_bound() const noexcept {
  std::uint32_t bound = 0;
  for (char16_t c : letters_) bound = std::max<std::uint32_t>(bound, std::uint32_t{c} + 1);
  return bound;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.letters_.reserve(a.letters_.size() + b.letters_.size());
  m.letters_ = a.letters_;
  m.letters_ += b.letters_;
  return m;
}

std::string to_string(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  std::uint32_t i = 0;
  while (i < m.degree()) {
    std::uint32_t j = i;
    while (j < m.degree() && m[j] == m[i]) ++j;
    if (!out.empty()) out += ' ';
    out += "X" + std::to_string(m[i] + 1);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

TruncatedSeries::TruncatedSeries(SeriesShape shape) : shape_(shape), field_(shape.p) {}

TruncatedSeries TruncatedSeries::constant(SeriesShape shape, std::int64_t c) {
  TruncatedSeries s(shape);
  s.add_term(Monomial{}, s.field_.reduce(c));
  return s;
}

TruncatedSeries TruncatedSeries::variable(SeriesShape shape, std::uint32_t index) {
  return monomial(shape, Monomial{index});
}

TruncatedSeries TruncatedSeries::monomial(SeriesShape shape, const Monomial& m, std::int64_t c) {
  TruncatedSeries s(shape);
  if (m.letter_bound() > shape.d) throw InputError("monomial uses a variable beyond d");
  s.add_term(m, s.field_.reduce(c));
  return s;
}

Coef TruncatedSeries::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coef{0} : it->second;
}

void TruncatedSeries::add_term(const Monomial& m, Coef c) {
  if (c == 0 || m.degree() > shape_.N) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = field_.add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

std::optional<std::uint32_t> TruncatedSeries::lowest_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.degree();
}

TruncatedSeries TruncatedSeries::homogeneous_component(std::uint32_t k) const {
  TruncatedSeries out(shape_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == k) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

TruncatedSeries TruncatedSeries::scaled(Coef c) const {
  TruncatedSeries out(shape_);
  c = static_cast<Coef>(c % shape_.p);
  if (c == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, field_.mul(v, c));
  return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
  return scaled(static_cast<Coef>(shape_.p - 1));
}

void TruncatedSeries::require_same_shape(const TruncatedSeries& other) const {
  if (!(shape_ == other.shape_))
    throw InputError("series parameter mismatch (p, N, d must agree)");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  require_same_shape(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  require_same_shape(other);
  for (const auto& [m, c] : other.terms_) add_term(m, field_.neg(c));
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.require_same_shape(b);
  TruncatedSeries out(a.shape_);
  const std::uint32_t N = a.shape_.N;
  for (const auto& [ma, ca] : a.terms_) {
    if (ma.degree() > N) break;
    // b is degree-ordered, so the first overshoot ends the row.
    for (const auto& [mb, cb] : b.terms_) {
      if (ma.degree() + mb.degree() > N) break;
      out.add_term(ma * mb, a.field_.mul(ca, cb));
    }
  }
  return out;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries unit_inverse(const TruncatedSeries& a) {
  if (a.constant_term() != 1 % a.shape().p)
    throw InputError("unit_inverse requires constant term 1");
  TruncatedSeries one = TruncatedSeries::one(a.shape());
  TruncatedSeries u = one - a;
  // Horner: 1 + u(1 + u(1 + ...)), N levels deep.
  TruncatedSeries result = one;
  for (std::uint32_t i = 0; i < a.shape().N; ++i) result = one + u * result;
  return result;
}

std::string to_string(const TruncatedSeries& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : s.terms()) {
    if (!out.empty()) out += " + ";
    if (m.is_unit()) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c) + "*";
      out += to_string(m);
    }
  }
  return out;
}

nlohmann::json to_json(const TruncatedSeries& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : s.terms())
    terms.push_back({{"mono", m.letters()}, {"coef", c}});
  return {{"p", s.shape().p}, {"N", s.shape().N}, {"d", s.shape().d}, {"terms", terms}};
}

TruncatedSeries series_from_json(const nlohmann::json& j) {
  try {
    SeriesShape shape{j.at("p").get<std::uint32_t>(), j.at("N").get<std::uint32_t>(),
                      j.at("d").get<std::uint32_t>()};
    TruncatedSeries s(shape);
    for (const auto& t : j.at("terms")) {
      Monomial m(t.at("mono").get<std::vector<std::uint32_t>>());
      auto coef = t.at("coef").get<std::int64_t>();
      if (m.letter_bound() > shape.d) throw InputError("series term uses a variable beyond d");
      if (m.degree() > shape.N) throw InputError("series term exceeds truncation degree");
      if (coef <= 0 || coef >= static_cast<std::int64_t>(shape.p))
        throw InputError("series coefficient outside 1..p-1");
      if (s.coefficient(m) != 0) throw InputError("duplicate series term");
      s.add_term(m, static_cast<Coef>(coef));
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed series JSON: ") + e.what());
  }
}

}  // namespace prop
