#include "prop/magnus.hpp"

#include <nlohmann/json.hpp>

#include "prop/error.hpp"

namespace prop {

namespace {

// (1 + X_gen)^exp truncated at degree N.
TruncatedSeries syllable_series(SeriesShape shape, const PrimeField& f, const Syllable& s) {
  TruncatedSeries out(shape);
  for (std::uint32_t i = 0; i <= shape.N; ++i)
    out.add_term(Monomial::letter(s.gen, i), f.binomial(s.exp, i));
  return out;
}

}  // namespace

TruncatedSeries magnus_expand(const GroupWord& w, std::uint32_t p, std::uint32_t N,
                              std::uint32_t d) {
  SeriesShape shape{p, N, d};
  PrimeField f(p);
  if (w.generator_bound() > d) throw InputError("word uses a generator index beyond d");
  TruncatedSeries result = TruncatedSeries::one(shape);
  for (const Syllable& s : w.syllables()) result = result * syllable_series(shape, f, s);
  return result;
}

std::string to_string(const Valuation& v) {
  return v.is_exact() ? std::to_string(v.degree()) : ">=" + std::to_string(v.degree());
}

Valuation valuation_of_expansion(const TruncatedSeries& s) {
  TruncatedSeries diff = TruncatedSeries::one(s.shape()) - s;
  auto low = diff.lowest_degree();
  if (!low) return Valuation::at_least(s.shape().N + 1);
  return Valuation::exact(*low);
}

Valuation valuation(const GroupWord& w, std::uint32_t p, std::uint32_t N, std::uint32_t d) {
  return valuation_of_expansion(magnus_expand(w, p, N, d));
}

LeadingForm::LeadingForm(std::uint32_t p, std::uint32_t k, std::uint32_t n,
                         std::map<Monomial, Coef> coefficients)
    : p_(p), k_(k), n_(n), coefficients_(std::move(coefficients)) {
  PrimeField f(p);
  if (k_ == 0) throw InputError("leading form must have positive degree");
  if (coefficients_.empty()) throw InputError("leading form must be nonzero");
  for (const auto& [m, c] : coefficients_) {
    if (m.degree() != k_) throw InputError("leading form is not homogeneous");
    if (m.letter_bound() > n_) throw InputError("leading form uses a variable beyond n");
    if (c == 0 || c >= p_) throw InputError("leading form coefficient outside 1..p-1");
  }
}

LeadingForm LeadingForm::scaled(Coef c) const {
  PrimeField f(p_);
  c = static_cast<Coef>(c % p_);
  if (c == 0) throw InputError("cannot scale a leading form by zero");
  std::map<Monomial, Coef> out;
  for (const auto& [m, v] : coefficients_) out.emplace_hint(out.end(), m, f.mul(v, c));
  return LeadingForm(p_, k_, n_, std::move(out));
}

LeadingForm leading_form(const GroupWord& w, std::uint32_t p, std::uint32_t N, std::uint32_t d) {
  TruncatedSeries s = magnus_expand(w, p, N, d);
  TruncatedSeries diff = TruncatedSeries::one(s.shape()) - s;
  auto low = diff.lowest_degree();
  if (!low)
    throw TruncationError("relator is trivial through degree " + std::to_string(N) +
                          "; raise the truncation degree");
  TruncatedSeries top = diff.homogeneous_component(*low);
  return LeadingForm(p, *low, d, top.terms());
}

std::string to_string(const LeadingForm& form) {
  std::string out;
  for (const auto& [m, c] : form.coefficients()) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c) + "*";
    out += to_string(m);
  }
  return out;
}

nlohmann::json to_json(const LeadingForm& form) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : form.coefficients())
    terms.push_back({{"mono", m.letters()}, {"coef", c}});
  return {{"p", form.prime()}, {"k", form.degree()}, {"n", form.num_generators()},
          {"terms", terms}};
}

}  // namespace prop
