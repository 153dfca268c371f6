#include "prop/quotient.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "prop/error.hpp"

namespace prop {

std::uint64_t MonomialIndex::ambient_dimension(std::uint32_t d, std::uint32_t N) noexcept {
  std::uint64_t total = 0;
  std::uint64_t power = 1;
  for (std::uint32_t n = 0; n <= N; ++n) {
    if (__builtin_add_overflow(total, power, &total)) return UINT64_MAX;
    if (n < N && __builtin_mul_overflow(power, std::uint64_t{d}, &power)) return UINT64_MAX;
  }
  return total;
}

MonomialIndex::MonomialIndex(std::uint32_t d, std::uint32_t N) : d_(d), N_(N) {
  offsets_.reserve(N + 2);
  std::size_t total = 0;
  std::size_t power = 1;
  for (std::uint32_t n = 0; n <= N; ++n) {
    offsets_.push_back(total);
    total += power;
    power *= d;
  }
  offsets_.push_back(total);
}

std::size_t MonomialIndex::index_of(const Monomial& m) const {
  if (m.degree() > N_) throw InputError("monomial degree exceeds the index");
  std::size_t local = 0;
  for (std::uint32_t i = 0; i < m.degree(); ++i) {
    if (m[i] >= d_) throw InputError("monomial letter exceeds the index");
    local = local * d_ + m[i];
  }
  return offsets_[m.degree()] + local;
}

std::uint32_t MonomialIndex::degree_of(std::size_t index) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
  return static_cast<std::uint32_t>(it - offsets_.begin()) - 1;
}

Monomial MonomialIndex::monomial_at(std::size_t index) const {
  std::uint32_t n = degree_of(index);
  std::size_t local = index - offsets_[n];
  std::vector<std::uint32_t> letters(n);
  for (std::uint32_t i = n; i-- > 0;) {
    letters[i] = static_cast<std::uint32_t>(local % d_);
    local /= d_;
  }
  return Monomial(letters);
}

QuotientAlgebra::QuotientAlgebra(Presentation pres, std::uint32_t N)
    : pres_(std::move(pres)),
      N_(N),
      index_(pres_.num_generators(), N),
      ideal_(pres_.prime(), index_.size()) {}

std::vector<Coef> QuotientAlgebra::normal_form(const TruncatedSeries& s) const {
  const SeriesShape& sh = s.shape();
  if (sh.p != pres_.prime() || sh.d != pres_.num_generators())
    throw InputError("element does not match the quotient's prime or generator count");
  std::vector<Coef> v(index_.size(), 0);
  for (const auto& [m, c] : s.terms())
    if (m.degree() <= N_) v[index_.index_of(m)] = c;
  ideal_.reduce(v);
  return v;
}

QuotientAlgebra build_quotient(const Presentation& pres, std::uint32_t N,
                               bool override_guardrail) {
  if (N < 1) throw InputError("truncation degree N must be at least 1");
  const std::uint32_t d = pres.num_generators();
  const std::uint64_t ambient = MonomialIndex::ambient_dimension(d, N);
  if (ambient > kQuotientAmbientLimit && !override_guardrail)
    throw GuardrailError("quotient ambient dimension " + std::to_string(ambient) +
                         " exceeds " + std::to_string(kQuotientAmbientLimit) +
                         "; use the override flag to proceed");

  QuotientAlgebra qa(pres, N);
  const std::uint32_t p = pres.prime();
  const SeriesShape shape{p, N, d};
  const MonomialIndex& idx = qa.index_;

  std::size_t visible = 0;
  for (const GroupWord& r : pres.relators()) {
    TruncatedSeries rho = magnus_expand(r, p, N, d) - TruncatedSeries::one(shape);
    auto nu = rho.lowest_degree();
    if (!nu) continue;
    ++visible;
    const std::uint32_t room = N - *nu;
    // Left multiples u·rho, then right multiples by v: every (u, v) with
    // deg u + deg v <= room.
    for (std::size_t ui = 0; ui < idx.offset(room + 1); ++ui) {
      const Monomial u = idx.monomial_at(ui);
      const std::uint32_t right_room = room - u.degree();
      for (std::size_t vi = 0; vi < idx.offset(right_room + 1); ++vi) {
        const Monomial v = idx.monomial_at(vi);
        std::vector<Coef> row(idx.size(), 0);
        for (const auto& [m, c] : rho.terms()) {
          if (u.degree() + m.degree() + v.degree() > N) break;
          row[idx.index_of(u * m * v)] = c;
        }
        qa.ideal_.insert(std::move(row));
      }
    }
  }
  if (pres.num_relators() > 0 && visible == 0)
    qa.warnings_.push_back("every relator is trivial through degree " + std::to_string(N) +
                           "; the result equals the free grading");

  qa.b_.assign(N + 1, 0);
  qa.c_.assign(N + 1, 0);
  qa.basis_.assign(N + 1, {});
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (qa.ideal_.is_pivot(i)) continue;
    std::uint32_t n = idx.degree_of(i);
    ++qa.b_[n];
    qa.basis_[n].push_back(idx.monomial_at(i));
  }
  std::uint64_t running = 0;
  for (std::uint32_t n = 0; n <= N; ++n) {
    running += qa.b_[n];
    qa.c_[n] = running;
  }
  return qa;
}

Projection project(const TruncatedSeries& s, const QuotientAlgebra& qa) {
  std::vector<Coef> v = qa.normal_form(s);
  Projection out(qa.truncation() + 1);
  for (std::uint32_t n = 0; n <= qa.truncation(); ++n) {
    out[n].reserve(qa.normal_basis()[n].size());
    for (const Monomial& m : qa.normal_basis()[n]) out[n].push_back(v[qa.index().index_of(m)]);
  }
  return out;
}

Projection project(const GroupRingElement& e, const QuotientAlgebra& qa) {
  return project(magnus_image(e, qa.truncation(), qa.presentation().num_generators()), qa);
}

bool is_zero_in_quotient(const TruncatedSeries& s, const QuotientAlgebra& qa) {
  std::vector<Coef> v = qa.normal_form(s);
  return std::all_of(v.begin(), v.end(), [](Coef c) { return c == 0; });
}

bool is_zero_in_quotient(const GroupRingElement& e, const QuotientAlgebra& qa) {
  return is_zero_in_quotient(
      magnus_image(e, qa.truncation(), qa.presentation().num_generators()), qa);
}

Valuation valuation_in_quotient(const TruncatedSeries& s, const QuotientAlgebra& qa) {
  std::vector<Coef> v = qa.normal_form(s);
  auto it = std::find_if(v.begin(), v.end(), [](Coef c) { return c != 0; });
  if (it == v.end()) return Valuation::at_least(qa.truncation() + 1);
  return Valuation::exact(qa.index().degree_of(static_cast<std::size_t>(it - v.begin())));
}

nlohmann::json to_json(const QuotientAlgebra& qa) {
  return {{"b", qa.b()}, {"c", qa.c()}, {"N", qa.truncation()},
          {"exact_through", qa.truncation()}};
}

}  // namespace prop
