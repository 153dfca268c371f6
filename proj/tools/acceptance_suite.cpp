#include "acceptance_suite.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "prop/error.hpp"
#include "prop/fox.hpp"
#include "prop/gs_bounds.hpp"
#include "prop/magnus.hpp"
#include "prop/obstruction.hpp"
#include "prop/quotient.hpp"
#include "prop/simplicial.hpp"

namespace prop::acceptance {

namespace {

using Rng = std::mt19937_64;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::uint32_t uniform(Rng& rng, std::uint32_t lo, std::uint32_t hi) {
  return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng);
}

/// Random reduced word of total length at most max_len over d generators.
GroupWord random_word(Rng& rng, std::uint32_t d, std::uint32_t max_len) {
  std::vector<Syllable> letters;
  const std::uint32_t len = uniform(rng, 0, max_len);
  for (std::uint32_t i = 0; i < len; ++i)
    letters.push_back({uniform(rng, 0, d - 1), uniform(rng, 0, 1) ? 1 : -1});
  return GroupWord(letters);
}

GroupWord random_nontrivial_word(Rng& rng, std::uint32_t d, std::uint32_t max_len) {
  while (true) {
    GroupWord w = random_word(rng, d, max_len);
    if (!w.is_identity()) return w;
  }
}

GroupWord x(std::uint32_t i, std::int64_t e = 1) { return GroupWord::generator(i, e); }

GroupRingElement ring(std::uint32_t p, const GroupWord& w) { return GroupRingElement(p, w); }

/// sum_{k<e} x^k.
GroupRingElement geometric(std::uint32_t p, std::uint32_t gen, std::uint32_t e) {
  GroupRingElement s(p);
  for (std::uint32_t k = 0; k < e; ++k) s += ring(p, x(gen, k));
  return s;
}

GroupWord power_commutator_relator(std::uint32_t p) { return x(0, p) * commutator(x(1), x(0, p)); }

Outcome fox_power_commutator() {
  Outcome out;
  for (std::uint32_t p : {2U, 3U}) {
    const auto ip = static_cast<std::int64_t>(p);
    const GroupWord r = power_commutator_relator(p);
    const GroupRingElement one = GroupRingElement::one(p);
    const GroupRingElement expected2 =
        ring(p, x(0, ip) * x(1, -1)) * (ring(p, x(0, -ip)) - one);
    const GroupRingElement expected1 =
        geometric(p, 0, p) + ring(p, x(0, ip) * x(1, -1) * x(0, -ip)) *
                                 (ring(p, x(1)) - one) * geometric(p, 0, p);
    out.require(fox_derivative(r, 1, p, 2) == expected2,
                "dr/dx2 mismatch at p=" + std::to_string(p));
    out.require(fox_derivative(r, 0, p, 2) == expected1,
                "dr/dx1 mismatch at p=" + std::to_string(p));
  }
  if (out.ok) out.detail = "both derivatives exact for p=2,3";
  return out;
}

Outcome fundamental_identity(Rng& rng) {
  Outcome out;
  std::size_t count = 0;
  for (std::uint32_t p : {2U, 3U, 5U}) {
    for (int i = 0; i < 200; ++i) {
      const std::uint32_t d = uniform(rng, 1, 4);
      const GroupWord w = random_word(rng, d, 30);
      out.require(fundamental_identity_check(w, p, d),
                  "identity fails for " + to_string(w) + " at p=" + std::to_string(p));
      ++count;
    }
  }
  if (out.ok) out.detail = std::to_string(count) + " words";
  return out;
}

Outcome magnus_multiplicativity(Rng& rng) {
  Outcome out;
  constexpr std::uint32_t N = 6;
  const std::uint32_t primes[] = {2, 3, 5};
  for (int i = 0; i < 200; ++i) {
    const std::uint32_t p = primes[i % 3];
    const std::uint32_t d = uniform(rng, 1, 3);
    const GroupWord u = random_word(rng, d, 12);
    const GroupWord v = random_word(rng, d, 12);
    const TruncatedSeries mu = magnus_expand(u, p, N, d);
    const TruncatedSeries mv = magnus_expand(v, p, N, d);
    out.require(magnus_expand(u * v, p, N, d) == mu * mv,
                "M(uv) != M(u)M(v) for u=" + to_string(u) + ", v=" + to_string(v));
    out.require(magnus_expand(u.inverse(), p, N, d) == unit_inverse(mu),
                "M(u^-1) != M(u)^-1 for u=" + to_string(u));
  }
  if (out.ok) out.detail = "200 pairs, N=6";
  return out;
}

Presentation free_presentation(std::uint32_t p, std::uint32_t d) {
  return Presentation(p, default_generator_names(d), {});
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= base;
  return r;
}

Outcome free_grading() {
  Outcome out;
  for (std::uint32_t d : {2U, 3U}) {
    const QuotientAlgebra qa = build_quotient(free_presentation(2, d), 6);
    for (std::uint32_t n = 0; n <= 6; ++n)
      out.require(qa.b()[n] == ipow(d, n), "b_" + std::to_string(n) + " != d^n at d=" +
                                               std::to_string(d));
  }
  if (out.ok) out.detail = "b_n = d^n through n=6 for d=2,3";
  return out;
}

Outcome quotient_vanishing() {
  Outcome out;
  constexpr std::uint32_t p = 2;
  const Presentation pres(p, default_generator_names(2), {power_commutator_relator(p)});
  const QuotientAlgebra qa = build_quotient(pres, 6);
  const GroupWord r = pres.relators().front();
  const GroupRingElement one = GroupRingElement::one(p);
  out.require(is_zero_in_quotient(fox_derivative(r, 1, p, 2), qa), "dr/dx2 nonzero in quotient");
  out.require(is_zero_in_quotient(ring(p, x(0, 2)) - one, qa), "x1^2 - 1 nonzero in quotient");
  const GroupRingElement other = (one.scaled(2) - ring(p, x(1, -1))) * (one + ring(p, x(0)));
  out.require(is_zero_in_quotient(fox_derivative(r, 0, p, 2) - other, qa),
              "dr/dx1 - (2 - x2^-1)(1 + x1) nonzero in quotient");
  if (out.ok) out.detail = "three projections vanish at N=6";
  return out;
}

Outcome internal_rank() {
  Outcome out;
  const Presentation pres = parse_presentation("p = 2\ngens: x1, x2, x3, x4\nrels: x1^2 x2^2 x3^2 x4^2\n");
  const HomCandidate odd_even = parse_candidate("y1, y1^-1, y2, y2^-1", 2);
  const InternalRankReport rep = internal_rank_report(pres, 4, 4, {{2, odd_even}});
  for (const RankEntry& e : rep.entries) {
    const auto want = e.m >= 3 ? ObstructionVerdict::NoEpiCertified
                               : ObstructionVerdict::CandidateExists;
    out.require(e.obstruction.verdict == want,
                "m=" + std::to_string(e.m) + " gave " + to_string(e.obstruction.verdict));
  }
  out.require(rep.entries.size() == 4 && rep.entries[1].confirmed(),
              "odd/even retraction not confirmed");
  out.require(rep.ir_lower_bound == 2 && rep.ir_upper_bound == 2, "Ir bounds do not pin 2");
  if (out.ok) out.detail = "NO for m=3,4; candidate for m=1,2; retraction confirmed; Ir=2";
  return out;
}

Outcome stallings() {
  Outcome out;
  const GroupWord r = commutator(x(0), x(1)).pow(4) * commutator(x(0, 2), x(2, 2)).pow(2) *
                      commutator(x(1, 4), x(2, 4));
  const LeadingForm eta = leading_form(r, 2, 8, 3);
  out.require(eta.degree() == 8, "leading degree " + std::to_string(eta.degree()) + " != 8");
  const ObstructionReport rep = search_obstruction(eta, 2);
  out.require(rep.spaces_examined == 7, "examined " + std::to_string(rep.spaces_examined) +
                                            " column spaces, expected 7");
  out.require(rep.verdict == ObstructionVerdict::NoEpiCertified, "verdict " + to_string(rep.verdict));
  if (out.ok) out.detail = "degree 8; NO over 7 column spaces";
  return out;
}

Outcome koch(Rng& rng) {
  Outcome out;
  for (std::uint32_t d : {2U, 3U}) {
    const Presentation pres = free_presentation(2, d);
    const QuotientAlgebra qa = build_quotient(pres, 6);
    const std::vector<std::int64_t> b(qa.b().begin(), qa.b().end());
    const GSReport rep = koch_report(d, relator_degree_sequence(pres, 6), b, 6);
    for (std::uint32_t n = 1; n <= 6; ++n)
      out.require(rep.E[n] == 1, "E_" + std::to_string(n) + " = " + std::to_string(rep.E[n]) +
                                     " at d=" + std::to_string(d));
  }
  out.require(!gs_quadratic(2, 1), "gs_quadratic(2,1) is true");
  for (int i = 0; i < 100; ++i) {
    const std::int64_t d = uniform(rng, 1, 1000);
    const std::int64_t r = uniform(rng, 0, 300000);
    out.require(koch_power_bound(d, r, 2) == gs_quadratic(d, r),
                "m=2 bound disagrees at d=" + std::to_string(d) + ", r=" + std::to_string(r));
  }
  if (out.ok) out.detail = "E_n = 1 for d=2,3; m=2 bound matches on 100 inputs";
  return out;
}

Presentation random_presentation(Rng& rng) {
  const std::uint32_t d = uniform(rng, 1, 3);
  const std::uint32_t rels = uniform(rng, 1, 2);
  const std::uint32_t primes[] = {2, 3, 5, 7};
  std::vector<GroupWord> relators;
  for (std::uint32_t i = 0; i < rels; ++i) relators.push_back(random_nontrivial_word(rng, d, 8));
  return Presentation(primes[uniform(rng, 0, 3)], default_generator_names(d), std::move(relators));
}

/// Random element of the normal closure of the relator generators at level 1,
/// which is Ker d_0 there.
GroupWord random_kernel_element(Rng& rng, const SimplicialSkeleton& sk) {
  const std::uint32_t gens = sk.num_generators(1);
  GroupWord w;
  const std::uint32_t factors = uniform(rng, 1, 3);
  for (std::uint32_t f = 0; f < factors; ++f) {
    const GroupWord c = random_word(rng, gens, 4);
    const std::uint32_t y = sk.relator_generator(1, uniform(rng, 0, sk.num_relators - 1), 1);
    w *= c * x(y, uniform(rng, 0, 1) ? 1 : -1) * c.inverse();
  }
  return w;
}

Outcome simplicial_suite(Rng& rng) {
  Outcome out;
  std::uint64_t checks = 0;
  for (int i = 0; i < 20; ++i) {
    const Presentation pres = random_presentation(rng);
    const SimplicialSkeleton sk = build_one_skeleton(pres, 4);
    const IdentityReport rep = check_simplicial_identities(sk);
    checks += rep.checks;
    out.require(rep.ok(), "identity violated for " + to_string(pres) +
                              (rep.ok() ? "" : ": " + rep.violations.front().identity));
  }
  for (int i = 0; i < 50; ++i) {
    const Presentation pres = random_presentation(rng);
    const SimplicialSkeleton sk = build_one_skeleton(pres, 2);
    const GroupWord a = random_kernel_element(rng, sk);
    const GroupWord b = random_kernel_element(rng, sk);
    out.require(peiffer_lifting_check(a, b, sk).ok(), "Peiffer lifting fails for " +
                                                          to_string(a) + ", " + to_string(b));
  }
  if (out.ok) out.detail = std::to_string(checks) + " identity checks; 50 Peiffer pairs";
  return out;
}

std::string dims_to_string(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

Outcome bar_homology(double limit, double& worst) {
  Outcome out;
  struct Case {
    std::uint32_t order, p, q;
    std::vector<std::size_t> want;
  };
  const Case cases[] = {{2, 2, 4, {1, 1, 1, 1, 1}}, {3, 3, 3, {1, 1, 1, 1}}, {2, 3, 4, {1, 0, 0, 0, 0}}};
  worst = 0.0;
  for (const Case& c : cases) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto got = wbar_homology(FiniteGroupTable::cyclic(c.order), c.p, c.q);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    worst = std::max(worst, s);
    const std::string label = "C" + std::to_string(c.order) + ", p=" + std::to_string(c.p);
    out.require(got == c.want, label + " gave " + dims_to_string(got));
    out.require(s < limit, label + " exceeded the time limit");
  }
  if (out.ok) out.detail = "C2/p=2, C3/p=3, C2/p=3 as expected";
  return out;
}

/// Explicit enumeration of compositions, independent of the library's recursion.
std::uint64_t brute_force_e1(const std::vector<std::uint64_t>& h, std::uint32_t n, std::uint32_t m) {
  std::vector<std::uint32_t> parts(n, 0);
  std::uint64_t total = 0;
  while (true) {
    std::uint32_t sum = 0;
    for (auto v : parts) sum += v;
    if (sum == m) {
      std::uint64_t prod = 1;
      for (auto v : parts) prod *= h[v];
      total += prod;
    }
    std::uint32_t i = 0;
    while (i < n && ++parts[i] > m) parts[i++] = 0;
    if (i == n) return total;
  }
}

Outcome e1_kunneth(Rng& rng) {
  Outcome out;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::uint64_t> h(7);
    for (auto& v : h) v = uniform(rng, 0, 5);
    for (std::uint32_t n = 1; n <= 4; ++n)
      for (std::uint32_t m = 0; m <= 6; ++m)
        out.require(e1_dimensions(h, n, m) == brute_force_e1(h, n, m),
                    "mismatch at n=" + std::to_string(n) + ", m=" + std::to_string(m));
  }
  for (std::uint32_t d : {2U, 3U}) {
    const QuotientAlgebra qa = build_quotient(free_presentation(2, d), 6);
    for (std::uint32_t n = 1; n <= 4; ++n)
      out.require(e1_dimensions({d}, n, 0) == qa.b()[n],
                  "E1_{n,0} != b_n at d=" + std::to_string(d) + ", n=" + std::to_string(n));
  }
  if (out.ok) out.detail = "10 random h vectors, n<=4, m<=6; E1_{n,0} = b_n for d=2,3";
  return out;
}

}  // namespace

std::vector<CriterionResult> run_all(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<CriterionResult> results;
  auto run = [&](int id, std::string name, double limit, const std::function<Outcome()>& body) {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    r.limit_seconds = limit;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.passed = o.ok;
    r.detail = o.detail;
    if (r.passed && limit > 0 && r.seconds >= limit) {
      r.passed = false;
      r.detail = "exceeded the time limit";
    }
    results.push_back(std::move(r));
  };

  run(1, "Fox derivatives of x1^p[x2,x1^p]", 1.0, fox_power_commutator);
  run(2, "Fundamental identity of Fox calculus", 0, [&] { return fundamental_identity(rng); });
  run(3, "Magnus multiplicativity and inverse", 0, [&] { return magnus_multiplicativity(rng); });
  run(4, "Free grading b_n = d^n", 5.0, free_grading);
  run(5, "Quotient vanishing for x1^2[x2,x1^2]", 10.0, quotient_vanishing);
  run(6, "Internal rank of x1^2x2^2x3^2x4^2", 5.0, internal_rank);
  run(7, "No epimorphism onto F(2), powers-of-two relator", 60.0, stallings);
  run(8, "Koch equality and quadratic bound", 0, [&] { return koch(rng); });
  run(9, "Simplicial identities and Peiffer lifting", 0, [&] { return simplicial_suite(rng); });
  double worst = 0.0;
  run(10, "Bar homology of cyclic groups", 0, [&] { return bar_homology(10.0, worst); });
  run(11, "E1 term by Kunneth formula", 0, [&] { return e1_kunneth(rng); });
  return results;
}

std::string format_line(const CriterionResult& r) {
  char time[48];
  std::snprintf(time, sizeof time, "%.2f s", r.seconds);
  std::ostringstream out;
  out << (r.passed ? "[PASS] " : "[FAIL] ") << (r.id < 10 ? " " : "") << r.id << "  " << r.name
      << "  (" << time;
  if (r.limit_seconds > 0) {
    char limit[32];
    std::snprintf(limit, sizeof limit, " < %.0f s", r.limit_seconds);
    out << limit;
  }
  out << ")  " << r.detail;
  return out.str();
}

}  // namespace prop::acceptance
