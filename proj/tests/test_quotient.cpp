#include <doctest.h>

#include <nlohmann/json.hpp>

#include "prop/error.hpp"
#include "prop/fox.hpp"
#include "prop/magnus.hpp"
#include "prop/quotient.hpp"
#include "support.hpp"

using namespace prop;
using prop::testing::Rng;
using prop::testing::x;

namespace {

std::vector<Monomial> monomials_up_to(std::uint32_t d, std::uint32_t n) {
  std::vector<Monomial> out{Monomial{}};
  std::vector<Monomial> layer{Monomial{}};
  for (std::uint32_t k = 1; k <= n; ++k) {
    std::vector<Monomial> next;
    for (const Monomial& m : layer)
      for (std::uint32_t l = 0; l < d; ++l) next.push_back(m * Monomial{l});
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

/// c_n = dim A/(J + I^{n+1}) from the rank of every product u (r - 1) v
/// truncated at degree n, using a separate elimination routine.
std::vector<std::uint64_t> oracle_b(const Presentation& pres, std::uint32_t N) {
  const std::uint32_t d = pres.num_generators();
  const std::uint32_t p = pres.prime();
  std::vector<std::uint64_t> c(N + 1);
  for (std::uint32_t n = 0; n <= N; ++n) {
    const auto monos = monomials_up_to(d, n);
    std::map<Monomial, std::size_t> col;
    for (std::size_t i = 0; i < monos.size(); ++i) col[monos[i]] = i;
    const SeriesShape shape{p, n, d};
    std::vector<std::vector<std::int64_t>> rows;
    for (const GroupWord& r : pres.relators()) {
      const TruncatedSeries rho = magnus_expand(r, p, n, d) - TruncatedSeries::one(shape);
      for (const Monomial& u : monos)
        for (const Monomial& v : monos) {
          if (u.degree() + v.degree() > n) continue;
          std::vector<std::int64_t> row(monos.size(), 0);
          for (const auto& [m, coef] : rho.terms())
            if (u.degree() + m.degree() + v.degree() <= n) row[col[u * m * v]] = coef;
          rows.push_back(std::move(row));
        }
    }
    c[n] = monos.size() - (rows.empty() ? 0 : prop::testing::naive_rank(p, rows));
  }
  std::vector<std::uint64_t> b(N + 1);
  for (std::uint32_t n = 0; n <= N; ++n) b[n] = c[n] - (n ? c[n - 1] : 0);
  return b;
}

std::vector<std::uint64_t> powers(std::uint64_t d, std::uint32_t N) {
  std::vector<std::uint64_t> v{1};
  for (std::uint32_t n = 1; n <= N; ++n) v.push_back(v.back() * d);
  return v;
}

Presentation ex5(std::uint32_t p) {
  const auto ip = static_cast<std::int64_t>(p);
  return Presentation(p, default_generator_names(2), {x(0, ip) * commutator(x(1), x(0, ip))});
}

}  // namespace

TEST_CASE("monomial index") {
  const MonomialIndex idx(2, 3);
  CHECK(idx.size() == 15);
  CHECK(idx.offset(2) == 3);
  for (std::size_t i = 0; i < idx.size(); ++i) CHECK(idx.index_of(idx.monomial_at(i)) == i);
  CHECK(idx.degree_of(14) == 3);
  CHECK(MonomialIndex::ambient_dimension(1, 5) == 6);
  CHECK(MonomialIndex::ambient_dimension(3, 6) == 1093);
  CHECK(MonomialIndex::ambient_dimension(1000, 1000) == UINT64_MAX);
}

TEST_CASE("free grading is d^n") {
  for (std::uint32_t d = 1; d <= 3; ++d) {
    const auto qa = build_quotient(Presentation(3, default_generator_names(d), {}), 5);
    CHECK(qa.b() == powers(d, 5));
    CHECK(qa.ideal_dimension() == 0);
  }
  const auto qa = build_quotient(Presentation(2, default_generator_names(2), {}), 3);
  CHECK(qa.b() == std::vector<std::uint64_t>{1, 2, 4, 8});
  CHECK(qa.c() == std::vector<std::uint64_t>{1, 3, 7, 15});
}

TEST_CASE("group algebras of cyclic p-groups") {
  CHECK(build_quotient(Presentation(2, {"x"}, {x(0, 2)}), 3).b() ==
        std::vector<std::uint64_t>{1, 1, 0, 0});
  CHECK(build_quotient(Presentation(2, {"x"}, {x(0, 4)}), 5).b() ==
        std::vector<std::uint64_t>{1, 1, 1, 1, 0, 0});
  CHECK(build_quotient(Presentation(3, {"x"}, {x(0, 3)}), 4).b() ==
        std::vector<std::uint64_t>{1, 1, 1, 0, 0});
  // C_2 x C_2 has group algebra F_2[X,Y]/(X^2,Y^2).
  const Presentation klein(2, {"a", "b"}, {x(0, 2), x(1, 2), commutator(x(0), x(1))});
  CHECK(build_quotient(klein, 4).b() == std::vector<std::uint64_t>{1, 2, 1, 0, 0});
}

TEST_CASE("the x1^2 [x2, x1^2] group has the grading of C_2 * Z_2") {
  const auto qa = build_quotient(ex5(2), 6);
  const auto free_product = build_quotient(Presentation(2, default_generator_names(2), {x(0, 2)}), 6);
  CHECK(qa.b() == free_product.b());
  CHECK(qa.b() == std::vector<std::uint64_t>{1, 2, 3, 5, 8, 13, 21});
}

TEST_CASE("quotient dimensions agree with a truncate-and-rank oracle") {
  Rng rng(41);
  for (int i = 0; i < 25; ++i) {
    const Presentation pres = prop::testing::random_presentation(rng, 2, 2, 6);
    CHECK(build_quotient(pres, 4).b() == oracle_b(pres, 4));
  }
  CHECK(build_quotient(ex5(2), 5).b() == oracle_b(ex5(2), 5));
}

TEST_CASE("projections in the x1^p [x2, x1^p] quotient") {
  for (std::uint32_t p : {2U, 3U}) {
    const Presentation pres = ex5(p);
    const auto qa = build_quotient(pres, 6);
    const GroupWord r = pres.relators().front();
    const auto one = GroupRingElement::one(p);
    CHECK(is_zero_in_quotient(fox_derivative(r, 1, p, 2), qa));
    CHECK(is_zero_in_quotient(GroupRingElement(p, x(0, p)) - one, qa));
    GroupRingElement geo(p);
    for (std::uint32_t k = 0; k < p; ++k) geo += GroupRingElement(p, x(0, k));
    const auto expected = (one.scaled(2) - GroupRingElement(p, x(1, -1))) * geo;
    CHECK(is_zero_in_quotient(fox_derivative(r, 0, p, 2) - expected, qa));
    CHECK(is_zero_in_quotient(magnus_expand(r, p, 6, 2) - TruncatedSeries::one({p, 6, 2}), qa));
    CHECK(!is_zero_in_quotient(TruncatedSeries::variable({p, 6, 2}, 1), qa));
  }
}

TEST_CASE("projection of 1 is the degree-0 unit") {
  const auto qa = build_quotient(ex5(2), 4);
  const Projection proj = project(TruncatedSeries::one({2, 4, 2}), qa);
  REQUIRE(proj.size() == 5);
  CHECK(proj[0] == std::vector<Coef>{1});
  for (std::uint32_t n = 1; n <= 4; ++n)
    CHECK(std::all_of(proj[n].begin(), proj[n].end(), [](Coef c) { return c == 0; }));
  CHECK(valuation_in_quotient(TruncatedSeries::variable({2, 4, 2}, 0), qa) == Valuation::exact(1));
  CHECK(valuation_in_quotient(TruncatedSeries({2, 4, 2}), qa) == Valuation::at_least(5));
  CHECK_THROWS_AS(project(TruncatedSeries::one({3, 4, 2}), qa), InputError);
}

TEST_CASE("project is linear") {
  Rng rng(42);
  const Presentation pres(3, default_generator_names(2), {x(0, 3), commutator(x(0), x(1))});
  const auto qa = build_quotient(pres, 4);
  const SeriesShape shape{3, 4, 2};
  const PrimeField f(3);
  for (int i = 0; i < 40; ++i) {
    const auto a = prop::testing::random_series(rng, shape, 8);
    const auto b = prop::testing::random_series(rng, shape, 8);
    const Projection pa = project(a, qa), pb = project(b, qa), ps = project(a + b, qa);
    for (std::size_t n = 0; n < ps.size(); ++n)
      for (std::size_t k = 0; k < ps[n].size(); ++k) CHECK(ps[n][k] == f.add(pa[n][k], pb[n][k]));
    CHECK(is_zero_in_quotient(a - b, qa) == (pa == pb));
  }
}

TEST_CASE("adding a relator never increases b_n") {
  Rng rng(43);
  for (int i = 0; i < 20; ++i) {
    const Presentation base = prop::testing::random_presentation(rng, 3, 1, 6);
    std::vector<GroupWord> more = base.relators();
    more.push_back(prop::testing::random_nontrivial_word(rng, base.num_generators(), 6));
    const Presentation bigger(base.prime(), base.generator_names(), more);
    const auto b0 = build_quotient(base, 4).b();
    const auto b1 = build_quotient(bigger, 4).b();
    for (std::size_t n = 0; n < b0.size(); ++n) CHECK(b1[n] <= b0[n]);
  }
}

TEST_CASE("conjugating a relator does not change the grading") {
  Rng rng(44);
  for (int i = 0; i < 20; ++i) {
    const Presentation pres = prop::testing::random_presentation(rng, 3, 2, 6);
    std::vector<GroupWord> conj;
    for (const GroupWord& r : pres.relators()) {
      const GroupWord u = prop::testing::random_word(rng, pres.num_generators(), 5);
      conj.push_back(u * r * u.inverse());
    }
    const Presentation other(pres.prime(), pres.generator_names(), conj);
    CHECK(build_quotient(pres, 4).b() == build_quotient(other, 4).b());
  }
}

TEST_CASE("invariants, warnings and guardrails") {
  const auto qa = build_quotient(Presentation(2, {"x"}, {x(0, 8)}), 3);
  CHECK(qa.b() == std::vector<std::uint64_t>{1, 1, 1, 1});
  CHECK(qa.warnings().size() == 1);
  CHECK_THROWS_AS(build_quotient(Presentation(2, {"x"}, {}), 0), InputError);
  CHECK_THROWS_AS(build_quotient(Presentation(2, default_generator_names(4), {}), 11),
                  GuardrailError);
  const nlohmann::json j = to_json(build_quotient(Presentation(2, {"x", "y"}, {}), 2));
  CHECK(j["b"] == nlohmann::json({1, 2, 4}));
  CHECK(j["exact_through"] == 2);
}
