#include <doctest.h>

#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "prop/error.hpp"
#include "prop/simplicial.hpp"
#include "support.hpp"

using namespace prop;
using prop::testing::Rng;
using prop::testing::x;

namespace {

using Simplex = std::vector<std::uint32_t>;  // nondecreasing vertex sequence

/// F_p-linearization of the simplicial set generated by a simplicial complex
/// on vertices 0..k, given by its faces as vertex sets.
SimplicialFpModule linearize(const std::set<std::set<std::uint32_t>>& complex, std::uint32_t k,
                             std::uint32_t L, std::uint32_t p) {
  std::vector<std::vector<Simplex>> levels(L + 1);
  std::vector<std::map<Simplex, std::size_t>> index(L + 1);
  for (std::uint32_t n = 0; n <= L; ++n) {
    Simplex s(n + 1, 0);
    while (true) {
      std::set<std::uint32_t> support(s.begin(), s.end());
      if (complex.count(support)) {
        index[n][s] = levels[n].size();
        levels[n].push_back(s);
      }
      // Next nondecreasing sequence.
      std::int64_t i = n;
      while (i >= 0 && s[i] == k) --i;
      if (i < 0) break;
      ++s[i];
      for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j <= n; ++j) s[j] = s[i];
    }
  }
  SimplicialFpModule mod;
  mod.p = p;
  for (const auto& lv : levels) mod.dims.push_back(lv.size());
  mod.faces.resize(L + 1);
  for (std::uint32_t n = 1; n <= L; ++n)
    for (std::uint32_t i = 0; i <= n; ++i) {
      FpMatrix d(p, mod.dims[n - 1], mod.dims[n]);
      for (std::size_t c = 0; c < levels[n].size(); ++c) {
        Simplex t = levels[n][c];
        t.erase(t.begin() + i);
        d(index[n - 1].at(t), c) = 1;
      }
      mod.faces[n].push_back(d);
    }
  mod.degeneracies.resize(L);
  for (std::uint32_t n = 0; n < L; ++n)
    for (std::uint32_t i = 0; i <= n; ++i) {
      FpMatrix s(p, mod.dims[n + 1], mod.dims[n]);
      for (std::size_t c = 0; c < levels[n].size(); ++c) {
        Simplex t = levels[n][c];
        t.insert(t.begin() + i, t[i]);
        s(index[n + 1].at(t), c) = 1;
      }
      mod.degeneracies[n].push_back(s);
    }
  return mod;
}

std::set<std::set<std::uint32_t>> closure(const std::vector<std::set<std::uint32_t>>& facets) {
  std::set<std::set<std::uint32_t>> out;
  for (const auto& f : facets) {
    std::vector<std::uint32_t> v(f.begin(), f.end());
    for (std::uint32_t mask = 1; mask < (1U << v.size()); ++mask) {
      std::set<std::uint32_t> face;
      for (std::size_t b = 0; b < v.size(); ++b)
        if (mask & (1U << b)) face.insert(v[b]);
      out.insert(face);
    }
  }
  return out;
}

/// Homology of the unnormalized complex with boundary sum (-1)^i d_i.
std::vector<std::size_t> unnormalized_homology(const SimplicialFpModule& mod, std::uint32_t q_max) {
  const PrimeField f(mod.p);
  auto boundary_rank = [&](std::uint32_t n) -> std::size_t {
    if (n == 0) return 0;
    FpMatrix sum(mod.p, mod.dims[n - 1], mod.dims[n]);
    for (std::uint32_t i = 0; i <= n; ++i) {
      const FpMatrix& d = mod.faces[n][i];
      for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < d.cols(); ++c)
          sum(r, c) = i % 2 ? f.sub(sum(r, c), d(r, c)) : f.add(sum(r, c), d(r, c));
    }
    return prop::testing::naive_rank(mod.p, sum.to_rows());
  };
  std::vector<std::size_t> h;
  for (std::uint32_t q = 0; q <= q_max; ++q)
    h.push_back(mod.dims[q] - boundary_rank(q) - boundary_rank(q + 1));
  return h;
}

SimplicialFpModule constant_module(std::uint32_t p, std::size_t dim, std::uint32_t L) {
  SimplicialFpModule mod;
  mod.p = p;
  mod.dims.assign(L + 1, dim);
  mod.faces.resize(L + 1);
  for (std::uint32_t n = 1; n <= L; ++n) mod.faces[n].assign(n + 1, FpMatrix::identity(p, dim));
  mod.degeneracies.resize(L);
  for (std::uint32_t n = 0; n < L; ++n) mod.degeneracies[n].assign(n + 1, FpMatrix::identity(p, dim));
  return mod;
}

std::uint64_t brute_force_e1(const std::vector<std::uint64_t>& h, std::uint32_t n, std::uint32_t m) {
  std::uint64_t total = 0;
  std::vector<std::uint32_t> parts(n, 0);
  while (true) {
    std::uint32_t sum = 0;
    std::uint64_t prod = 1;
    for (auto v : parts) sum += v, prod *= h[v];
    if (sum == m) total += prod;
    std::uint32_t i = 0;
    while (i < n && ++parts[i] > m) parts[i++] = 0;
    if (i == n) return total;
  }
}

GroupWord random_kernel_element(Rng& rng, const SimplicialSkeleton& sk) {
  GroupWord w;
  for (std::uint32_t f = prop::testing::uniform(rng, 1, 3); f > 0; --f) {
    const GroupWord c = prop::testing::random_word(rng, sk.num_generators(1), 4);
    const std::uint32_t rel = prop::testing::uniform(rng, 0, sk.num_relators - 1);
    w *= c * x(sk.relator_generator(1, rel, 1), prop::testing::uniform(rng, 0, 1) ? 1 : -1) *
         c.inverse();
  }
  return w;
}

}  // namespace

TEST_CASE("skeleton shape and labels") {
  const Presentation pres = parse_presentation("p=2 gens: x1, x2 rels: x1^2; [x1, x2]");
  const SimplicialSkeleton sk = build_one_skeleton(pres, 3);
  for (std::uint32_t n = 0; n <= 3; ++n) CHECK(sk.num_generators(n) == 2 + 2 * n);
  CHECK(sk.generator_labels(0) == std::vector<std::string>{"x1", "x2"});
  CHECK(sk.generator_labels(1) == std::vector<std::string>{"x1", "x2", "y1_01", "y2_01"});
  CHECK(sk.generator_labels(2) ==
        std::vector<std::string>{"x1", "x2", "y1_011", "y1_001", "y2_011", "y2_001"});
  CHECK_THROWS_AS(build_one_skeleton(pres, 0), InputError);
}

TEST_CASE("level-one faces send y to 1 and to the relator") {
  const Presentation pres = parse_presentation("p=3 gens: a, b rels: a^3 b");
  const SimplicialSkeleton sk = build_one_skeleton(pres, 2);
  const GroupWord y = x(sk.relator_generator(1, 0, 1));
  CHECK(sk.face(1, 0, y).is_identity());
  CHECK(sk.face(1, 1, y) == pres.relators()[0]);
  CHECK(sk.face(1, 0, x(0)) == x(0));
  CHECK(sk.degeneracy(0, 0, x(1)) == x(1));
  CHECK(sk.degeneracy(1, 0, y) == x(sk.relator_generator(2, 0, 2)));
  CHECK(sk.degeneracy(1, 1, y) == x(sk.relator_generator(2, 0, 1)));
  CHECK_THROWS_AS(sk.face(3, 0, y), InputError);
  CHECK_THROWS_AS(sk.degeneracy(2, 0, y), InputError);
}

TEST_CASE("simplicial identities on random presentations") {
  Rng rng(71);
  for (int i = 0; i < 25; ++i) {
    const Presentation pres = prop::testing::random_presentation(rng, 3, 2, 8);
    const std::uint32_t L = prop::testing::uniform(rng, 1, 4);
    const SimplicialSkeleton sk = build_one_skeleton(pres, L);
    for (std::uint32_t n = 0; n <= L; ++n)
      CHECK(sk.num_generators(n) == pres.num_generators() + pres.num_relators() * n);
    const IdentityReport rep = check_simplicial_identities(sk);
    CHECK(rep.checks > 0);
    CHECK(rep.ok());
  }
}

TEST_CASE("a corrupted face map is detected") {
  const Presentation pres = parse_presentation("p=2 gens: x rels: x^2");
  SimplicialSkeleton sk = build_one_skeleton(pres, 3);
  sk.faces[2][1][sk.relator_generator(2, 0, 1)] = x(0);
  const IdentityReport rep = check_simplicial_identities(sk);
  CHECK(!rep.ok());
  CHECK(!rep.violations.front().identity.empty());
}

TEST_CASE("Peiffer commutators and lifting") {
  Rng rng(72);
  for (int i = 0; i < 60; ++i) {
    const Presentation pres = prop::testing::random_presentation(rng, 3, 2, 6);
    const SimplicialSkeleton sk = build_one_skeleton(pres, 2);
    const GroupWord a = random_kernel_element(rng, sk);
    const GroupWord b = random_kernel_element(rng, sk);
    CHECK(peiffer_lifting_check(a, b, sk).ok());
    // Peiffer elements die under d_1.
    CHECK(sk.face(1, 1, peiffer_commutator(a, b, sk)).is_identity());
  }
  const Presentation pres = parse_presentation("p=2 gens: x rels: x^2");
  const SimplicialSkeleton sk = build_one_skeleton(pres, 2);
  const GroupWord y = x(sk.relator_generator(1, 0, 1));
  // In the free level the Peiffer element y x^2 y^-1 x^-2 is nontrivial but is a boundary.
  const GroupWord py = peiffer_commutator(y, y, sk);
  CHECK(py == y * x(0, 2) * y.inverse() * x(0, -2));
  CHECK(sk.face(2, 2, peiffer_lifting(y.inverse(), y.inverse(), sk)) == py.inverse());
  CHECK_THROWS_AS(peiffer_lifting_check(x(0), y, sk), InputError);
  CHECK_THROWS_AS(peiffer_lifting_check(y, y, build_one_skeleton(pres, 1)), InputError);
}

TEST_CASE("skeleton JSON") {
  const SimplicialSkeleton sk = build_one_skeleton(parse_presentation("p=2 gens: x rels: x^2"), 2);
  const nlohmann::json j = to_json(sk);
  CHECK(j["levels"].size() == 3);
  const auto& y = j["levels"][1]["generators"][1];
  CHECK(y["label"] == "y1_01");
  CHECK(y["faces"] == nlohmann::json({"1", "x^2"}));
  CHECK(y["degeneracies"] == nlohmann::json({"y1_001", "y1_011"}));
}

TEST_CASE("Moore homology of simplicial complexes") {
  // Boundary of a triangle: a circle.
  const auto circle = closure({{0, 1}, {1, 2}, {0, 2}});
  CHECK(moore_homology(linearize(circle, 2, 3, 2), 2) == std::vector<std::size_t>{1, 1, 0});
  // Boundary of a tetrahedron: a 2-sphere.
  const auto sphere = closure({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(moore_homology(linearize(sphere, 3, 3, 3), 2) == std::vector<std::size_t>{1, 0, 1});
  // Two points.
  CHECK(moore_homology(linearize(closure({{0}, {2}}), 2, 2, 5), 1) ==
        std::vector<std::size_t>{2, 0});
}

TEST_CASE("Moore homology equals unnormalized homology on random modules") {
  Rng rng(73);
  for (int i = 0; i < 20; ++i) {
    const std::uint32_t k = prop::testing::uniform(rng, 1, 3);
    std::vector<std::set<std::uint32_t>> facets;
    for (std::uint32_t f = prop::testing::uniform(rng, 1, 4); f > 0; --f) {
      std::set<std::uint32_t> face;
      for (std::uint32_t v = 0; v <= k; ++v)
        if (prop::testing::uniform(rng, 0, 1)) face.insert(v);
      if (face.empty()) face.insert(0);
      facets.push_back(face);
    }
    const std::uint32_t p = i % 2 ? 3 : 2;
    const SimplicialFpModule mod = linearize(closure(facets), k, 4, p);
    CHECK_NOTHROW(mod.validate());
    CHECK(moore_homology(mod, 3) == unnormalized_homology(mod, 3));
  }
  const SimplicialFpModule constant = constant_module(5, 3, 4);
  CHECK(moore_homology(constant, 3) == std::vector<std::size_t>{3, 0, 0, 0});
  CHECK(unnormalized_homology(constant, 3) == std::vector<std::size_t>{3, 0, 0, 0});
}

TEST_CASE("module validation") {
  SimplicialFpModule bad = constant_module(2, 2, 2);
  CHECK_THROWS_AS(moore_homology(bad, 2), InputError);
  bad.faces[2][0] = FpMatrix(2, 2, 2);
  CHECK_THROWS_AS(bad.validate(), InputError);
  SimplicialFpModule shape = constant_module(2, 2, 2);
  shape.faces[1].pop_back();
  CHECK_THROWS_AS(shape.validate(), InputError);
}

TEST_CASE("group tables") {
  CHECK(FiniteGroupTable::cyclic(5).order() == 5);
  CHECK(FiniteGroupTable::cyclic(5).mul(3, 4) == 2);
  const auto g = FiniteGroupTable::from_json(nlohmann::json::parse(
      R"({"order": 2, "table": [[1, 0], [0, 1]]})"));
  CHECK(g.identity() == 1);
  CHECK_THROWS_AS(FiniteGroupTable({{0, 1}, {1, 1}}), InputError);
  CHECK_THROWS_AS(FiniteGroupTable({{0, 1}}), InputError);
  CHECK_THROWS_AS(FiniteGroupTable({{0, 2}, {1, 0}}), InputError);
  CHECK_THROWS_AS(FiniteGroupTable({}), InputError);
  // Latin square with identity 0 that is not associative.
  CHECK_THROWS_AS(FiniteGroupTable({{0, 1, 2, 3, 4},
                                    {1, 0, 3, 4, 2},
                                    {2, 4, 0, 1, 3},
                                    {3, 2, 4, 0, 1},
                                    {4, 3, 1, 2, 0}}),
                  InputError);
  CHECK_THROWS_AS(FiniteGroupTable::from_json(nlohmann::json::parse(R"({"order": 3, "table": [[0]]})")),
                  InputError);
  CHECK_THROWS_AS(FiniteGroupTable::from_json(nlohmann::json::parse(R"({"table": "x"})")), InputError);
}

TEST_CASE("bar homology of small groups") {
  CHECK(wbar_homology(FiniteGroupTable::cyclic(2), 2, 4) == std::vector<std::size_t>{1, 1, 1, 1, 1});
  CHECK(wbar_homology(FiniteGroupTable::cyclic(3), 3, 3) == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(wbar_homology(FiniteGroupTable::cyclic(2), 3, 4) == std::vector<std::size_t>{1, 0, 0, 0, 0});
  CHECK(wbar_homology(FiniteGroupTable::cyclic(4), 2, 3) == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(wbar_homology(FiniteGroupTable::cyclic(1), 7, 3) == std::vector<std::size_t>{1, 0, 0, 0});
  // C_2 x C_2 over F_2: dims q + 1.
  const FiniteGroupTable klein({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  CHECK(wbar_homology(klein, 2, 3) == std::vector<std::size_t>{1, 2, 3, 4});
  for (std::uint32_t order = 1; order <= 5; ++order)
    CHECK(wbar_homology(FiniteGroupTable::cyclic(order), 5, 2).front() == 1);
}

TEST_CASE("bar homology guardrail") {
  CHECK_THROWS_AS(wbar_homology(FiniteGroupTable::cyclic(10), 2, 6), GuardrailError);
  CHECK_THROWS_AS(wbar_homology(FiniteGroupTable::cyclic(2), 4, 1), InputError);
}

TEST_CASE("E1 dimensions") {
  CHECK(e1_dimensions({2, 1}, 2, 1) == 4);
  CHECK(e1_dimensions({3, 1, 4, 1}, 1, 3) == 1);
  for (std::uint64_t d = 1; d <= 3; ++d)
    for (std::uint32_t n = 1; n <= 5; ++n) {
      std::uint64_t dn = 1;
      for (std::uint32_t k = 0; k < n; ++k) dn *= d;
      CHECK(e1_dimensions({d}, n, 0) == dn);
    }
  Rng rng(74);
  for (int i = 0; i < 20; ++i) {
    std::vector<std::uint64_t> h(7);
    for (auto& v : h) v = prop::testing::uniform(rng, 0, 4);
    for (std::uint32_t n = 1; n <= 4; ++n)
      for (std::uint32_t m = 0; m <= 6; ++m) CHECK(e1_dimensions(h, n, m) == brute_force_e1(h, n, m));
  }
  CHECK_THROWS_AS(e1_dimensions({1, 1}, 0, 1), InputError);
  CHECK_THROWS_AS(e1_dimensions({1, 1}, 2, 2), InputError);
  CHECK_THROWS_AS(e1_dimensions({1u << 31, 1u << 31}, 3, 0), InputError);
}
