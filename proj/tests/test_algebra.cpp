#include <doctest.h>

#include <nlohmann/json.hpp>

#include "prop/error.hpp"
#include "prop/fpmatrix.hpp"
#include "prop/ncseries.hpp"
#include "support.hpp"

using namespace prop;
using prop::testing::Rng;

TEST_CASE("prime field arithmetic") {
  CHECK_THROWS_AS(PrimeField(1), InputError);
  CHECK_THROWS_AS(PrimeField(9), InputError);
  CHECK_THROWS_AS(PrimeField(65537), InputError);
  const PrimeField f(7);
  CHECK(f.reduce(-1) == 6);
  CHECK(f.reduce(INT64_MIN) == static_cast<Coef>(((INT64_MIN % 7) + 7) % 7));
  for (Coef a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.pow(3, 6) == 1);
  const PrimeField big(kMaxPrime);
  CHECK(big.mul(65520, 65520) == 1);
}

TEST_CASE("generalized binomials agree with Pascal's rule") {
  for (std::uint32_t p : {2U, 3U, 5U, 7U}) {
    const PrimeField f(p);
    for (std::int64_t n = -12; n <= 12; ++n)
      for (std::uint64_t k = 1; k <= 12; ++k)
        CHECK(f.binomial(n, k) == f.add(f.binomial(n - 1, k), f.binomial(n - 1, k - 1)));
    CHECK(f.binomial(5, 0) == 1);
    CHECK(f.binomial(-1, 3) == f.reduce(-1));
  }
}

TEST_CASE("echelon form of a small matrix") {
  const FpMatrix m = FpMatrix::from_rows(3, {{1, 2, 0}, {2, 1, 0}, {0, 0, 1}});
  const EchelonResult e = echelon_rank(m);
  CHECK(e.rank == 2);
  CHECK(e.pivots == std::vector<std::size_t>{0, 2});
  CHECK(e.rref == FpMatrix::from_rows(3, {{1, 2, 0}, {0, 0, 1}, {0, 0, 0}}));
  CHECK(rank(FpMatrix(2, 0, 4)) == 0);
  CHECK_THROWS_AS(FpMatrix::from_rows(2, {{1, 0}, {1}}), InputError);
}

TEST_CASE("rank and kernel on random matrices") {
  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    const std::uint32_t p = i % 2 ? 2 : 5;
    const std::size_t r = prop::testing::uniform(rng, 1, 7);
    const std::size_t c = prop::testing::uniform(rng, 1, 7);
    const FpMatrix m = prop::testing::random_matrix(rng, p, r, c);
    const std::size_t rk = rank(m);
    CHECK(rk == prop::testing::naive_rank(p, m.to_rows()));
    CHECK(rank(m.transposed()) == rk);
    const FpMatrix k = kernel_basis(m);
    CHECK(k.cols() == c - rk);
    CHECK((m * k).is_zero());
    CHECK(rank(k) == k.cols());
  }
}

TEST_CASE("incremental echelon basis matches batch rank") {
  Rng rng(22);
  for (int i = 0; i < 50; ++i) {
    const FpMatrix m = prop::testing::random_matrix(rng, 3, 6, 5);
    EchelonBasis basis(3, 5);
    for (std::size_t r = 0; r < 6; ++r) {
      auto row = m.row(r);
      basis.insert(std::vector<Coef>(row.begin(), row.end()));
    }
    CHECK(basis.rank() == rank(m));
    for (std::size_t r = 0; r < 6; ++r) {
      auto row = m.row(r);
      std::vector<Coef> v(row.begin(), row.end());
      basis.reduce(v);
      CHECK(std::all_of(v.begin(), v.end(), [](Coef c) { return c == 0; }));
    }
  }
}

TEST_CASE("monomial order and rendering") {
  CHECK(Monomial{1} < Monomial{0, 0});
  CHECK(Monomial{0, 1} < Monomial{1, 0});
  CHECK(to_string(Monomial{}) == "1");
  CHECK(to_string(Monomial{0, 1, 1}) == "X1 X2^2");
  CHECK(Monomial{0} * Monomial{1} == Monomial{0, 1});
}

TEST_CASE("series arithmetic truncates past N") {
  const SeriesShape shape{2, 2, 2};
  const auto X = TruncatedSeries::variable(shape, 0);
  const auto Y = TruncatedSeries::variable(shape, 1);
  const auto one = TruncatedSeries::one(shape);
  const auto prod = (one + X) * (one + Y);
  CHECK(prod.coefficient(Monomial{0, 1}) == 1);
  CHECK(prod.coefficient(Monomial{1, 0}) == 0);
  CHECK((X * X * X).is_zero());
  CHECK((X + X).is_zero());
  CHECK(prod.lowest_degree() == 0u);
  CHECK((prod - one).lowest_degree() == 1u);
  CHECK(!TruncatedSeries(shape).lowest_degree().has_value());
  CHECK_THROWS_AS(X + TruncatedSeries::variable({3, 2, 2}, 0), InputError);
}

TEST_CASE("ring axioms on random series") {
  Rng rng(23);
  for (int i = 0; i < 60; ++i) {
    const SeriesShape shape{i % 2 ? 3U : 2U, 4, 2};
    const auto a = prop::testing::random_series(rng, shape, 8);
    const auto b = prop::testing::random_series(rng, shape, 8);
    const auto c = prop::testing::random_series(rng, shape, 8);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
    CHECK(add(a, b) == b + a);
    CHECK(mul(a, TruncatedSeries::one(shape)) == a);
  }
}

TEST_CASE("unit inverse on 100 random units") {
  Rng rng(24);
  for (int i = 0; i < 100; ++i) {
    const std::uint32_t primes[] = {2, 3, 5, 7};
    const SeriesShape shape{primes[i % 4], 5, 3};
    auto a = prop::testing::random_series(rng, shape, 10);
    a += TruncatedSeries::constant(shape, 1 - static_cast<std::int64_t>(a.constant_term()));
    const auto inv = unit_inverse(a);
    CHECK(a * inv == TruncatedSeries::one(shape));
    CHECK(inv * a == TruncatedSeries::one(shape));
  }
  const SeriesShape shape{3, 3, 1};
  CHECK_THROWS_AS(unit_inverse(TruncatedSeries::variable(shape, 0)), InputError);
  CHECK_THROWS_AS(unit_inverse(TruncatedSeries::constant(shape, 2)), InputError);
}

TEST_CASE("series JSON round trip") {
  Rng rng(25);
  for (int i = 0; i < 50; ++i) {
    const SeriesShape shape{5, 4, 3};
    const auto a = prop::testing::random_series(rng, shape, 12);
    const nlohmann::json j = to_json(a);
    CHECK(series_from_json(j) == a);
    CHECK(series_from_json(nlohmann::json::parse(j.dump())) == a);
  }
  CHECK_THROWS_AS(series_from_json(nlohmann::json{{"p", 4}}), InputError);
  CHECK_THROWS_AS(series_from_json(nlohmann::json::parse(
                      R"({"p":2,"N":1,"d":1,"terms":[{"mono":[0,0],"coef":1}]})")),
                  InputError);
}

TEST_CASE("documented series examples") {
  const SeriesShape f2{2, 2, 1};
  const auto X = TruncatedSeries::variable(f2, 0);
  const auto one = TruncatedSeries::one(f2);
  CHECK(((one + X) + (one - X)).is_zero());
  CHECK((one + X) + TruncatedSeries(f2) == one + X);

  const SeriesShape f3{3, 2, 2};
  const auto X3 = TruncatedSeries::variable(f3, 0);
  const auto Y3 = TruncatedSeries::variable(f3, 1);
  const auto one3 = TruncatedSeries::one(f3);
  CHECK((X3 + X3).coefficient(Monomial{0}) == 2);
  CHECK(X3 * Y3 == TruncatedSeries::monomial(f3, Monomial{0, 1}));
  CHECK((one3 + X3) * (one3 - X3 + X3 * X3) == one3);
  CHECK((X3 * X3 * X3).is_zero());
  CHECK(unit_inverse(one3 + X3 + Y3) ==
        one3 - X3 - Y3 + X3 * X3 + X3 * Y3 + Y3 * X3 + Y3 * Y3);
  CHECK(unit_inverse(one3) == one3);

  const SeriesShape f5{5, 6, 1};
  const auto X5 = TruncatedSeries::variable(f5, 0);
  TruncatedSeries alt(f5);
  for (std::uint32_t k = 0; k <= 6; ++k)
    alt.add_term(Monomial::letter(0, k), static_cast<Coef>(k % 2 ? 4 : 1));
  CHECK(unit_inverse(TruncatedSeries::one(f5) + X5) == alt);
}

TEST_CASE("documented rank examples") {
  CHECK(rank(FpMatrix::identity(2, 3)) == 3);
  CHECK(rank(FpMatrix(2, 3, 3)) == 0);
  CHECK(rank(FpMatrix::from_rows(2, {{1, 1}, {1, 1}})) == 1);
}
