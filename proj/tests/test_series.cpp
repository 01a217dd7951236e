#include <doctest.h>

#include <random>

#include "isoperiod/errors.hpp"
#include "isoperiod/series.hpp"

using namespace isoperiod;

namespace {

TruncatedSeries from_ints(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (long c : cs) v.emplace_back(c);
  return TruncatedSeries(std::move(v));
}

// Random series with c0 = 0, c1 != 0, small rational coefficients.
TruncatedSeries random_invertible(std::mt19937& rng, std::size_t order) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 6);
  std::vector<Rational> cs(order + 1, Rational(0));
  do {
    cs[1] = Rational(num(rng), den(rng));
  } while (cs[1] == 0);
  for (std::size_t i = 2; i <= order; ++i) cs[i] = Rational(num(rng), den(rng));
  return TruncatedSeries(std::move(cs));
}

TruncatedSeries random_series(std::mt19937& rng, std::size_t order) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 6);
  std::vector<Rational> cs(order + 1);
  for (auto& c : cs) c = Rational(num(rng), den(rng));
  return TruncatedSeries(std::move(cs));
}

}  // namespace

TEST_CASE("product examples") {
  CHECK(series_mul(from_ints({1, 1, 0}), from_ints({1, -1, 0})) ==
        from_ints({1, 0, -1}));
  TruncatedSeries s = from_ints({3, -2, 5, 7});
  CHECK(series_mul(TruncatedSeries::constant(1, 3), s) == s);
  CHECK(series_mul(from_ints({1, 1, 1}), from_ints({1, 1, 0})) ==
        from_ints({1, 2, 2}));
}

TEST_CASE("product truncates to the smaller order") {
  TruncatedSeries a = from_ints({1, 1});
  TruncatedSeries b = from_ints({1, 1, 1, 1});
  CHECK((a * b).order() == 1);
  CHECK((a * b) == from_ints({1, 2}));
}

TEST_CASE("compose examples") {
  CHECK(series_compose(from_ints({1, 1}), from_ints({0, 2})) == from_ints({1, 2}));
  TruncatedSeries f = from_ints({2, -1, 3, 5});
  CHECK(series_compose(f, TruncatedSeries::identity(3)) == f);
  // Inner is the order-4 reversion of t + t^2; composition collapses to t.
  CHECK(series_compose(from_ints({0, 1, 1, 0, 0}),
                       from_ints({0, 1, -1, 2, -5})) == from_ints({0, 1, 0, 0, 0}));
  CHECK_THROWS_AS(series_compose(from_ints({0, 1}), from_ints({1, 1})),
                  NonzeroConstantInner);
}

TEST_CASE("reversion examples") {
  CHECK(series_reversion(TruncatedSeries::identity(6)) ==
        TruncatedSeries::identity(6));
  // Signed Catalan numbers.
  CHECK(series_reversion(from_ints({0, 1, 1, 0, 0})) == from_ints({0, 1, -1, 2, -5}));
  CHECK(series_reversion(from_ints({0, 1, 0, 1, 0, 0})) ==
        from_ints({0, 1, 0, -1, 0, 3}));
  CHECK_THROWS_AS(series_reversion(from_ints({1, 1})), NotInvertible);
  CHECK_THROWS_AS(series_reversion(from_ints({0, 0, 1})), NotInvertible);
}

TEST_CASE("compose-reversion identity on random series") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    TruncatedSeries f = random_invertible(rng, 8);
    TruncatedSeries g = series_reversion(f);
    CHECK(series_compose(f, g) == TruncatedSeries::identity(8));
    CHECK(series_compose(g, f) == TruncatedSeries::identity(8));
  }
}

TEST_CASE("product is commutative and associative") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    TruncatedSeries a = random_series(rng, 7);
    TruncatedSeries b = random_series(rng, 7);
    TruncatedSeries c = random_series(rng, 7);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("powhalf reciprocal examples") {
  CHECK(series_powhalf_reciprocal(TruncatedSeries(3)) ==
        TruncatedSeries::constant(1, 3));
  TruncatedSeries w = series_powhalf_reciprocal(TruncatedSeries::identity(3));
  CHECK(w == TruncatedSeries({Rational(1), rat(-1, 2), rat(3, 8), rat(-5, 16)}));
  CHECK_THROWS_AS(series_powhalf_reciprocal(from_ints({1, 1})), NonzeroConstantInner);
}

TEST_CASE("powhalf defining identity w^2 (1+u) = 1") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    TruncatedSeries u = random_series(rng, 8);
    u[0] = 0;
    TruncatedSeries w = series_powhalf_reciprocal(u);
    TruncatedSeries one_plus_u = u;
    one_plus_u[0] = 1;
    CHECK(w * w * one_plus_u == TruncatedSeries::constant(1, 8));
    // sqrt(1+u)^2 = 1 + u as well.
    TruncatedSeries s = series_sqrt1p(u);
    CHECK(s * s == one_plus_u);
  }
}

TEST_CASE("reciprocal and derivative") {
  TruncatedSeries g = from_ints({1, 1, 0, 0});  // 1/(1+t) = 1 - t + t^2 - t^3
  CHECK(g.reciprocal() == from_ints({1, -1, 1, -1}));
  CHECK_THROWS_AS(from_ints({0, 1}).reciprocal(), NotInvertible);
  CHECK(from_ints({5, 1, 3, 2}).derivative() == from_ints({1, 6, 6}));
}

TEST_CASE("float projection") {
  TruncatedSeries f = from_ints({1, 2, 3});
  CHECK(f.eval(0.5) == doctest::Approx(1 + 1 + 0.75));
}
