#include <random>

#include "doctest.h"
#include "padicfrob/log_series.hpp"
#include "padicfrob/power_series.hpp"
#include "padicfrob/zeta_poly.hpp"

using namespace padicfrob;

namespace {

RationalSeries random_series(std::mt19937_64& rng, std::size_t order) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
  RationalSeries s(order);
  for (std::size_t i = 0; i < order; ++i) s[i] = Rational(num(rng), den(rng));
  for (std::size_t i = 0; i < order; ++i) s[i].canonicalize();
  return s;
}

LogSeries<Rational> random_log_series(std::mt19937_64& rng, std::size_t order, std::size_t degree) {
  std::vector<RationalSeries> parts;
  for (std::size_t k = 0; k <= degree; ++k) parts.push_back(random_series(rng, order));
  return LogSeries<Rational>(parts, order, Rational(0));
}

LogSeries<Rational> ell_power(std::size_t k, const Rational& c, std::size_t order) {
  std::vector<RationalSeries> parts(k + 1, RationalSeries(order));
  parts[k] = RationalSeries::one(order) * c;
  return LogSeries<Rational>(parts, order, Rational(0));
}

}  // namespace

TEST_CASE("series_invert") {
  RationalSeries f = rational_series({1, -1, 0, 0, 0, 0});
  RationalSeries g = series_invert(f);
  for (std::size_t i = 0; i < 6; ++i) CHECK(g[i] == 1);
  CHECK(series_invert(RationalSeries::one(4)) == RationalSeries::one(4));
  RationalSeries h = series_invert(rational_series({2, 1, 0, 0}));
  CHECK(h[0] == Rational(1, 2));
  CHECK(h[1] == Rational(-1, 4));
  CHECK(h[2] == Rational(1, 8));
  CHECK((h * rational_series({2, 1, 0, 0})) == RationalSeries::one(4));
  CHECK_THROWS_AS(series_invert(rational_series({0, 1})), NonUnitConstantTerm);
}

TEST_CASE("substitute_tp") {
  RationalSeries t = rational_series({0, 1, 0, 0, 0, 0, 0, 0});
  RationalSeries t5 = substitute_tp(t, 5);
  CHECK(t5[5] == 1);
  CHECK(t5.valuation() == 5);
  RationalSeries one_plus_t = rational_series({1, 1, 0, 0, 0, 0, 0});
  RationalSeries s = substitute_tp(one_plus_t, 5);
  CHECK(s == rational_series({1, 0, 0, 0, 0, 1, 0}));
  RationalSeries t2 = RationalSeries::monomial(Rational(1), 2, 10, Rational(0));
  CHECK(theta(substitute_tp(t2, 3))[6] == 6);
  CHECK((substitute_tp(theta(t2), 3) * Rational(3))[6] == 6);
  CHECK(substitute_tp(t, 3, 100).order() == 24);
}

TEST_CASE("exp and log") {
  CHECK(series_exp(RationalSeries(5)) == RationalSeries::one(5));
  RationalSeries l = series_log(rational_series({1, 1, 0, 0, 0, 0}));
  CHECK(l[1] == 1);
  CHECK(l[2] == Rational(-1, 2));
  CHECK(l[3] == Rational(1, 3));
  CHECK(l[5] == Rational(1, 5));
  RationalSeries f = rational_series({1, 1, 1, 0, 0, 0, 0, 0});
  CHECK(series_exp(series_log(f)) == f);
  CHECK_THROWS_AS(series_exp(rational_series({1, 1})), BadConstantTerm);
  CHECK_THROWS_AS(series_log(rational_series({2, 1})), BadConstantTerm);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    RationalSeries g = random_series(rng, 12);
    g[0] = 0;
    CHECK(series_log(series_exp(g)) == g);
  }
}

TEST_CASE("theta on log series") {
  const std::size_t M = 6;
  LogSeries<Rational> ell = ell_power(1, 1, M);
  LogSeries<Rational> r = theta_apply(ell);
  CHECK(r.part(0) == RationalSeries::one(M));
  CHECK(r.part(1).is_zero());
  LogSeries<Rational> half_ell2 = ell_power(2, Rational(1, 2), M);
  LogSeries<Rational> r2 = theta_apply(half_ell2);
  CHECK(r2.part(1) == RationalSeries::one(M));
  CHECK(r2.part(0).is_zero());
  CHECK(r2.part(2).is_zero());
  RationalSeries t = RationalSeries::monomial(Rational(1), 1, M, Rational(0));
  LogSeries<Rational> tl = t * ell;
  LogSeries<Rational> r3 = theta_apply(tl);
  CHECK(r3.part(1) == t);
  CHECK(r3.part(0) == t);
}

TEST_CASE("ring axioms up to truncation") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    RationalSeries a = random_series(rng, 10), b = random_series(rng, 12), c = random_series(rng, 9);
    CHECK(((a * b) * c) == (a * (b * c)));
    CHECK((a * (b + c)) == (a * b + a * c));
    CHECK((a * b) == (b * a));
    CHECK((a + b).order() == 10);
    CHECK((a * c).order() == 9);
  }
}

TEST_CASE("theta is a derivation on log series") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 100; ++i) {
    auto f = random_log_series(rng, 8, i % 3);
    auto g = random_log_series(rng, 8, (i / 3) % 3);
    auto lhs = theta_apply(f * g);
    auto rhs = theta_apply(f) * g + f * theta_apply(g);
    CHECK((lhs - rhs).is_zero());
  }
}

TEST_CASE("substitute_tp is a ring morphism commuting with theta up to p") {
  std::mt19937_64 rng(5);
  for (long p : {2L, 3L, 5L, 7L}) {
    for (int i = 0; i < 10; ++i) {
      RationalSeries a = random_series(rng, 8), b = random_series(rng, 8);
      std::size_t out = 8 * p;
      CHECK(substitute_tp(a * b, p, out) == substitute_tp(a, p, out) * substitute_tp(b, p, out));
      CHECK(substitute_tp(a + b, p, out) == substitute_tp(a, p, out) + substitute_tp(b, p, out));
      CHECK(theta(substitute_tp(a, p, out)) == substitute_tp(theta(a), p, out) * Rational(p));
      auto la = random_log_series(rng, 8, 2);
      auto lhs = theta_apply(substitute_tp(la, p, out));
      auto rhs = substitute_tp(theta_apply(la), p, out) * Rational(p);
      CHECK((lhs - rhs).is_zero());
    }
  }
}

TEST_CASE("padic coefficient field") {
  const long p = 7;
  PadicNum z = PadicNum::exact_zero(p);
  PadicSeries f(6, z);
  f[0] = PadicNum::exact(1, p);
  f[1] = PadicNum::from_rational_abs(Rational(3), p, 10);
  PadicSeries g = series_invert(f);
  PadicSeries prod = f * g;
  CHECK(congruent(prod[0], PadicNum::exact(1, p)));
  for (std::size_t i = 1; i < 6; ++i) CHECK(prod[i].is_zero());
  CHECK(g[5].abs_precision() == 10);
  CHECK_THROWS_AS(series_invert(PadicSeries(3, z)), NonUnitConstantTerm);
}

TEST_CASE("zeta polynomials") {
  ZetaPoly z3 = ZetaPoly::z(3), z5 = ZetaPoly::z(5), z9 = ZetaPoly::z(9);
  CHECK(ZetaPoly::z(4).is_zero());
  CHECK((ZetaPoly(Rational(-8, 25)) * z3).to_string() == "-8/25 * z3");
  CHECK((z3 * z3 * ZetaPoly(Rational(1, 18))).to_string() == "z3^2/18");
  CHECK((z3 * z5 * ZetaPoly(Rational(1, 15))).to_string() == "z3*z5/15");
  CHECK((z3 * ZetaPoly(Rational(-1, 3))).to_string() == "-z3/3");
  ZetaPoly a9 = ZetaPoly(Rational(-1, 9)) * z9 - ZetaPoly(Rational(1, 162)) * z3 * z3 * z3;
  CHECK(a9.to_string() == "-(18*z9 + z3^3)/162");
  CHECK((ZetaPoly(Rational(441, 8192)) * z3 * z3).to_string() == "441/8192 * z3^2");
  CHECK(ZetaPoly(1).to_string() == "1");
  CHECK(ZetaPoly().to_string() == "0");
  CHECK((z3 - z3).is_zero());
  CHECK(ZetaPoly::weight({1, 1}) == 8);
  ZetaSeries e = series_exp(ZetaSeries(std::vector<ZetaPoly>{ZetaPoly(), ZetaPoly(), ZetaPoly(), z3}, ZetaPoly()));
  CHECK(e[3] == z3);
}
