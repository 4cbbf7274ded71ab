#include "doctest.h"
#include "padicfrob/errors.hpp"
#include "padicfrob/frobenius.hpp"
#include "padicfrob/zeta_gamma.hpp"

using namespace padicfrob;

namespace {

MumOperator order_one_example() {
  MumOperator L;
  L.n = 1;
  L.coeffs = {{BigInt(0), BigInt(-1)}, {BigInt(1), BigInt(-1)}};
  return L;
}

std::vector<PadicNum> numeric_alpha(const std::vector<ZetaPoly>& symbolic, int n, long p, int N) {
  std::vector<PadicNum> a;
  for (int j = 0; j < n; ++j) a.push_back(evaluate_zeta_poly(symbolic[j], p, N));
  return a;
}

std::vector<Rational> coset_rationals(const AffineCoset& c) {
  std::vector<Rational> r;
  for (const auto& x : c.representative) r.push_back(Rational(x));
  return r;
}

}  // namespace

TEST_CASE("order-one closed form") {
  for (long p : {3L, 5L, 7L}) {
    FrobeniusDecomposition dec = solve_A_series(order_one_example(), p, 30);
    for (std::size_t m = 0; m < 30; ++m) CHECK(dec.slots[0][0][m] == (m < static_cast<std::size_t>(p) ? 1 : 0));
    CHECK(verify_frobenius_property(dec, {PadicNum::exact(1, p)}, 30).ok);
    AffineCoset c = recover_alpha(dec, p, 30);
    CHECK(c.representative.empty());
  }
}

TEST_CASE("simplicial n=4 decomposition at p=7") {
  const long p = 7;
  const std::size_t M = 70;
  const int n = 4;
  FrobeniusDecomposition dec = solve_A_series(simplicial_operator(n), p, M);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) CHECK(dec.slots[k][j][0] == (j == k ? 1 : 0));

  auto alpha = numeric_alpha(alpha_simplicial(n), n, p, 12);
  auto A = assemble(dec, alpha);
  for (int j = 0; j < n; ++j) CHECK(congruent(A[j][0], alpha[j]));

  FrobeniusCheck ok = verify_frobenius_property(dec, alpha, M);
  CHECK(ok.ok);

  FrobeniusDecomposition broken = dec;
  broken.slots[0][2][11] += Rational(1, 3);
  FrobeniusCheck bad = verify_frobenius_property(broken, alpha, M);
  CHECK_FALSE(bad.ok);
  CHECK(bad.t_degree >= 11);

  IntegralityReport rep = check_integrality(dec, alpha, p, M);
  CHECK(rep.integral);
  CHECK(rep.entries.size() == n * M);
  CHECK(*rep.min_valuation >= 0);
  std::string js = rep.to_json();
  CHECK(js.rfind("{\"p\":7,\"M\":70,\"verdict\":\"integral\"", 0) == 0);

  // Raising M keeps the verdict.
  FrobeniusDecomposition dec100 = solve_A_series(simplicial_operator(n), p, 100);
  CHECK(check_integrality(dec100, alpha, p, 100).integral);

  // A low-precision alpha leaves coefficients undecided.
  std::vector<PadicNum> rough = alpha;
  rough[1] = PadicNum::zero(p, 1);
  CHECK_THROWS_AS(check_integrality(dec, rough, p, M), PrecisionExhausted);

  AffineCoset coset = recover_alpha(dec, p, M);
  CongruenceSystem sys = integrality_conditions(dec, M);
  CHECK(satisfies(sys, coset_rationals(coset)));
  CHECK(coset.exponent[0] >= 1);
  CHECK(coset.representative[0] % prime_power(p, coset.exponent[0]) == 0);
}

TEST_CASE("recovered cosets contain the closed forms") {
  for (long p : {7L, 11L}) {
    for (int family = 0; family < 2; ++family) {
      const int n = 3;
      MumOperator L = family == 0 ? simplicial_operator(n) : hyperoctahedral_operator(n);
      auto symbolic = family == 0 ? alpha_simplicial(n) : alpha_hyperoctahedral(n - 1);
      const std::size_t M = 10 * p;
      FrobeniusDecomposition dec = solve_A_series(L, p, M);
      AffineCoset coset = recover_alpha(dec, p, M);
      for (int k = 1; k < n; ++k) {
        PadicNum closed = evaluate_zeta_poly(symbolic[k], p, 12);
        int e = coset.exponent[k - 1];
        if (e == 0) continue;
        PadicNum rep = PadicNum::from_rational_abs(Rational(coset.representative[k - 1]), p, e);
        CHECK(congruent(rep, closed.with_abs_precision(e)));
      }
      auto alpha = numeric_alpha(symbolic, n, p, 12);
      CHECK(check_integrality(dec, alpha, p, M).integral);
    }
  }
}

TEST_CASE("non-uniqueness witness") {
  const long p = 7;
  const std::size_t M = 40;
  MumOperator L = simplicial_operator(2);
  StandardBasis B = standard_basis(L, M);
  // The Wronskian of this operator is 1/(1 - 27 t^3).
  RationalSeries W = wronskian(B);
  RationalSeries D = series_from_poly<Rational>({BigInt(1), BigInt(0), BigInt(0), BigInt(-27)}, M, Rational(0));
  CHECK(W * D == RationalSeries::one(M));
  CHECK(nonuniqueness_witness(L, p, Rational(0), M));
  CHECK(nonuniqueness_witness(L, p, Rational(1), M));
  CHECK(nonuniqueness_witness(L, p, Rational(2), M));
  RationalSeries wrong = W;
  wrong[3] += 7;
  CHECK_FALSE(nonuniqueness_witness(L, p, Rational(1), M, wrong));
  RationalSeries non_unit = W * Rational(7);
  CHECK_THROWS_AS(nonuniqueness_witness(L, p, Rational(1), M, non_unit), NonUnitWronskian);
}
