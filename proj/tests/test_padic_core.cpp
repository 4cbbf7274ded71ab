#include <algorithm>
#include <random>

#include "doctest.h"
#include "padicfrob/combinatorics.hpp"
#include "padicfrob/congruence.hpp"
#include "padicfrob/errors.hpp"
#include "padicfrob/padic.hpp"

using namespace padicfrob;

TEST_CASE("padic_from_rational examples") {
  PadicNum half = padic_from_rational(Rational(1, 2), 5, 4);
  CHECK(half.valuation() == 0);
  CHECK(half.unit() == 313);
  CHECK((half.unit() * 2) % 625 == 1);

  PadicNum ten = padic_from_rational(Rational(10), 5, 4);
  CHECK(ten.valuation() == 1);
  CHECK(ten.unit() == 2);

  PadicNum z = padic_from_rational(Rational(0), 7, 8);
  CHECK(z.is_exact_zero());
  CHECK(z.valuation() == kInfiniteValuation);

  PadicNum neg = padic_from_rational(Rational(3, 25), 5, 3);
  CHECK(neg.valuation() == -2);
  CHECK(neg.abs_precision() == 1);
}

TEST_CASE("padic round trip on random rationals") {
  std::mt19937_64 rng(20241014);
  std::uniform_int_distribution<long> dist(1, 1'000'000);
  const long p = 7;
  const int N = 20;
  for (int i = 0; i < 200; ++i) {
    long a = dist(rng), b = dist(rng);
    if (i % 2) a = -a;
    Rational q(a, b);
    q.canonicalize();
    PadicNum x = padic_from_rational(q, p, N);
    PadicNum y = padic_from_rational(1 / q, p, N);
    PadicNum prod = x * y;
    CHECK(prod.valuation() == 0);
    CHECK(prod.rel_precision() == N);
    CHECK(congruent(prod, PadicNum::exact(Rational(1), p)));
  }
}

TEST_CASE("padic precision propagation") {
  const long p = 5;
  PadicNum a = PadicNum::from_rational_abs(Rational(7), p, 6);
  PadicNum b = PadicNum::from_rational_abs(Rational(3), p, 4);
  CHECK((a + b).abs_precision() == 4);
  PadicNum c = PadicNum::from_rational(Rational(50), p, 5);  // 2 * 5^2, rel precision 5
  PadicNum d = a * c;
  CHECK(d.valuation() == 2);
  CHECK(d.rel_precision() == 5);
  PadicNum e = a / c;
  CHECK(e.valuation() == -2);
  CHECK(e.abs_precision() == 3);
  CHECK_THROWS_AS(a / PadicNum::exact_zero(p), DivisionByZero);
  PadicNum cancel = PadicNum::from_rational_abs(Rational(1), p, 4) - PadicNum::from_rational_abs(Rational(626), p, 6);
  CHECK(cancel.is_zero());
  CHECK(cancel.abs_precision() == 4);
  CHECK_THROWS_AS(a + PadicNum::exact(Rational(1), 7), PrimeMismatch);
}

static Rational bernoulli_by_recurrence(unsigned n, std::vector<Rational>& memo) {
  while (memo.size() <= n) {
    unsigned m = static_cast<unsigned>(memo.size());
    Rational s(0);
    for (unsigned k = 0; k < m; ++k) s += Rational(binomial(m + 1, k)) * memo[k];
    memo.push_back(m == 0 ? Rational(1) : -s / (m + 1));
  }
  return memo[n];
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  CHECK(bernoulli(7) == 0);
  std::vector<Rational> memo;
  for (unsigned n = 0; n <= 80; ++n) CHECK(bernoulli(n) == bernoulli_by_recurrence(n, memo));
  for (unsigned n = 1; n <= 60; ++n) {
    Rational s(0);
    for (unsigned k = 0; k <= n; ++k) s += Rational(binomial(n + 1, k)) * bernoulli(k);
    CHECK(s == 0);
  }
}

TEST_CASE("stirling numbers of the second kind") {
  CHECK(stirling2(3, 2) == 3);
  for (unsigned m = 0; m <= 12; ++m) CHECK(stirling2(m, m) == 1);
  CHECK(stirling2(4, 0) == 0);
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(2, 5) == 0);
  // x^m = sum_k S(m,k) [x]_k as coefficient vectors.
  for (unsigned m = 0; m <= 12; ++m) {
    std::vector<BigInt> acc(m + 1, BigInt(0));
    for (unsigned k = 0; k <= m; ++k) {
      auto ff = falling_factorial_coeffs(k);
      for (std::size_t i = 0; i < ff.size(); ++i) acc[i] += stirling2(m, k) * ff[i];
    }
    for (unsigned i = 0; i <= m; ++i) CHECK(acc[i] == (i == m ? 1 : 0));
  }
}

TEST_CASE("multinomial") {
  CHECK(multinomial({2, 2, 0}) == 6);
  CHECK(multinomial({1, -1, 4}) == 0);
  CHECK(multinomial({1, 1, 1, 1, 1}) == 120);
  std::vector<long> parts{3, 1, 4, 1, 5};
  BigInt ref = multinomial(parts);
  std::sort(parts.begin(), parts.end());
  do {
    CHECK(multinomial(parts) == ref);
  } while (std::next_permutation(parts.begin(), parts.end()));
}

TEST_CASE("falling factorial") {
  CHECK(falling_factorial(BigInt(5), 3) == 60);
  CHECK(falling_factorial(BigInt(7), 0) == 1);
  CHECK(falling_factorial(BigInt(2), 4) == 0);
  CHECK(falling_factorial(Rational(1, 2), 2) == Rational(-1, 4));
}

TEST_CASE("affine congruences") {
  SUBCASE("single condition") {
    CongruenceSystem sys{5, 1, {}};
    sys.add(Rational(1, 5), {Rational(1, 5)});
    AffineCoset c = solve_affine_congruences(sys);
    CHECK(c.exponent[0] == 1);
    CHECK(c.representative[0] == 4);
  }
  SUBCASE("tower of conditions") {
    CongruenceSystem sys{5, 1, {}};
    sys.add(Rational(-2, 5), {Rational(1, 5)});
    sys.add(Rational(-7, 25), {Rational(1, 25)});
    AffineCoset c = solve_affine_congruences(sys);
    CHECK(c.exponent[0] == 2);
    CHECK(c.representative[0] == 7);
  }
  SUBCASE("contradiction") {
    CongruenceSystem sys{5, 2, {}};
    sys.add(Rational(1, 5), {Rational(1, 5), Rational(1, 5)});
    sys.add(Rational(0), {Rational(3), Rational(0)});  // always fine
    sys.add(Rational(2, 5), {Rational(1, 5), Rational(1, 5)});
    try {
      solve_affine_congruences(sys);
      FAIL("expected Inconsistent");
    } catch (const Inconsistent& e) {
      CHECK(e.condition_index() == 2);
    }
  }
  SUBCASE("free coordinate") {
    CongruenceSystem sys{7, 2, {}};
    sys.add(Rational(3, 49), {Rational(1, 49), Rational(0)});
    AffineCoset c = solve_affine_congruences(sys);
    CHECK(c.exponent[0] == 2);
    CHECK(c.representative[0] == 46);
    CHECK(c.exponent[1] == 0);
  }
}

TEST_CASE("affine congruence solutions satisfy the system") {
  std::mt19937_64 rng(7);
  const long p = 5;
  std::uniform_int_distribution<long> small(-30, 30);
  std::uniform_int_distribution<int> den(0, 3);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t k = 1 + trial % 3;
    std::vector<Rational> hidden;
    for (std::size_t i = 0; i < k; ++i) hidden.push_back(Rational(small(rng)));
    CongruenceSystem sys{p, k, {}};
    for (int c = 0; c < 5; ++c) {
      std::vector<Rational> coeffs;
      Rational dot(0);
      for (std::size_t i = 0; i < k; ++i) {
        Rational x(small(rng), prime_power(p, den(rng)).get_ui());
        x.canonicalize();
        coeffs.push_back(x);
        dot += x * hidden[i];
      }
      Rational noise(small(rng));
      sys.add(noise - dot, coeffs);
    }
    AffineCoset coset = solve_affine_congruences(sys);
    std::vector<Rational> rep;
    for (auto& r : coset.representative) rep.push_back(Rational(r));
    CHECK(satisfies(sys, rep));
    CHECK(satisfies(sys, hidden));
    for (const auto& gen : coset.lattice) {
      std::vector<Rational> shifted = rep;
      for (std::size_t i = 0; i < k; ++i) shifted[i] += Rational(gen[i] * 3);
      CHECK(satisfies(sys, shifted));
    }
    for (std::size_t i = 0; i < k; ++i) {
      BigInt diff = BigInt(hidden[i].get_num()) - coset.representative[i];
      if (coset.exponent[i] > 0) CHECK(valuation(diff, p) >= coset.exponent[i]);
    }
  }
}
