// Acceptance criteria 1-9, one PASS/FAIL line each.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "padicfrob/combinatorics.hpp"
#include "padicfrob/errors.hpp"
#include "padicfrob/expansion.hpp"
#include "padicfrob/frobenius.hpp"
#include "padicfrob/mum.hpp"
#include "padicfrob/zeta_gamma.hpp"

using namespace padicfrob;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      note << " [failed: " << what << "]";
    }
  }
};

ZetaPoly zq(long a, long b, unsigned m) { return ZetaPoly(make_rational(a, b)) * ZetaPoly::z(m); }

std::vector<PadicNum> numeric(const std::vector<ZetaPoly>& sym, int n, long p, int N) {
  std::vector<PadicNum> a;
  for (int j = 0; j < n; ++j) a.push_back(evaluate_zeta_poly(sym[j], p, N));
  return a;
}

void enumerate(int len, long max_total, const std::function<void(const std::vector<long>&)>& f) {
  std::vector<long> cur(len, 0);
  std::function<void(int, long)> rec = [&](int i, long left) {
    if (i == len) {
      f(cur);
      return;
    }
    for (long x = 0; x <= left; ++x) {
      cur[i] = x;
      rec(i + 1, left - x);
    }
    cur[i] = 0;
  };
  rec(0, max_total);
}

// ---- 1
void symbolic(Outcome& o) {
  std::vector<std::vector<ZetaPoly>> want = {
      {1, 0, 0, zq(-8, 25, 3)},
      {1, 0, 0, zq(-35, 108, 3), 0},
      {1, 0, 0, zq(-16, 49, 3), 0, zq(-480, 2401, 5)},
      {1, 0, 0, zq(-21, 64, 3), 0, zq(-819, 4096, 5), zq(441, 8192, 3) * ZetaPoly::z(3)},
  };
  for (int n = 4; n <= 7; ++n) {
    auto got = alpha_simplicial(n);
    o.require(got == want[n - 4], "simplicial n=" + std::to_string(n));
  }
  ZetaPoly z3 = ZetaPoly::z(3), z5 = ZetaPoly::z(5), z7 = ZetaPoly::z(7), z9 = ZetaPoly::z(9);
  std::vector<ZetaPoly> hyp = {1,
                               0,
                               0,
                               zq(-1, 3, 3),
                               0,
                               zq(-1, 5, 5),
                               ZetaPoly(make_rational(1, 18)) * z3 * z3,
                               zq(-1, 7, 7),
                               ZetaPoly(make_rational(1, 15)) * z3 * z5,
                               ZetaPoly(make_rational(-1, 162)) * (ZetaPoly(18) * z9 + z3 * z3 * z3)};
  o.require(alpha_hyperoctahedral(9) == hyp, "hyperoctahedral alpha_1..alpha_9");
  o.note << " alpha_9 = " << alpha_hyperoctahedral(9)[9].to_string();
}

// ---- 2
void zeta(Outcome& o) {
  const int N = 12;
  for (long p : {5L, 7L})
    for (long m : {2L, 4L}) {
      PadicNum z = zetap(m, p, N);
      o.require(z.is_zero() && z.abs_precision() >= N, "zeta_" + std::to_string(p) + "(" + std::to_string(m) + ") = 0");
      o.require(zetap_bernoulli(m, p, 2).is_zero(), "Bernoulli route even vanishing");
    }
  for (long p : {5L, 7L, 11L})
    for (long m : {3L, 5L}) {
      if (m >= p - 1) continue;
      PadicNum a = zetap_bernoulli(m, p, 2);
      PadicNum b = zetap_from_gamma(m, p, 3);
      o.require(a.residue(3) == b.residue(3), "routes at p=" + std::to_string(p) + " m=" + std::to_string(m));
    }
}

// ---- 3
void gamma_congruence(Outcome& o) {
  int count = 0;
  for (int n : {2, 3})
    for (long p : {5L, 7L})
      for (int s : {1, 2})
        enumerate(n + 1, n, [&](const std::vector<long>& V) {
          ++count;
          if (!gamma_ratio_congruence_check(V, s, p, n)) {
            std::ostringstream w;
            w << "n=" << n << " p=" << p << " s=" << s;
            o.require(false, w.str());
          }
        });
  o.note << " " << count << " checks";
}

// ---- 4, 5
void simplicial_integrality(Outcome& o) {
  const long p = 7;
  const std::size_t M = 70;
  auto alpha = numeric(alpha_simplicial(4), 4, p, 12);
  FrobeniusDecomposition dec = solve_A_series(simplicial_operator(4), p, M);
  IntegralityReport good = check_integrality(dec, alpha, p, M);
  o.require(good.integral, "integral with closed-form alpha");
  o.note << " closed form: " << good.verdict();
  for (int mode = 0; mode < 2; ++mode) {
    auto a = alpha;
    a[3] = mode == 0 ? a[3] + PadicNum::exact(1, p) : PadicNum::exact(0, p);
    IntegralityReport r = check_integrality(dec, a, p, M);
    bool neg = !r.integral && r.min_valuation && *r.min_valuation <= -1;
    std::string label = mode == 0 ? "alpha_3+1" : "alpha_3=0";
    o.require(neg, label + " non-integral");
    o.note << "; " << label << ": " << r.verdict() << " (min val "
           << (r.min_valuation ? std::to_string(*r.min_valuation) : "none") << ")";
  }
}

void hyperoctahedral_integrality(Outcome& o) {
  const long p = 7;
  const std::size_t M = 70;
  MumOperator guessed = guess_operator(period_series_hyperoctahedral(4, 60), 4, 4);
  o.require(guessed == printed_hyperoctahedral_operator(4), "guessed operator equals the printed one");
  auto alpha = numeric(alpha_hyperoctahedral(3), 4, p, 12);
  o.require(congruent(alpha[3], -zetap(3, p, 12) / PadicNum::exact(3, p)),
            "alpha_3 = -zeta_7(3)/3");
  FrobeniusDecomposition dec = solve_A_series(guessed, p, M);
  IntegralityReport good = check_integrality(dec, alpha, p, M);
  o.require(good.integral, "integral with alpha_3 = -zeta_7(3)/3");
  auto a = alpha;
  a[3] = PadicNum::exact(0, p);
  IntegralityReport r = check_integrality(dec, a, p, M);
  o.require(!r.integral, "alpha_3 = 0 non-integral");
  o.note << " closed form: " << good.verdict() << "; alpha_3=0: " << r.verdict() << " (min val "
         << (r.min_valuation ? std::to_string(*r.min_valuation) : "none") << ")";
}

// ---- 6
void recovery(Outcome& o) {
  const long p = 7;
  const std::size_t M = 70;
  for (int fam = 0; fam < 2; ++fam) {
    MumOperator L = fam == 0 ? simplicial_operator(4) : hyperoctahedral_operator(4);
    auto alpha = fam == 0 ? numeric(alpha_simplicial(4), 4, p, 12) : numeric(alpha_hyperoctahedral(3), 4, p, 12);
    const std::string name = fam == 0 ? "simplicial" : "hyperoctahedral";
    FrobeniusDecomposition dec = solve_A_series(L, p, M);
    AffineCoset c = recover_alpha(dec, p, M);
    o.note << " " << name << " exponents (";
    for (std::size_t i = 0; i < c.exponent.size(); ++i) o.note << (i ? "," : "") << c.exponent[i];
    o.note << ")";
    for (std::size_t i = 0; i < c.representative.size(); ++i) {
      const int e = c.exponent[i];
      BigInt mod = prime_power(p, e);
      BigInt r = c.representative[i] % mod;
      if (r < 0) r += mod;
      o.require(r == alpha[i + 1].residue(e), name + " coset contains alpha_" + std::to_string(i + 1));
      o.require(e >= 3, name + " alpha_" + std::to_string(i + 1) + " pinned mod 7^3");
      if (i < 2) o.require(r == 0, name + " alpha_" + std::to_string(i + 1) + " = 0");
    }
  }
}

// ---- 7
void guessing(Outcome& o) {
  o.require(guess_operator(period_series_hyperoctahedral(4, 60), 4, 4) == printed_hyperoctahedral_operator(4), "n=4");
  o.require(guess_operator(period_series_hyperoctahedral(5, 60), 5, 6) == printed_hyperoctahedral_operator(5), "n=5");
  for (int n = 2; n <= 5; ++n) {
    o.require(apply_operator(simplicial_operator(n), period_series_simplicial(n, 60)).is_zero(),
              "simplicial L(y0) n=" + std::to_string(n));
    o.require(apply_operator(hyperoctahedral_operator(n), period_series_hyperoctahedral(n, 60)).is_zero(),
              "hyperoctahedral L(y0) n=" + std::to_string(n));
  }
}

// ---- 8
double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void oracles(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  const std::size_t M = 20;
  for (const std::vector<long>& U : std::vector<std::vector<long>>{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) {
    CoeffMap bf = brute_force_omega(U, 6, M);
    enumerate(3, 2, [&](const std::vector<long>& V) {
      if (std::find(V.begin(), V.end(), 0L) == V.end()) return;
      for (long N = 1; N <= 3; ++N) {
        std::vector<long> NV = {N * V[0], N * V[1], N * V[2]};
        RationalSeries want = bf.at(project_simplicial(NV));
        ok = ok && simplicial_coeff_series(U, V, N, M) == want;
        long base = N * (V[0] + V[1] + V[2]);
        ok = ok && (base >= static_cast<long>(M) || want[base] == Rational(simplicial_limit_coeff(U, V, N)));
      }
    });
  }
  double dt = seconds_since(t0);
  o.require(ok && dt < 60, "brute-force equivalence");
  o.note << " brute force " << dt << "s;";

  t0 = std::chrono::steady_clock::now();
  ok = true;
  std::mt19937_64 rng(20240501);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 12);
  std::uniform_int_distribution<int> nd(1, 6);
  for (int trial = 0; trial < 50; ++trial) {
    int n = nd(rng);
    std::vector<Rational> c(n + 2);
    c[0] = 1;
    for (int k = 1; k < n + 2; ++k) c[k] = make_rational(num(rng), den(rng));
    ok = ok && alternating_identity_check(rational_series(c), n);
  }
  dt = seconds_since(t0);
  o.require(ok && dt < 60, "alternating identity");
  o.note << " alternating " << dt << "s;";

  t0 = std::chrono::steady_clock::now();
  ok = true;
  for (int n = 2; n <= 4; ++n) {
    std::vector<long> e1(n, 0);
    e1[0] = 1;
    RationalSeries F = hyperoct_constant_term(std::vector<long>(n, 0), n, 21).F;
    ok = ok && theta(F) == hyperoct_constant_term(e1, n, 21).F * Rational(2 * n);
  }
  dt = seconds_since(t0);
  o.require(ok && dt < 60, "theta F identity");
  o.note << " theta " << dt << "s;";

  t0 = std::chrono::steady_clock::now();
  ok = true;
  int cells = 0;
  for (int n = 2; n <= 5; ++n) {
    RationalSeries F = hyperoct_constant_term(std::vector<long>(n, 0), n, 16).F;
    enumerate(n, n - 1, [&](const std::vector<long>& u) {
      ThetaOperator mu = mu_operator(u, n);
      ok = ok && mu.apply(F) == hyperoct_constant_term(u, n, 16).F;
      long l = 0;
      for (long x : u) l += x;
      for (int j = 0; j <= l; ++j, ++cells) ok = ok && mu.at_zero(j) == mu_at_zero(u, j, n);
    });
  }
  dt = seconds_since(t0);
  o.require(ok && dt < 60, "mu table");
  o.note << " mu table " << cells << " cells " << dt << "s";
}

// ---- 9
void nonuniqueness(Outcome& o) {
  MumOperator L = simplicial_operator(2);  // W = 1/(1 - 27t^3), a unit at p = 7
  for (long lam : {1L, 2L}) o.require(nonuniqueness_witness(L, 7, Rational(lam), 40), "lambda=" + std::to_string(lam));
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget;  // seconds
    void (*run)(Outcome&);
  };
  const Criterion criteria[] = {
      {1, "symbolic alpha", 5, symbolic},
      {2, "zeta_p properties", 60, zeta},
      {3, "Gamma_p congruences", 120, gamma_congruence},
      {4, "simplicial n=4 integrality and controls", 600, simplicial_integrality},
      {5, "hyperoctahedral n=4 integrality and controls", 600, hyperoctahedral_integrality},
      {6, "alpha recovery mod 7^3", 600, recovery},
      {7, "operator guessing", 600, guessing},
      {8, "oracle suites", 240, oracles},
      {9, "non-uniqueness witness", 600, nonuniqueness},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << " [exception: " << e.what() << "]";
    }
    double dt = seconds_since(t0);
    if (dt > c.budget) {
      o.pass = false;
      o.note << " [over time budget]";
    }
    if (!o.pass) ++failures;
    std::printf("criterion %d: %s  %s (%.2fs)%s\n", c.id, o.pass ? "PASS" : "FAIL", c.title, dt, o.note.str().c_str());
  }
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
