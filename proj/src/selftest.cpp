#include <functional>
#include <random>
#include <sstream>

#include "padicfrob/cli.hpp"
#include "padicfrob/combinatorics.hpp"
#include "padicfrob/errors.hpp"
#include "padicfrob/expansion.hpp"
#include "padicfrob/frobenius.hpp"
#include "padicfrob/zeta_gamma.hpp"

namespace padicfrob {

namespace {

using Suite = std::function<std::string()>;  // empty string on success

std::string alpha_displays(bool fault) {
  struct Want {
    int n;
    int j;
    std::string text;
  };
  std::vector<Want> want = {{4, 3, "-8/25 * z3"},    {5, 3, "-35/108 * z3"},  {6, 3, "-16/49 * z3"},
                            {7, 3, "-21/64 * z3"},   {6, 5, "-480/2401 * z5"}, {7, 5, "-819/4096 * z5"},
                            {7, 6, "441/8192 * z3^2"}};
  if (fault) want[0].text = "-9/25 * z3";
  for (const auto& w : want) {
    std::string got = alpha_simplicial(w.n)[w.j].to_string();
    if (got != w.text) return "n=" + std::to_string(w.n) + " j=" + std::to_string(w.j) + " gave " + got;
  }
  auto h = alpha_hyperoctahedral(9);
  if (h[6].to_string() != "z3^2/18" || h[8].to_string() != "z3*z5/15" || h[9].to_string() != "-(18*z9 + z3^3)/162")
    return "hyperoctahedral list";
  return "";
}

std::string zeta_properties(bool quick) {
  for (long p : {5L, 7L})
    for (long m : {2L, 4L})
      if (!zetap(m, p, 12).is_zero()) return "zeta_p even value non-zero";
  std::vector<std::pair<long, long>> cases = {{5, 3}, {7, 3}};
  if (!quick) cases = {{5, 3}, {7, 3}, {7, 5}, {11, 3}, {11, 5}};
  for (auto [p, m] : cases) {
    PadicNum a = zetap_bernoulli(m, p, 2);
    PadicNum b = zetap_from_gamma(m, p, 3);
    if (a.residue(3) != b.residue(3)) return "routes disagree at p=" + std::to_string(p) + " m=" + std::to_string(m);
  }
  return "";
}

std::string gamma_congruences(bool quick) {
  std::vector<long> ps = quick ? std::vector<long>{5} : std::vector<long>{5, 7};
  std::vector<int> ss = quick ? std::vector<int>{1} : std::vector<int>{1, 2};
  std::vector<int> ns = quick ? std::vector<int>{2} : std::vector<int>{2, 3};
  for (int n : ns)
    for (long p : ps)
      for (int s : ss) {
        std::vector<long> V(n + 1, 0);
        std::function<bool(int, long)> rec = [&](int i, long left) -> bool {
          if (i == n + 1) return gamma_ratio_congruence_check(V, s, p, n);
          for (long x = 0; x <= left; ++x) {
            V[i] = x;
            if (!rec(i + 1, left - x)) return false;
          }
          V[i] = 0;
          return true;
        };
        if (!rec(0, n)) return "n=" + std::to_string(n) + " p=" + std::to_string(p) + " s=" + std::to_string(s);
      }
  return "";
}

std::string expansion_oracle() {
  const std::size_t M = 20;
  std::vector<std::vector<long>> Us = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (const auto& U : Us) {
    CoeffMap bf = brute_force_omega(U, 6, M);
    for (long a = 0; a <= 2; ++a)
      for (long b = 0; a + b <= 2; ++b)
        for (long c = 0; a + b + c <= 2; ++c) {
          std::vector<long> V = {a, b, c};
          if (a && b && c) continue;
          for (long N = 1; N <= 3; ++N) {
            std::vector<long> NV = {N * a, N * b, N * c};
            RationalSeries want = bf.at(project_simplicial(NV));
            if (!(simplicial_coeff_series(U, V, N, M) == want)) return "coefficient series mismatch";
            long base = N * (a + b + c);
            if (base < static_cast<long>(M) && want[base] != Rational(simplicial_limit_coeff(U, V, N)))
              return "limit mismatch";
          }
        }
  }
  return "";
}

std::string alternating(unsigned long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 12);
  std::uniform_int_distribution<int> nd(1, 6);
  for (int trial = 0; trial < 50; ++trial) {
    int n = nd(rng);
    std::vector<Rational> c(n + 2);
    c[0] = 1;
    for (int k = 1; k < n + 2; ++k) c[k] = make_rational(num(rng), den(rng));
    if (!alternating_identity_check(rational_series(c), n)) return "trial " + std::to_string(trial);
  }
  return "";
}

std::string theta_identity() {
  for (int n = 2; n <= 4; ++n) {
    std::vector<long> e1(n, 0);
    e1[0] = 1;
    RationalSeries F = hyperoct_constant_term(std::vector<long>(n, 0), n, 21).F;
    RationalSeries F1 = hyperoct_constant_term(e1, n, 21).F;
    if (!(theta(F) == F1 * Rational(2 * n))) return "n=" + std::to_string(n);
  }
  return "";
}

std::string mu_table() {
  const std::size_t M = 14;
  for (int n = 2; n <= 5; ++n) {
    RationalSeries F = hyperoct_constant_term(std::vector<long>(n, 0), n, M).F;
    std::vector<long> u(n, 0);
    std::function<std::string(int, long)> rec = [&](int i, long left) -> std::string {
      if (i == n) {
        ThetaOperator mu = mu_operator(u, n);
        if (!(mu.apply(F) == hyperoct_constant_term(u, n, M).F)) return "recursion series";
        long l = 0;
        for (long x : u) l += x;
        for (int j = 0; j <= l; ++j)
          if (mu.at_zero(j) != mu_at_zero(u, j, n)) return "value at zero";
        return "";
      }
      for (long x = 0; x <= left; ++x) {
        u[i] = x;
        std::string r = rec(i + 1, left - x);
        if (!r.empty()) return r;
      }
      u[i] = 0;
      return "";
    };
    std::string r = rec(0, n - 1);
    if (!r.empty()) return "n=" + std::to_string(n) + ": " + r;
  }
  return "";
}

std::string operator_guessing(bool quick) {
  if (!(guess_operator(period_series_hyperoctahedral(4, 60), 4, 4) == printed_hyperoctahedral_operator(4)))
    return "n=4";
  if (!quick && !(guess_operator(period_series_hyperoctahedral(5, 60), 5, 6) == printed_hyperoctahedral_operator(5)))
    return "n=5";
  return "";
}

std::string solutions(bool quick) {
  int top = quick ? 3 : 5;
  for (int n = 2; n <= top; ++n)
    for (const MumOperator& L : {simplicial_operator(n), hyperoctahedral_operator(n)}) {
      StandardBasis B = standard_basis(L, 60);
      for (int i = 0; i < n; ++i)
        if (!apply_operator(L, B.y(i)).is_zero()) return "n=" + std::to_string(n);
    }
  return "";
}

std::string frobenius_coset() {
  const long p = 7;
  const std::size_t M = 40;
  for (const std::string fam : {"simplicial", "hyperoctahedral"}) {
    MumOperator L = fam == "simplicial" ? simplicial_operator(3) : hyperoctahedral_operator(3);
    FrobeniusDecomposition dec = solve_A_series(L, p, M);
    auto alpha = closed_form_alpha(fam, 3, p, 12);
    if (!verify_frobenius_property(dec, alpha, M).ok) return fam + ": Frobenius identity";
    if (!check_integrality(dec, alpha, p, M).integral) return fam + ": integrality";
    AffineCoset c = recover_alpha(dec, p, M);
    for (std::size_t i = 0; i < c.representative.size(); ++i) {
      int e = std::min(c.exponent[i], alpha[i + 1].abs_precision());
      BigInt mod = prime_power(p, e);
      BigInt r = c.representative[i] % mod;
      if (r < 0) r += mod;
      if (r != alpha[i + 1].residue(e)) return fam + ": coset misses alpha_" + std::to_string(i + 1);
    }
  }
  return "";
}

std::string nonuniqueness() {
  // Wronskian 1/(1 - 27t^3) is a unit at p = 7
  MumOperator L = simplicial_operator(2);
  for (long lam : {0L, 1L, 2L})
    if (!nonuniqueness_witness(L, 7, Rational(lam), 40)) return "lambda=" + std::to_string(lam);
  return "";
}

}  // namespace

std::vector<SelftestResult> run_selftest(unsigned long seed, bool quick, bool inject_fault) {
  std::vector<std::pair<std::string, Suite>> suites = {
      {"alpha_displays", [&] { return alpha_displays(inject_fault); }},
      {"zeta_properties", [&] { return zeta_properties(quick); }},
      {"gamma_congruences", [&] { return gamma_congruences(quick); }},
      {"expansion_oracle", [] { return expansion_oracle(); }},
      {"alternating_identity", [&] { return alternating(seed); }},
      {"theta_identity", [] { return theta_identity(); }},
      {"mu_table", [] { return mu_table(); }},
      {"operator_guessing", [&] { return operator_guessing(quick); }},
      {"operator_solutions", [&] { return solutions(quick); }},
  };
  if (!quick) {
    suites.push_back({"frobenius_n3", [] { return frobenius_coset(); }});
    suites.push_back({"nonuniqueness", [] { return nonuniqueness(); }});
  }
  std::vector<SelftestResult> out;
  for (auto& [name, run] : suites) {
    SelftestResult r;
    r.name = name;
    try {
      r.detail = run();
      r.pass = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace padicfrob
