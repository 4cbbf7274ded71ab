#pragma once

#include <vector>

#include "padicfrob/padic.hpp"
#include "padicfrob/power_series.hpp"
#include "padicfrob/zeta_poly.hpp"

namespace padicfrob {

/// Largest Bernoulli index zetap_bernoulli is willing to compute exactly.
inline constexpr long kMaxExactBernoulliIndex = 6000;
/// Cap on the length of the factorial product behind one Gamma_p node.
inline constexpr long kMaxNodeProductLength = 10'000'000;

/// zeta_p(m) as -(1 - p^(n-1)) B_n / n at n = 1 - m + (p-1) p^r, known mod p^(r+1).
PadicNum zetap_bernoulli(long m, long p, long r);

/// zeta_p(m) modulo p^N (m >= 2, p odd), from the residue-disc expansion
/// zeta_p(m) = 1/((m-1)p) sum_{a=1}^{p-1} sum_j C(1-m, j) B_j p^j a^(1-m-j).
PadicNum zetap(long m, long p, int N);

/// Morita Gamma_p(z) = (-1)^z prod_{0<j<z, p not | j} j, modulo p^N.
PadicNum gammap_int(long z, long p, int N);

/// Taylor expansion of Gamma_p on p Z_p.
struct GammaExpansion {
  long p = 0;
  /// Node exponent used by the interpolation (nodes k p^s).
  int s = 0;
  /// g_0 .. g_D, each with its own tracked precision.
  std::vector<PadicNum> g;

  const PadicNum& gamma_prime_zero() const { return g.at(1); }
  std::size_t degree() const { return g.empty() ? 0 : g.size() - 1; }
  /// sum_m g_m x^m for v_p(x) >= 1; the tail past degree D is charged as
  /// (D+1)(v_p(x)-1) against the precision.
  PadicNum evaluate(const Rational& x) const;
};

/// Fits g_1..g_D (D < p-1, p >= 5) from Gamma_p at the nodes k p^s, k = 1..p-1,
/// so that every g_m is known to absolute precision >= N.
GammaExpansion gammap_taylor(long p, int D, int N);

/// zeta_p(m) = -m [x^m] log Gamma_p(x), read from gammap_taylor; the result
/// carries absolute precision >= N.
PadicNum zetap_from_gamma(long m, long p, int N);

/// log(Gamma_p(a x) / prod Gamma_p(b_i x)) as a series in x of order D+1.
ZetaSeries log_ratio_expansion(const Rational& a, const std::vector<Rational>& bs, int D);

/// alpha_0 .. alpha_{n-1}: x^j coefficients of Gamma_p(x) / Gamma_p(x/(n+1))^(n+1).
std::vector<ZetaPoly> alpha_simplicial(int n);

/// alpha_0 .. alpha_J of the hyperoctahedral family.
std::vector<ZetaPoly> alpha_hyperoctahedral(int J);

/// Substitutes zeta_p(m) for z_m; result carries tracked precision >= N when
/// all monomials are p-integral.
PadicNum evaluate_zeta_poly(const ZetaPoly& poly, long p, int N);

/// Gamma_p(p^(s+1)|V|) / prod Gamma_p(p^(s+1) V_i) against the Taylor
/// expansion of Gamma_p(|V|x)/prod Gamma_p(V_i x) at x = p^(s+1), mod p^((s+1)n).
bool gamma_ratio_congruence_check(const std::vector<long>& V, int s, long p, int n);

/// Same congruence with the right-hand side built from a supplied Gamma_p
/// expansion; compared to the smaller of the modulus and the known precision.
bool gamma_ratio_congruence_check(const std::vector<long>& V, int s, long p, int n, const GammaExpansion& expansion);

}  // namespace padicfrob
