#pragma once

#include <map>
#include <utility>
#include <vector>

#include "padicfrob/numeric.hpp"
#include "padicfrob/power_series.hpp"

namespace padicfrob {

enum class Family { Simplicial, Hyperoctahedral };

/// Exponent vectors u in Z^n (inside [-radius, radius]^n) mapped to c_u(t).
struct CoeffMap {
  Family family = Family::Simplicial;
  int n = 0;
  int radius = 0;
  std::size_t M = 0;
  std::map<std::vector<long>, RationalSeries> coeffs;

  /// c_u, or the zero series when u is absent; throws BoxTooLarge outside the box.
  RationalSeries at(const std::vector<long>& u) const;
};

inline constexpr int kMaxBruteForceDim = 3;
inline constexpr int kMaxBruteForceRadius = 6;
inline constexpr std::size_t kMaxBruteForceOrder = 30;

/// Shifts an (n+1)-tuple so that its minimum is 0.
std::vector<long> normalize_shift(std::vector<long> U);
/// Homogeneous simplicial exponents U in Z^(n+1) to u in Z^n (u_i = U_i - U_0).
std::vector<long> project_simplicial(const std::vector<long>& U);

long deg_simplicial(const std::vector<long>& u);
long deg_hyperoctahedral(const std::vector<long>& u);

/// Coefficient of x^(N V) in |U|! t^|U| x^U / f^(|U|+1) (simplicial family) mod t^M.
RationalSeries simplicial_coeff_series(const std::vector<long>& U, const std::vector<long>& V, long N, std::size_t M);
/// t -> 0 limit of t^(-N|V|) [eta_U]_{x^(NV)}: multinomial(NV) prod (N V_i)^U_i, 0^0 = 1.
BigInt simplicial_limit_coeff(const std::vector<long>& U, const std::vector<long>& V, long N);

/// Term-by-term expansion of t^t_shift x^numerator / f^pole_order with
/// f = 1 - t g(x), keeping exponents inside the box.
CoeffMap brute_force_expand(Family family, int n, int pole_order, const std::vector<long>& numerator, long t_shift,
                            int radius, std::size_t M);
/// omega_U = |U|! t^|U| x^U / f^(|U|+1) for the simplicial family.
CoeffMap brute_force_omega(const std::vector<long>& U, int radius, std::size_t M);

/// sum c_u x^u -> sum c_{pu} x^u; the result box has radius floor(radius/p).
CoeffMap cartier_truncated(const CoeffMap& cm, long p);

struct HyperoctConstants {
  std::vector<long> u;
  RationalSeries F;
  int support = 0;  // number of non-zero entries of u
};

/// F_u(t) = sum_m t^(2|m|) (2|m|)! / (m_1! ... m_n!)^2 prod m_i^u_i mod t^M.
HyperoctConstants hyperoct_constant_term(const std::vector<long>& u, int n, std::size_t M);

/// Closed form: 2^-j (n-j)!/n! when u is a permutation of (1^j, 0, ...), else 0.
Rational mu_at_zero(const std::vector<long>& u, int j, int n);

/// sum_j c_j(t) theta^j with polynomial c_j (lowest degree first).
struct ThetaOperator {
  std::vector<std::vector<Rational>> c;

  RationalSeries apply(const RationalSeries& f) const;
  Rational at_zero(std::size_t j) const;
};

/// mu_{u,j}(t) with F_u = sum_j mu_{u,j} theta^j F, built by the reduction
/// recursion (max u_i > 1 peels theta(theta-1) t^2; 0/1 vectors come from theta^l F).
ThetaOperator mu_operator(const std::vector<long>& u, int n);

/// sum_{j=0}^{n+1} (-1)^j C(n+1, j) F(jx)/F(x)^j == 0 mod x^(n+1).
bool alternating_identity_check(const RationalSeries& F, int n);

/// eta_U = sum_K prod S(U_i, K_i) omega_K, as (K, coefficient) pairs.
std::vector<std::pair<std::vector<long>, BigInt>> eta_from_omega(const std::vector<long>& U);

}  // namespace padicfrob
