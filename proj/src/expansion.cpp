#include "padicfrob/expansion.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "padicfrob/combinatorics.hpp"
#include "padicfrob/errors.hpp"

namespace padicfrob {

RationalSeries CoeffMap::at(const std::vector<long>& u) const {
  if (static_cast<int>(u.size()) != n) throw std::invalid_argument("CoeffMap::at: wrong dimension");
  for (long x : u)
    if (x < -radius || x > radius) throw BoxTooLarge("exponent outside the recorded box");
  auto it = coeffs.find(u);
  if (it == coeffs.end()) return RationalSeries(M);
  return it->second;
}

std::vector<long> normalize_shift(std::vector<long> U) {
  if (U.empty()) return U;
  long m = *std::min_element(U.begin(), U.end());
  for (long& x : U) x -= m;
  return U;
}

std::vector<long> project_simplicial(const std::vector<long>& U) {
  std::vector<long> u;
  for (std::size_t i = 1; i < U.size(); ++i) u.push_back(U[i] - U[0]);
  return u;
}

long deg_simplicial(const std::vector<long>& u) {
  long s = 0, mn = 0;
  for (long x : u) {
    s += x;
    mn = std::min(mn, x);
  }
  return s + static_cast<long>(u.size() + 1) * (-mn);
}

long deg_hyperoctahedral(const std::vector<long>& u) {
  long s = 0;
  for (long x : u) s += x < 0 ? -x : x;
  return s;
}

static long total(const std::vector<long>& v) { return std::accumulate(v.begin(), v.end(), 0L); }

RationalSeries simplicial_coeff_series(const std::vector<long>& U0, const std::vector<long>& V0, long N, std::size_t M) {
  if (U0.size() != V0.size() || U0.size() < 2) throw std::invalid_argument("simplicial_coeff_series: bad arity");
  auto U = normalize_shift(U0);
  auto V = normalize_shift(V0);
  const long n1 = static_cast<long>(U.size());
  const long u = total(U);
  const long base = N * total(V);
  RationalSeries out(M);
  BigInt uf = factorial(static_cast<unsigned long>(u));
  std::vector<long> parts(U.size() + 1);
  for (long l = 0; base + n1 * l < static_cast<long>(M); ++l) {
    parts[0] = u;
    for (std::size_t i = 0; i < U.size(); ++i) parts[i + 1] = N * V[i] - U[i] + l;
    BigInt c = multinomial(parts);
    if (c != 0) out[static_cast<std::size_t>(base + n1 * l)] = Rational(uf * c);
  }
  return out;
}

BigInt simplicial_limit_coeff(const std::vector<long>& U0, const std::vector<long>& V0, long N) {
  if (U0.size() != V0.size()) throw std::invalid_argument("simplicial_limit_coeff: bad arity");
  auto U = normalize_shift(U0);
  auto V = normalize_shift(V0);
  std::vector<long> nv;
  BigInt prod = 1;
  for (std::size_t i = 0; i < V.size(); ++i) {
    nv.push_back(N * V[i]);
    if (U[i] > 0) prod *= pow(BigInt(N * V[i]), static_cast<unsigned long>(U[i]));
  }
  return multinomial(nv) * prod;
}

namespace {

using Monomials = std::map<std::vector<long>, BigInt>;

std::vector<std::vector<long>> steps(Family family, int n) {
  std::vector<std::vector<long>> s;
  for (int i = 0; i < n; ++i) {
    std::vector<long> e(n, 0);
    e[i] = 1;
    s.push_back(e);
    if (family == Family::Hyperoctahedral) {
      e[i] = -1;
      s.push_back(e);
    }
  }
  if (family == Family::Simplicial) s.push_back(std::vector<long>(n, -1));
  return s;
}

// Lower bound on the number of further steps needed to bring w into [lo, hi]^n.
long distance(Family family, const std::vector<long>& w, long lo, long hi) {
  long d = 0;
  for (long x : w) {
    long e = x < lo ? lo - x : (x > hi ? x - hi : 0);
    d = family == Family::Hyperoctahedral ? d + e : std::max(d, e);
  }
  return d;
}

}  // namespace

CoeffMap brute_force_expand(Family family, int n, int pole_order, const std::vector<long>& numerator, long t_shift,
                            int radius, std::size_t M) {
  if (n < 1 || n > kMaxBruteForceDim || radius < 0 || radius > kMaxBruteForceRadius || M > kMaxBruteForceOrder)
    throw BoxTooLarge("brute_force_expand: box or order beyond the oracle limits");
  if (static_cast<int>(numerator.size()) != n) throw std::invalid_argument("brute_force_expand: numerator arity");
  if (pole_order < 1 || t_shift < 0) throw std::invalid_argument("brute_force_expand: bad pole order or shift");

  CoeffMap cm;
  cm.family = family;
  cm.n = n;
  cm.radius = radius;
  cm.M = M;
  const auto st = steps(family, n);
  Monomials cur{{numerator, BigInt(1)}};
  for (long k = 0; k + t_shift < static_cast<long>(M); ++k) {
    // coefficient of t^k in 1/(1-tg)^m is C(m-1+k, k) g^k
    BigInt b = binomial(pole_order - 1 + k, k);
    for (const auto& [w, c] : cur) {
      if (distance(family, w, -radius, radius) != 0) continue;
      auto it = cm.coeffs.try_emplace(w, RationalSeries(M)).first;
      it->second[static_cast<std::size_t>(k + t_shift)] += Rational(b * c);
    }
    long remaining = static_cast<long>(M) - 1 - t_shift - (k + 1);
    if (remaining < 0) break;
    Monomials next;
    for (const auto& [w, c] : cur)
      for (const auto& s : st) {
        std::vector<long> x(w);
        for (int i = 0; i < n; ++i) x[i] += s[i];
        if (distance(family, x, -radius, radius) > remaining) continue;
        next[x] += c;
      }
    cur = std::move(next);
  }
  return cm;
}

CoeffMap brute_force_omega(const std::vector<long>& U0, int radius, std::size_t M) {
  auto U = normalize_shift(U0);
  const long u = total(U);
  CoeffMap cm = brute_force_expand(Family::Simplicial, static_cast<int>(U.size()) - 1, static_cast<int>(u + 1),
                                   project_simplicial(U), u, radius, M);
  Rational uf(factorial(static_cast<unsigned long>(u)));
  for (auto& [w, c] : cm.coeffs) c *= uf;
  return cm;
}

CoeffMap cartier_truncated(const CoeffMap& cm, long p) {
  if (p < 2) throw std::invalid_argument("cartier_truncated: p < 2");
  CoeffMap out;
  out.family = cm.family;
  out.n = cm.n;
  out.M = cm.M;
  out.radius = cm.radius / static_cast<int>(p);
  for (const auto& [w, c] : cm.coeffs) {
    bool ok = true;
    std::vector<long> u;
    for (long x : w) {
      if (x % p != 0) {
        ok = false;
        break;
      }
      u.push_back(x / p);
    }
    if (!ok) continue;
    bool inside = std::all_of(u.begin(), u.end(), [&](long x) { return x >= -out.radius && x <= out.radius; });
    if (inside) out.coeffs.emplace(std::move(u), c);
  }
  return out;
}

HyperoctConstants hyperoct_constant_term(const std::vector<long>& u, int n, std::size_t M) {
  if (static_cast<int>(u.size()) != n) throw std::invalid_argument("hyperoct_constant_term: arity");
  for (long x : u)
    if (x < 0) throw std::invalid_argument("hyperoct_constant_term: negative exponent");
  const std::size_t K = (M + 1) / 2;  // |m| < K
  std::vector<Rational> acc(K, Rational(0));
  acc[0] = 1;
  std::vector<Rational> inv_sq(K);
  for (std::size_t m = 0; m < K; ++m) {
    BigInt f = factorial(m);
    inv_sq[m] = make_rational(BigInt(1), f * f);
  }
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> w(K);
    for (std::size_t m = 0; m < K; ++m) {
      w[m] = inv_sq[m];
      if (u[i] > 0) w[m] *= Rational(pow(BigInt(static_cast<unsigned long>(m)), static_cast<unsigned long>(u[i])));
    }
    std::vector<Rational> nxt(K, Rational(0));
    for (std::size_t a = 0; a < K; ++a) {
      if (acc[a] == 0) continue;
      for (std::size_t b = 0; a + b < K; ++b)
        if (w[b] != 0) nxt[a + b] += acc[a] * w[b];
    }
    acc = std::move(nxt);
  }
  HyperoctConstants h;
  h.u = u;
  h.support = static_cast<int>(std::count_if(u.begin(), u.end(), [](long x) { return x > 0; }));
  h.F = RationalSeries(M);
  for (std::size_t k = 0; k < K && 2 * k < M; ++k) h.F[2 * k] = acc[k] * Rational(factorial(2 * k));
  return h;
}

Rational mu_at_zero(const std::vector<long>& u, int j, int n) {
  int ones = 0;
  for (long x : u) {
    if (x == 1)
      ++ones;
    else if (x != 0)
      return 0;
  }
  if (ones != j || j > n) return 0;
  return make_rational(factorial(static_cast<unsigned long>(n - j)), pow(BigInt(2), j) * factorial(static_cast<unsigned long>(n)));
}

// ---- theta operators with polynomial coefficients

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly add(Poly a, const Poly& b, const Rational& s = 1) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += s * b[i];
  trim(a);
  return a;
}

Poly theta_poly(Poly a) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] *= static_cast<long>(i);
  trim(a);
  return a;
}

ThetaOperator op_add(ThetaOperator a, const ThetaOperator& b, const Rational& s) {
  if (a.c.size() < b.c.size()) a.c.resize(b.c.size());
  for (std::size_t j = 0; j < b.c.size(); ++j) a.c[j] = add(a.c[j], b.c[j], s);
  return a;
}

// theta o A
ThetaOperator op_theta(const ThetaOperator& a) {
  ThetaOperator r;
  r.c.resize(a.c.size() + 1);
  for (std::size_t j = 0; j < a.c.size(); ++j) {
    r.c[j] = add(r.c[j], theta_poly(a.c[j]));
    r.c[j + 1] = add(r.c[j + 1], a.c[j]);
  }
  return r;
}

ThetaOperator op_shift_t(ThetaOperator a, std::size_t k) {
  for (auto& p : a.c)
    if (!p.empty()) p.insert(p.begin(), k, Rational(0));
  return a;
}

void compositions(int n, long total, std::vector<long>& cur, int i, const std::function<void(const std::vector<long>&)>& f) {
  if (i == n - 1) {
    cur[i] = total;
    f(cur);
    return;
  }
  for (long x = 0; x <= total; ++x) {
    cur[i] = x;
    compositions(n, total - x, cur, i + 1, f);
  }
}

struct MuBuilder {
  int n;
  std::map<std::vector<long>, ThetaOperator> memo;

  const ThetaOperator& get(std::vector<long> u) {
    std::sort(u.begin(), u.end(), std::greater<long>());
    auto it = memo.find(u);
    if (it != memo.end()) return it->second;
    ThetaOperator r = build(u);
    return memo.emplace(u, std::move(r)).first->second;
  }

  ThetaOperator build(const std::vector<long>& u) {
    const long l = total(u);
    if (l == 0) return ThetaOperator{{Poly{Rational(1)}}};
    if (u[0] >= 2) {
      ThetaOperator sum;
      for (long k = 0; k <= u[0] - 2; ++k) {
        std::vector<long> w(u);
        w[0] = k;
        sum = op_add(sum, get(w), Rational(binomial(u[0] - 2, k)));
      }
      ThetaOperator s2 = op_shift_t(sum, 2);
      ThetaOperator th = op_theta(s2);
      return op_add(op_theta(th), th, Rational(-1));
    }
    // u = (1^l, 0...): theta^l F = 2^l sum_{|w|=l} multinomial(l; w) F_w
    ThetaOperator r;
    r.c.resize(static_cast<std::size_t>(l) + 1);
    r.c[static_cast<std::size_t>(l)] = Poly{Rational(1) / Rational(pow(BigInt(2), static_cast<unsigned long>(l)))};
    std::vector<long> cur(n, 0);
    compositions(n, l, cur, 0, [&](const std::vector<long>& w) {
      if (*std::max_element(w.begin(), w.end()) > 1) r = op_add(r, get(w), -Rational(multinomial(w)));
    });
    Rational count = make_rational(factorial(static_cast<unsigned long>(n)), factorial(static_cast<unsigned long>(n - l)));
    for (auto& p : r.c)
      for (auto& x : p) x /= count;
    return r;
  }
};

}  // namespace

RationalSeries ThetaOperator::apply(const RationalSeries& f) const {
  RationalSeries out(f.order());
  RationalSeries d = f;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j > 0) d = theta(d);
    if (c[j].empty()) continue;
    RationalSeries cj(f.order());
    for (std::size_t i = 0; i < c[j].size() && i < f.order(); ++i) cj[i] = c[j][i];
    out += cj * d;
  }
  return out;
}

Rational ThetaOperator::at_zero(std::size_t j) const {
  if (j >= c.size() || c[j].empty()) return 0;
  return c[j][0];
}

ThetaOperator mu_operator(const std::vector<long>& u, int n) {
  if (static_cast<int>(u.size()) != n) throw std::invalid_argument("mu_operator: arity");
  for (long x : u)
    if (x < 0) throw std::invalid_argument("mu_operator: negative exponent");
  MuBuilder b{n, {}};
  ThetaOperator r = b.get(u);
  while (!r.c.empty() && r.c.back().empty()) r.c.pop_back();
  return r;
}

bool alternating_identity_check(const RationalSeries& F, int n) {
  const std::size_t ord = static_cast<std::size_t>(n) + 1;
  if (F.order() < ord || F[0] != 1) throw std::invalid_argument("alternating_identity_check: need F(0)=1 and enough terms");
  RationalSeries f = F.truncated(ord);
  RationalSeries inv = series_invert(f);
  RationalSeries sum(ord);
  RationalSeries inv_pow = RationalSeries::one(ord);
  for (long j = 0; j <= n + 1; ++j) {
    RationalSeries fj(ord);
    Rational jp(1);
    for (std::size_t k = 0; k < ord; ++k) {
      fj[k] = f[k] * jp;
      jp *= j;
    }
    Rational s(binomial(n + 1, j));
    if (j % 2) s = -s;
    sum += (fj * inv_pow) * s;
    inv_pow = inv_pow * inv;
  }
  return sum.is_zero();
}

std::vector<std::pair<std::vector<long>, BigInt>> eta_from_omega(const std::vector<long>& U) {
  for (long x : U)
    if (x < 0) throw std::invalid_argument("eta_from_omega: negative entry");
  std::vector<std::pair<std::vector<long>, BigInt>> out;
  std::vector<long> K(U.size(), 0);
  std::function<void(std::size_t, BigInt)> rec = [&](std::size_t i, BigInt c) {
    if (i == U.size()) {
      out.emplace_back(K, c);
      return;
    }
    for (long k = 0; k <= U[i]; ++k) {
      BigInt s = stirling2(static_cast<unsigned>(U[i]), static_cast<unsigned>(k));
      if (s == 0) continue;
      K[i] = k;
      rec(i + 1, c * s);
    }
    K[i] = 0;
  };
  rec(0, BigInt(1));
  return out;
}

}  // namespace padicfrob
