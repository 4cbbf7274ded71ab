#include "padicfrob/zeta_gamma.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "padicfrob/combinatorics.hpp"
#include "padicfrob/errors.hpp"

namespace padicfrob {

namespace {

Rational rational_pow(const Rational& x, long e) {
  Rational base = e < 0 ? 1 / x : x;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  Rational r(1);
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), k);
  r.canonicalize();
  return r;
}

void require_odd_prime(long p) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("zeta_p needs an odd prime");
}

}  // namespace

PadicNum zetap_bernoulli(long m, long p, long r) {
  require_odd_prime(p);
  if (m < 2) throw std::invalid_argument("zetap_bernoulli needs m >= 2");
  BigInt n = 1 - m + (p - 1) * prime_power(p, r);
  if (n < 2) throw std::invalid_argument("level too small: interpolation index below 2");
  if (n > kMaxExactBernoulliIndex) throw LevelTooLarge("exact Bernoulli index " + n.get_str() + " exceeds the configured bound");
  unsigned long ni = n.get_ui();
  Rational value = -(1 - Rational(prime_power(p, static_cast<long>(ni) - 1))) * bernoulli(static_cast<unsigned>(ni)) / Rational(n);
  return PadicNum::from_rational_abs(value, p, static_cast<int>(r + 1));
}

PadicNum zetap(long m, long p, int N) {
  require_odd_prime(p);
  if (m < 2) throw std::invalid_argument("zetap needs m >= 2");
  // Term j has valuation >= j - 2 - v_p(m-1).
  int J = std::max(2, N + 2 + valuation(BigInt(m - 1), p));
  Rational total(0);
  Rational pj(1);
  for (int j = 0; j <= J; ++j) {
    Rational bj = bernoulli(static_cast<unsigned>(j));
    if (bj != 0) {
      Rational disc(0);
      for (long a = 1; a < p; ++a) disc += rational_pow(Rational(a), 1 - m - j);
      total += Rational(binomial(1 - m, j)) * bj * pj * disc;
    }
    pj *= p;
  }
  total /= Rational((m - 1) * p);
  return PadicNum::from_rational_abs(total, p, N);
}

PadicNum gammap_int(long z, long p, int N) {
  if (z < 0) throw std::invalid_argument("gammap_int needs z >= 0");
  BigInt mod = prime_power(p, N);
  BigInt acc(1);
  for (long j = 1; j < z; ++j) {
    if (j % p == 0) continue;
    acc *= j;
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), mod.get_mpz_t());
  }
  if (z % 2 == 1) acc = mod - acc;
  return PadicNum::from_rational_abs(Rational(acc), p, N);
}

PadicNum GammaExpansion::evaluate(const Rational& x) const {
  if (x == 0) return g.at(0);
  int v = valuation(x, p);
  if (v < 1) throw std::domain_error("Gamma_p expansion is only used on p Z_p");
  PadicNum xp = PadicNum::exact(x, p);
  PadicNum power = PadicNum::exact(Rational(1), p);
  PadicNum sum = PadicNum::exact_zero(p);
  for (const auto& gm : g) {
    sum += gm * power;
    power *= xp;
  }
  int tail = static_cast<int>(g.size()) * (v - 1);
  return sum.with_abs_precision(tail);
}

GammaExpansion gammap_taylor(long p, int D, int N) {
  if (p < 5 || p % 2 == 0) throw std::invalid_argument("gammap_taylor needs an odd prime p >= 5");
  if (D < 1 || D >= p - 1) throw std::invalid_argument("gammap_taylor needs 1 <= D < p-1");
  const long K = p - 1;
  // g_m has precision (K+1)(s-1) - s m; ask for >= N at m = D.
  int s = 2;
  while (s * (K + 1 - D) < N + K + 1) ++s;
  BigInt length = K * prime_power(p, s);
  if (length > kMaxNodeProductLength)
    throw PrecisionBudgetExceeded("Gamma_p interpolation needs node products of length " + length.get_str());
  const int T = static_cast<int>((K + 1) * (s - 1));
  const BigInt mod = prime_power(p, T);
  const long ps = prime_power(p, s).get_si();

  // One pass over j < K p^s collects Gamma_p(k p^s) for every node.
  std::vector<BigInt> node(K + 1);
  BigInt acc(1);
  for (long j = 1; j <= K * ps; ++j) {
    if (j % ps == 0) {
      long k = j / ps;
      node[k] = (j % 2 == 1) ? BigInt(mod - acc) : acc;
    }
    if (j % p == 0) continue;
    acc *= j;
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), mod.get_mpz_t());
  }

  // Vandermonde system sum_m h_m k^m = Gamma_p(k p^s) - 1 with h_m = g_m p^(s m).
  std::vector<std::vector<BigInt>> a(K, std::vector<BigInt>(K + 1));
  for (long k = 1; k <= K; ++k) {
    BigInt kp(1);
    for (long m = 1; m <= K; ++m) {
      kp *= k;
      a[k - 1][m - 1] = kp % mod;
    }
    BigInt rhs = node[k] - 1;
    mpz_mod(a[k - 1][K].get_mpz_t(), rhs.get_mpz_t(), mod.get_mpz_t());
  }
  for (long c = 0; c < K; ++c) {
    long piv = -1;
    for (long r = c; r < K; ++r)
      if (valuation(a[r][c], p) == 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::logic_error("Vandermonde pivot is not a unit");
    std::swap(a[c], a[piv]);
    BigInt inv = inverse_mod(a[c][c], mod);
    for (long j = c; j <= K; ++j) a[c][j] = (a[c][j] * inv) % mod;
    for (long r = 0; r < K; ++r) {
      if (r == c || a[r][c] == 0) continue;
      BigInt f = a[r][c];
      for (long j = c; j <= K; ++j) {
        a[r][j] -= f * a[c][j];
        mpz_mod(a[r][j].get_mpz_t(), a[r][j].get_mpz_t(), mod.get_mpz_t());
      }
    }
  }

  GammaExpansion out;
  out.p = p;
  out.s = s;
  out.g.push_back(PadicNum::exact(Rational(1), p));
  for (int m = 1; m <= D; ++m) {
    PadicNum h = PadicNum::from_rational_abs(Rational(a[m - 1][K]), p, T);
    out.g.push_back(h / PadicNum::exact(Rational(prime_power(p, static_cast<long>(s) * m)), p));
  }
  return out;
}

PadicNum zetap_from_gamma(long m, long p, int N) {
  int request = N;
  for (int attempt = 0; attempt < 16; ++attempt) {
    GammaExpansion ge = gammap_taylor(p, static_cast<int>(m), request);
    PadicSeries f(ge.g, PadicNum::exact_zero(p));
    PadicNum c = series_log(f)[m];
    PadicNum z = PadicNum::exact(Rational(-m), p) * c;
    if (z.abs_precision() >= N) return z;
    request += N - z.abs_precision();
  }
  throw PrecisionBudgetExceeded("no interpolation precision reached the requested zeta_p precision");
}

ZetaSeries log_ratio_expansion(const Rational& a, const std::vector<Rational>& bs, int D) {
  Rational total(0);
  for (const auto& b : bs) total += b;
  if (total != a) throw WeightMismatch("Gamma_p ratio weights do not balance");
  ZetaSeries out(static_cast<std::size_t>(D + 1));
  for (int m = 2; m <= D; ++m) {
    Rational w = rational_pow(a, m);
    for (const auto& b : bs) w -= rational_pow(b, m);
    if (w == 0) continue;
    out[m] = ZetaPoly::z(static_cast<unsigned>(m)) * ZetaPoly(-w / m);
  }
  return out;
}

std::vector<ZetaPoly> alpha_simplicial(int n) {
  if (n < 2) throw std::invalid_argument("alpha_simplicial needs n >= 2");
  std::vector<Rational> bs(n + 1, Rational(1, n + 1));
  ZetaSeries e = series_exp(log_ratio_expansion(Rational(1), bs, n - 1));
  return e.coeffs();
}

std::vector<ZetaPoly> alpha_hyperoctahedral(int J) {
  if (J < 1) throw std::invalid_argument("alpha_hyperoctahedral needs J >= 1");
  std::vector<ZetaSeries> ratio;
  for (int m = 0; m <= J; ++m) {
    std::vector<Rational> bs(m, Rational(1));
    ratio.push_back(series_exp(log_ratio_expansion(Rational(m), bs, J)));
  }
  std::vector<ZetaPoly> alpha(J + 1);
  for (int j = 0; j <= J; ++j) {
    ZetaPoly acc;
    for (int m = 0; m <= j; ++m) {
      Rational c(binomial(j, m));
      if ((j - m) % 2 == 1) c = -c;
      acc += ZetaPoly(c) * ratio[m][j];
    }
    alpha[j] = acc * ZetaPoly(Rational(1) / Rational(factorial(j)));
  }
  return alpha;
}

PadicNum evaluate_zeta_poly(const ZetaPoly& poly, long p, int N) {
  std::map<std::pair<long, int>, PadicNum> cache;
  auto zeta = [&](long m, int prec) {
    auto key = std::make_pair(m, prec);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, zetap(m, p, prec)).first;
    return it->second;
  };
  PadicNum sum = PadicNum::exact_zero(p);
  for (const auto& [mono, c] : poly.terms()) {
    int degree = 0;
    for (unsigned e : mono) degree += static_cast<int>(e);
    int guard = 2 + 2 * degree + std::max(0, -valuation(c, p));
    PadicNum term = PadicNum::exact(c, p);
    for (std::size_t i = 0; i < mono.size(); ++i)
      for (unsigned e = 0; e < mono[i]; ++e) term *= zeta(static_cast<long>(2 * i + 3), N + guard);
    sum += term;
  }
  if (!sum.is_exact() && sum.abs_precision() > N) sum = sum.with_abs_precision(N);
  return sum;
}

namespace {

PadicNum ratio_lhs(const std::vector<long>& V, long x, long p, int prec) {
  long a = 0;
  for (long v : V) a += v;
  PadicNum r = gammap_int(a * x, p, prec);
  for (long v : V) r /= gammap_int(v * x, p, prec);
  return r;
}

}  // namespace

bool gamma_ratio_congruence_check(const std::vector<long>& V, int s, long p, int n) {
  const int E = (s + 1) * n;
  const long x = prime_power(p, s + 1).get_si();
  long a = 0;
  std::vector<Rational> bs;
  for (long v : V) {
    a += v;
    bs.push_back(Rational(v));
  }
  PadicNum lhs = ratio_lhs(V, x, p, E + 2);
  // Terms past Dt vanish mod p^E under the v_p(c_m) >= -m bound.
  int Dt = (E + s - 1) / s;
  ZetaSeries series = series_exp(log_ratio_expansion(Rational(a), bs, Dt));
  PadicNum rhs = PadicNum::exact_zero(p);
  Rational xm(1);
  for (int m = 0; m <= Dt; ++m) {
    if (!series[m].is_zero()) {
      int need = std::max(1, E + 2 - (s + 1) * m + m);
      rhs += evaluate_zeta_poly(series[m], p, need) * PadicNum::exact(xm, p);
    }
    xm *= x;
  }
  PadicNum diff = lhs - rhs;
  if (diff.abs_precision() < E) throw PrecisionBudgetExceeded("congruence check lost precision below the modulus");
  return diff.valuation() >= E;
}

bool gamma_ratio_congruence_check(const std::vector<long>& V, int s, long p, int n, const GammaExpansion& expansion) {
  const int E = (s + 1) * n;
  const long x = prime_power(p, s + 1).get_si();
  long a = 0;
  for (long v : V) a += v;
  PadicNum rhs = expansion.evaluate(Rational(a * x));
  for (long v : V) rhs /= expansion.evaluate(Rational(v * x));
  PadicNum lhs = ratio_lhs(V, x, p, E + 2);
  PadicNum diff = lhs - rhs;
  int target = std::min(E, diff.abs_precision());
  if (target <= 0) throw PrecisionBudgetExceeded("Gamma_p expansion carries no precision at this radius");
  return diff.valuation() >= target;
}

}  // namespace padicfrob
