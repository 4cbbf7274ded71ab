#include "padicfrob/mum.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"
#include "padicfrob/combinatorics.hpp"
#include "padicfrob/errors.hpp"

namespace padicfrob {

namespace {

std::vector<BigInt> poly_from(std::initializer_list<long> c) {
  std::vector<BigInt> r;
  for (long x : c) r.emplace_back(x);
  return r;
}

void trim(std::vector<BigInt>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

void MumOperator::validate() const {
  if (n < 1 || coeffs.size() != static_cast<std::size_t>(n + 1)) throw NotMUM("operator needs n >= 1 and n+1 coefficient polynomials");
  if (coeff(n, 0) == 0) throw NotMUM("leading coefficient vanishes at t = 0");
  for (int i = 0; i < n; ++i)
    if (coeff(i, 0) != 0) throw NotMUM("a_" + std::to_string(i) + "(0) != 0: t = 0 is not a MUM point");
}

std::size_t MumOperator::degree() const {
  std::size_t d = 0;
  for (const auto& a : coeffs)
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k] != 0) d = std::max(d, k);
  return d;
}

BigInt MumOperator::coeff(int i, std::size_t d) const {
  const auto& a = coeffs.at(i);
  return d < a.size() ? a[d] : BigInt(0);
}

bool MumOperator::is_even() const {
  for (const auto& a : coeffs)
    for (std::size_t k = 1; k < a.size(); k += 2)
      if (a[k] != 0) return false;
  return true;
}

bool operator==(const MumOperator& a, const MumOperator& b) {
  if (a.n != b.n) return false;
  std::size_t d = std::max(a.degree(), b.degree());
  for (int i = 0; i <= a.n; ++i)
    for (std::size_t k = 0; k <= d; ++k)
      if (a.coeff(i, k) != b.coeff(i, k)) return false;
  return true;
}

MumOperator simplicial_operator(int n) {
  if (n < 2) throw std::invalid_argument("simplicial operator needs n >= 2");
  // (theta+1)...(theta+n) as a polynomial in theta.
  std::vector<BigInt> prod{BigInt(1)};
  for (int k = 1; k <= n; ++k) {
    std::vector<BigInt> next(prod.size() + 1, BigInt(0));
    for (std::size_t i = 0; i < prod.size(); ++i) {
      next[i] += prod[i] * k;
      next[i + 1] += prod[i];
    }
    prod = std::move(next);
  }
  BigInt scale = pow(BigInt(n + 1), n + 1);
  MumOperator L;
  L.n = n;
  L.coeffs.assign(n + 1, std::vector<BigInt>(n + 2, BigInt(0)));
  for (int i = 0; i <= n; ++i) L.coeffs[i][n + 1] = -scale * prod[i];
  L.coeffs[n][0] = 1;
  return L;
}

MumOperator printed_hyperoctahedral_operator(int n) {
  MumOperator L;
  L.n = n;
  if (n == 4) {
    L.coeffs = {poly_from({0, 0, -128, 0, 12288}), poly_from({0, 0, -416, 0, 28672}), poly_from({0, 0, -528, 0, 23552}),
                poly_from({0, 0, -320, 0, 8192}), poly_from({1, 0, -80, 0, 1024})};
  } else if (n == 5) {
    L.coeffs = {poly_from({0, 0, -320, 0, 109440, 0, -1728000}), poly_from({0, 0, -1216, 0, 300096, 0, -3945600}),
                poly_from({0, 0, -1904, 0, 316640, 0, -3240000}), poly_from({0, 0, -1568, 0, 163280, 0, -1224000}),
                poly_from({0, 0, -700, 0, 41440, 0, -216000}), poly_from({1, 0, -140, 0, 4144, 0, -14400})};
  } else {
    throw std::invalid_argument("printed hyperoctahedral operators exist for n = 4, 5 only");
  }
  return L;
}

MumOperator hyperoctahedral_operator(int n) {
  if (n == 4 || n == 5) return printed_hyperoctahedral_operator(n);
  if (n < 2) throw std::invalid_argument("hyperoctahedral operator needs n >= 2");
  int max_degree = 2 * n + 2;
  std::size_t M = static_cast<std::size_t>((n + 1) * (max_degree + 1)) + kGuessGuardMargin;
  return guess_operator_auto(period_series_hyperoctahedral(n, M), n, max_degree);
}

RationalSeries period_series_simplicial(int n, std::size_t M) {
  RationalSeries f(M);
  for (std::size_t k = 0; k * static_cast<std::size_t>(n + 1) < M; ++k) {
    std::vector<long> parts(n + 1, static_cast<long>(k));
    f[k * (n + 1)] = Rational(multinomial(parts));
  }
  return f;
}

RationalSeries period_series_hyperoctahedral(int n, std::size_t M) {
  RationalSeries f(M);
  if (M == 0) return f;
  std::size_t K = (M - 1) / 2 + 1;
  RationalSeries g(K);
  for (std::size_t k = 0; k < K; ++k) {
    BigInt fk = factorial(k);
    g[k] = Rational(BigInt(1), fk * fk);
  }
  RationalSeries power = RationalSeries::one(K);
  for (int i = 0; i < n; ++i) power = power * g;
  for (std::size_t k = 0; 2 * k < M; ++k) f[2 * k] = power[k] * Rational(factorial(2 * k));
  return f;
}

LogSeries<Rational> StandardBasis::y(int i) const {
  std::vector<RationalSeries> parts(i + 1, RationalSeries(order));
  for (int k = 0; k <= i; ++k) parts[i - k] = F.at(k) * Rational(BigInt(1), factorial(i - k));
  return LogSeries<Rational>(parts, order, Rational(0));
}

namespace {

using EpsPoly = std::vector<Rational>;  // truncated mod eps^n

EpsPoly eps_mul(const EpsPoly& a, const EpsPoly& b) {
  std::size_t n = a.size();
  EpsPoly r(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

EpsPoly eps_inv(const EpsPoly& a) {
  std::size_t n = a.size();
  EpsPoly r(n, Rational(0));
  r[0] = 1 / a[0];
  for (std::size_t k = 1; k < n; ++k) {
    Rational s(0);
    for (std::size_t j = 1; j <= k; ++j) s += a[j] * r[k - j];
    r[k] = -s / a[0];
  }
  return r;
}

// P_d(x0 + eps) with P_d(x) = sum_i a_{i,d} x^i.
EpsPoly shifted_indicial(const MumOperator& L, std::size_t d, long x0) {
  EpsPoly r(L.n, Rational(0));
  for (int i = 0; i <= L.n; ++i) {
    BigInt a = L.coeff(i, d);
    if (a == 0) continue;
    for (int k = 0; k <= std::min(i, L.n - 1); ++k) r[k] += Rational(a * binomial(i, k) * pow(BigInt(x0), static_cast<unsigned long>(i - k)));
  }
  return r;
}

}  // namespace

StandardBasis standard_basis(const MumOperator& L, std::size_t M) {
  L.validate();
  const int n = L.n;
  const std::size_t deg = L.degree();
  // Frobenius method: c_m(eps) for sum_m c_m t^(m+eps), working mod eps^n.
  std::vector<EpsPoly> c;
  EpsPoly c0(n, Rational(0));
  c0[0] = 1;
  c.push_back(c0);
  for (std::size_t m = 1; m < M; ++m) {
    EpsPoly acc(n, Rational(0));
    for (std::size_t d = 1; d <= deg && d <= m; ++d) {
      EpsPoly pr = eps_mul(shifted_indicial(L, d, static_cast<long>(m - d)), c[m - d]);
      for (int k = 0; k < n; ++k) acc[k] -= pr[k];
    }
    c.push_back(eps_mul(acc, eps_inv(shifted_indicial(L, 0, static_cast<long>(m)))));
  }
  StandardBasis B;
  B.n = n;
  B.order = M;
  for (int k = 0; k < n; ++k) {
    RationalSeries Fk(M);
    for (std::size_t m = 0; m < M; ++m) Fk[m] = c[m][k];
    B.F.push_back(std::move(Fk));
  }
  return B;
}

LogSeries<Rational> apply_operator(const MumOperator& L, const LogSeries<Rational>& s) {
  LogSeries<Rational> acc({}, s.order(), Rational(0));
  LogSeries<Rational> th = s;
  for (int i = 0; i <= L.n; ++i) {
    acc += series_from_poly(L.coeffs[i], s.order(), Rational(0)) * th;
    if (i < L.n) th = theta_apply(th);
  }
  return acc;
}

RationalSeries apply_operator(const MumOperator& L, const RationalSeries& f) {
  RationalSeries acc(f.order());
  RationalSeries th = f;
  for (int i = 0; i <= L.n; ++i) {
    acc += series_from_poly(L.coeffs[i], f.order(), Rational(0)) * th;
    if (i < L.n) th = theta(th);
  }
  return acc;
}

namespace {

// Fraction-free row echelon form; returns pivot columns.
std::vector<std::size_t> bareiss_echelon(std::vector<std::vector<BigInt>>& A) {
  std::vector<std::size_t> pivots;
  if (A.empty()) return pivots;
  const std::size_t R = A.size(), C = A[0].size();
  BigInt prev(1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < C && rank < R; ++c) {
    std::size_t r = rank;
    while (r < R && A[r][c] == 0) ++r;
    if (r == R) continue;
    std::swap(A[rank], A[r]);
    const BigInt& piv = A[rank][c];
    for (std::size_t i = rank + 1; i < R; ++i) {
      BigInt lead = A[i][c];
      for (std::size_t j = c + 1; j < C; ++j) {
        BigInt v = piv * A[i][j] - lead * A[rank][j];
        mpz_divexact(A[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      A[i][c] = 0;
    }
    prev = piv;
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

}  // namespace

MumOperator guess_operator(const RationalSeries& f, int n, int degree, std::size_t M) {
  if (n < 1 || degree < 0) throw std::invalid_argument("guess_operator needs n >= 1 and degree >= 0");
  const std::size_t D = static_cast<std::size_t>(degree);
  const std::size_t C = static_cast<std::size_t>(n + 1) * (D + 1);
  if (M == 0) M = C + kGuessGuardMargin;
  if (f.order() < M) throw InsufficientOrder("series has order " + std::to_string(f.order()) + ", guessing needs " + std::to_string(M));
  auto col = [&](int i, std::size_t d) { return static_cast<std::size_t>(i) * (D + 1) + d; };

  std::vector<std::vector<BigInt>> A;
  for (std::size_t m = 0; m < M; ++m) {
    std::vector<Rational> row(C, Rational(0));
    bool nonzero = false;
    for (std::size_t d = 0; d <= D && d <= m; ++d) {
      const Rational& fm = f[m - d];
      if (fm == 0) continue;
      Rational x(static_cast<long>(m - d));
      Rational xp(1);
      for (int i = 0; i <= n; ++i) {
        row[col(i, d)] = xp * fm;
        xp *= x;
      }
      nonzero = true;
    }
    if (!nonzero) continue;
    BigInt den(1);
    for (const auto& x : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    std::vector<BigInt> irow;
    for (const auto& x : row) irow.push_back(BigInt(x.get_num() * (den / x.get_den())));
    A.push_back(std::move(irow));
  }
  std::vector<std::size_t> pivots = bareiss_echelon(A);
  std::size_t dim = C - pivots.size();
  if (dim == 0) throw NoOperatorFound("no operator of order " + std::to_string(n) + " and degree " + std::to_string(degree));
  if (dim > 1)
    throw AmbiguousNullspace("nullspace has dimension " + std::to_string(dim) + "; raise the order or lower the degree");

  std::vector<bool> is_pivot(C, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<Rational> x(C, Rational(0));
  x[free_col] = 1;
  for (std::size_t r = pivots.size(); r-- > 0;) {
    std::size_t pc = pivots[r];
    Rational s(0);
    for (std::size_t j = pc + 1; j < C; ++j)
      if (x[j] != 0 && A[r][j] != 0) s += Rational(A[r][j]) * x[j];
    x[pc] = -s / Rational(A[r][pc]);
  }
  BigInt den(1), g(0);
  for (const auto& v : x) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  std::vector<BigInt> ints;
  for (const auto& v : x) {
    ints.push_back(BigInt(v.get_num() * (den / v.get_den())));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  for (auto& v : ints) v /= g;
  if (ints[col(n, 0)] < 0)
    for (auto& v : ints) v = -v;

  MumOperator L;
  L.n = n;
  L.coeffs.assign(n + 1, {});
  for (int i = 0; i <= n; ++i) {
    for (std::size_t d = 0; d <= D; ++d) L.coeffs[i].push_back(ints[col(i, d)]);
    trim(L.coeffs[i]);
  }
  try {
    L.validate();
  } catch (const NotMUM& e) {
    throw NoOperatorFound(std::string("nullspace operator is not of MUM type: ") + e.what());
  }
  return L;
}

MumOperator guess_operator_auto(const RationalSeries& f, int n, int max_degree) {
  for (int d = 1; d <= max_degree; ++d) {
    std::size_t M = static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(d + 1) + kGuessGuardMargin;
    if (M > f.order()) break;
    try {
      return guess_operator(f, n, d, M);
    } catch (const NoOperatorFound&) {
      continue;
    } catch (const AmbiguousNullspace&) {
      // sparse series (e.g. supported on t^(n+1)Z) need more equations
      if (M == f.order()) throw;
    }
    try {
      return guess_operator(f, n, d, f.order());
    } catch (const NoOperatorFound&) {
    }
  }
  throw NoOperatorFound("no operator of order " + std::to_string(n) + " up to degree " + std::to_string(max_degree));
}

std::string operator_to_json(const MumOperator& L) {
  nlohmann::ordered_json j;
  j["n"] = L.n;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& a : L.coeffs) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const auto& c : a) row.push_back(c.get_str());
    rows.push_back(row);
  }
  j["coeffs"] = rows;
  return j.dump();
}

namespace {

BigInt json_integer(const nlohmann::json& v) {
  if (v.is_string()) return BigInt(v.get<std::string>());
  if (v.is_number_integer()) return BigInt(std::to_string(v.get<long long>()));
  throw std::invalid_argument("operator coefficients must be integers or decimal strings");
}

}  // namespace

MumOperator operator_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  MumOperator L;
  L.n = j.at("n").get<int>();
  for (const auto& row : j.at("coeffs")) {
    std::vector<BigInt> a;
    for (const auto& c : row) a.push_back(json_integer(c));
    L.coeffs.push_back(std::move(a));
  }
  if (L.coeffs.size() != static_cast<std::size_t>(L.n + 1)) throw std::invalid_argument("operator JSON needs n+1 coefficient lists");
  return L;
}

RationalSeries series_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  if (j.is_object()) j = j.at("coeffs");
  std::vector<Rational> c;
  for (const auto& v : j) {
    if (v.is_string()) c.push_back(parse_rational(v.get<std::string>()));
    else if (v.is_number_integer()) c.push_back(Rational(BigInt(std::to_string(v.get<long long>()))));
    else throw std::invalid_argument("series coefficients must be integers or rational strings");
  }
  return rational_series(std::move(c));
}

}  // namespace padicfrob
