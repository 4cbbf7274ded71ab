#include "padicfrob/frobenius.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"
#include "padicfrob/combinatorics.hpp"
#include "padicfrob/errors.hpp"

namespace padicfrob {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix zero_matrix(int n) { return Matrix(n, std::vector<Rational>(n, Rational(0))); }

RationalSeries theta_power(RationalSeries f, int k) {
  for (int i = 0; i < k; ++i) f = theta(f);
  return f;
}

// l^0 part of theta^j y_i(t^p), as a series in s = t^p:
// N_ij(s) = p^j sum_{r <= min(i,j)} C(j,r) (theta^(j-r) F_{i-r})(s).
std::vector<std::vector<RationalSeries>> composed_matrix(const StandardBasis& B, long p, std::size_t order) {
  const int n = B.n;
  std::vector<std::vector<RationalSeries>> N(n, std::vector<RationalSeries>(n, RationalSeries(order)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RationalSeries acc(order);
      for (int r = 0; r <= std::min(i, j); ++r)
        acc += theta_power(B.F[i - r].truncated(order), j - r) * Rational(binomial(j, r));
      N[i][j] = acc * Rational(prime_power(p, j));
    }
  return N;
}

// Inverse of a matrix power series whose constant term is diag(p^i).
std::vector<Matrix> invert_matrix_series(const std::vector<std::vector<RationalSeries>>& N, long p, std::size_t order) {
  const int n = static_cast<int>(N.size());
  Matrix inv0 = zero_matrix(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if ((i == j && N[i][j][0] != Rational(prime_power(p, i))) || (i != j && N[i][j][0] != 0))
        throw std::logic_error("composed l^0 matrix is not diag(p^i) at t = 0");
    inv0[i][i] = Rational(BigInt(1), prime_power(p, i));
  }
  std::vector<Matrix> inv{inv0};
  for (std::size_t k = 1; k < order; ++k) {
    Matrix S = zero_matrix(n);
    for (std::size_t l = 1; l <= k; ++l) {
      const Matrix& prev = inv[k - l];
      for (int i = 0; i < n; ++i)
        for (int m = 0; m < n; ++m) {
          const Rational& a = N[i][m][l];
          if (a == 0) continue;
          for (int j = 0; j < n; ++j) S[i][j] += a * prev[m][j];
        }
    }
    Matrix next = zero_matrix(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) next[i][j] = -inv0[i][i] * S[i][j];
    inv.push_back(std::move(next));
  }
  return inv;
}

LogSeries<Rational> apply_frobenius(const std::vector<RationalSeries>& A, const LogSeries<Rational>& u) {
  LogSeries<Rational> acc({}, u.order(), Rational(0));
  LogSeries<Rational> th = u;
  for (std::size_t j = 0; j < A.size(); ++j) {
    acc += A[j] * th;
    if (j + 1 < A.size()) th = theta_apply(th);
  }
  return acc;
}

std::vector<PadicNum> full_alpha(const FrobeniusDecomposition& dec, const std::vector<PadicNum>& alpha) {
  const int n = dec.n();
  std::vector<PadicNum> a = alpha;
  if (static_cast<int>(a.size()) == n - 1) a.insert(a.begin(), PadicNum::exact(Rational(1), dec.p));
  if (static_cast<int>(a.size()) != n) throw std::invalid_argument("alpha list must have n or n-1 entries");
  return a;
}

// First coefficient of sum_k alpha_k R_k that does not vanish p-adically.
bool find_nonzero(const std::vector<LogSeries<Rational>>& residuals, const std::vector<PadicNum>& alpha, long p, int& ell, long& deg) {
  std::size_t parts = 0, order = SIZE_MAX;
  for (const auto& r : residuals) {
    parts = std::max(parts, r.size());
    order = std::min(order, r.order());
  }
  for (std::size_t k = 0; k < parts; ++k)
    for (std::size_t m = 0; m < order; ++m) {
      PadicNum c = PadicNum::exact_zero(p);
      for (std::size_t s = 0; s < residuals.size(); ++s) {
        if (k >= residuals[s].size()) continue;
        const Rational& x = residuals[s].parts()[k][m];
        if (x != 0) c += alpha[s] * PadicNum::exact(x, p);
      }
      if (!c.is_zero()) {
        ell = static_cast<int>(k);
        deg = static_cast<long>(m);
        return true;
      }
    }
  return false;
}

}  // namespace

FrobeniusDecomposition solve_A_series(const MumOperator& L, long p, std::size_t M) {
  return solve_A_series(L, standard_basis(L, M), p, M);
}

FrobeniusDecomposition solve_A_series(const MumOperator& L, const StandardBasis& basis, long p, std::size_t M) {
  L.validate();
  if (basis.order < M) throw InsufficientOrder("standard basis order is below the requested t-order");
  const int n = L.n;
  const std::size_t inner = (M + static_cast<std::size_t>(p) - 1) / static_cast<std::size_t>(p);
  auto N = composed_matrix(basis, p, inner);
  auto inv = invert_matrix_series(N, p, inner);

  // (N^-1)_{ji}(t^p) as series in t.
  std::vector<std::vector<RationalSeries>> inv_tp(n, std::vector<RationalSeries>(n, RationalSeries(M)));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      RationalSeries s(inner);
      for (std::size_t l = 0; l < inner; ++l) s[l] = inv[l][j][i];
      inv_tp[j][i] = substitute_tp(s, p, M);
    }

  FrobeniusDecomposition dec;
  dec.p = p;
  dec.L = L;
  dec.M = M;
  dec.basis = basis;
  for (int k = 0; k < n; ++k) {
    std::vector<RationalSeries> slot;
    for (int j = 0; j < n; ++j) {
      RationalSeries acc(M);
      for (int i = k; i < n; ++i) acc += inv_tp[j][i] * (basis.F[i - k].truncated(M) * Rational(prime_power(p, i)));
      slot.push_back(std::move(acc));
    }
    dec.slots.push_back(std::move(slot));
  }
  return dec;
}

std::vector<PadicSeries> assemble(const FrobeniusDecomposition& dec, const std::vector<PadicNum>& alpha) {
  auto a = full_alpha(dec, alpha);
  const long p = dec.p;
  std::vector<PadicSeries> out;
  for (int j = 0; j < dec.n(); ++j) {
    PadicSeries s(dec.M, PadicNum::exact_zero(p));
    for (std::size_t m = 0; m < dec.M; ++m) {
      PadicNum c = PadicNum::exact_zero(p);
      for (int k = 0; k < dec.n(); ++k) {
        const Rational& x = dec.slots[k][j][m];
        if (x != 0) c += a[k] * PadicNum::exact(x, p);
      }
      s[m] = c;
    }
    out.push_back(std::move(s));
  }
  return out;
}

FrobeniusCheck verify_frobenius_property(const FrobeniusDecomposition& dec, const std::vector<PadicNum>& alpha, std::size_t M) {
  auto a = full_alpha(dec, alpha);
  const int n = dec.n();
  const long p = dec.p;
  M = std::min({M, dec.M, dec.basis.order});
  std::vector<LogSeries<Rational>> y, y_tp;
  for (int i = 0; i < n; ++i) {
    LogSeries<Rational> yi = dec.basis.y(i);
    y.push_back(LogSeries<Rational>(yi.parts(), M, Rational(0)));
    y_tp.push_back(substitute_tp(yi, p, M));
  }
  std::vector<std::vector<RationalSeries>> A(n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) A[k].push_back(dec.slots[k][j].truncated(M));

  FrobeniusCheck out;
  for (int i = 0; i < n; ++i) {
    // Exact residual per alpha slot, combined with the p-adic alpha at the end.
    std::vector<LogSeries<Rational>> identity, solution;
    for (int k = 0; k < n; ++k) {
      LogSeries<Rational> image = apply_frobenius(A[k], y_tp[i]);
      LogSeries<Rational> target({}, M, Rational(0));
      if (i >= k) target = y[i - k] * Rational(prime_power(p, i));
      identity.push_back(image - target);
      solution.push_back(apply_operator(dec.L, image));
    }
    int ell = -1;
    long deg = -1;
    if (find_nonzero(identity, a, p, ell, deg)) {
      out = {false, "identity", i, ell, deg};
      return out;
    }
    if (find_nonzero(solution, a, p, ell, deg)) {
      out = {false, "solution", i, ell, deg};
      return out;
    }
  }
  return out;
}

IntegralityReport check_integrality(const FrobeniusDecomposition& dec, const std::vector<PadicNum>& alpha, long p, std::size_t M) {
  if (p != dec.p) throw PrimeMismatch("integrality prime differs from the decomposition prime");
  M = std::min(M, dec.M);
  auto A = assemble(dec, alpha);
  IntegralityReport rep;
  rep.p = p;
  rep.M = M;
  bool undecided = false;
  bool failed = false;
  for (int j = 0; j < dec.n(); ++j)
    for (std::size_t m = 0; m < M; ++m) {
      const PadicNum& c = A[j][m];
      IntegralityEntry e{j, m, std::nullopt, std::nullopt};
      if (!c.is_exact()) e.prec = c.abs_precision();
      if (!c.is_exact_zero()) e.val = c.valuation();
      rep.entries.push_back(e);
      if (c.is_exact_zero()) continue;
      if (!c.is_zero()) {
        rep.min_valuation = rep.min_valuation ? std::min(*rep.min_valuation, c.valuation()) : c.valuation();
        if (c.valuation() < 0 && !failed) {
          failed = true;
          rep.first_failure = std::make_pair(j, m);
        }
      } else if (c.abs_precision() <= 0) {
        undecided = true;
      }
    }
  if (failed) {
    rep.integral = false;
    return rep;
  }
  if (undecided) throw PrecisionExhausted("some A_j coefficient is undecided at the supplied alpha precision");
  rep.integral = true;
  return rep;
}

std::string IntegralityReport::to_json() const {
  nlohmann::ordered_json j;
  j["p"] = p;
  j["M"] = M;
  j["verdict"] = verdict();
  if (min_valuation)
    j["min_valuation"] = *min_valuation;
  else
    j["min_valuation"] = nullptr;
  if (first_failure)
    j["first_failure"] = {{"j", first_failure->first}, {"m", first_failure->second}};
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json x;
    x["j"] = e.j;
    x["m"] = e.m;
    if (e.val)
      x["val"] = *e.val;
    else
      x["val"] = nullptr;
    if (e.prec)
      x["prec"] = *e.prec;
    else
      x["prec"] = nullptr;
    arr.push_back(x);
  }
  j["entries"] = arr;
  return j.dump();
}

CongruenceSystem integrality_conditions(const FrobeniusDecomposition& dec, std::size_t M) {
  M = std::min(M, dec.M);
  const int n = dec.n();
  CongruenceSystem sys{dec.p, static_cast<std::size_t>(n - 1), {}};
  for (int j = 0; j < n; ++j)
    for (std::size_t m = 0; m < M; ++m) {
      std::vector<Rational> coeffs;
      for (int k = 1; k < n; ++k) coeffs.push_back(dec.slots[k][j][m]);
      sys.add(dec.slots[0][j][m], std::move(coeffs));
    }
  return sys;
}

AffineCoset recover_alpha(const FrobeniusDecomposition& dec, long p, std::size_t M) {
  if (p != dec.p) throw PrimeMismatch("recovery prime differs from the decomposition prime");
  return solve_affine_congruences(integrality_conditions(dec, M));
}

RationalSeries wronskian(const StandardBasis& basis) {
  if (basis.n < 2) throw std::invalid_argument("wronskian needs two basis solutions");
  const RationalSeries& F0 = basis.F[0];
  const RationalSeries& F1 = basis.F[1];
  return F0 * F0 + F0 * theta(F1) - theta(F0) * F1;
}

bool nonuniqueness_witness(const MumOperator& L, long p, const Rational& lambda, std::size_t M,
                           const std::optional<RationalSeries>& wronskian_override) {
  if (L.n != 2) throw std::invalid_argument("the non-uniqueness witness is built for order-2 operators");
  StandardBasis B = standard_basis(L, M);
  RationalSeries W = wronskian_override ? wronskian_override->truncated(M) : wronskian(B);
  if (W.order() < M) throw InsufficientOrder("Wronskian series is shorter than the t-order");
  if (W[0] == 0 || valuation(W[0], p) != 0) throw NonUnitWronskian("Wronskian is not a unit at t = 0");
  for (std::size_t m = 0; m < M; ++m) {
    if (W[m] != 0 && valuation(W[m], p) < 0) throw NonUnitWronskian("Wronskian is not p-integral");
    if (B.F[0][m] != 0 && valuation(B.F[0][m], p) < 0) throw NonUnitWronskian("y_0 is not p-integral");
  }
  FrobeniusDecomposition dec = solve_A_series(L, B, p, M);
  RationalSeries y0 = B.F[0];
  RationalSeries y0_tp = substitute_tp(y0, p, M);
  RationalSeries theta_y0_tp = theta(y0_tp);
  RationalSeries factor = y0 * series_invert(substitute_tp(W, p, M));
  for (int i = 0; i < 2; ++i) {
    LogSeries<Rational> u = substitute_tp(B.y(i), p, M);
    LogSeries<Rational> image = apply_frobenius(dec.slots[0], u);
    LogSeries<Rational> extra = y0_tp * theta_apply(u) - theta_y0_tp * u;
    image += (factor * extra) * lambda;
    if (!apply_operator(L, image).is_zero()) return false;
  }
  return true;
}

}  // namespace padicfrob
