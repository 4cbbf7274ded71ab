#include "padicfrob/congruence.hpp"

#include <algorithm>
#include <optional>

#include "padicfrob/errors.hpp"

namespace padicfrob {

void CongruenceSystem::add(Rational constant, std::vector<Rational> coeffs) {
  if (coeffs.size() != unknowns) throw std::invalid_argument("condition arity does not match unknown count");
  conditions.push_back({std::move(constant), std::move(coeffs)});
}

namespace {

struct ReducedRow {
  std::vector<BigInt> a;  // modulo p^E
  BigInt rhs;             // modulo p^E
};

int required_exponent(const IntegralityCondition& c, long p) {
  int vmin = valuation(c.constant, p);
  for (const auto& x : c.coeffs) vmin = std::min(vmin, valuation(x, p));
  if (vmin == kInfiniteValuation) return 0;
  return std::max(0, -vmin);
}

BigInt mod(const BigInt& x, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

int val_mod(const BigInt& x, long p, int cap) {
  if (x == 0) return cap;
  return std::min(cap, valuation(x, p));
}

struct SmithResult {
  bool consistent = true;
  std::vector<BigInt> y;        // particular solution in transformed coordinates
  std::vector<int> free_exp;    // y_t is determined modulo p^free_exp[t]
  std::vector<std::vector<BigInt>> q;  // x = q * y
};

SmithResult smith_solve(std::vector<ReducedRow> rows, std::size_t k, long p, int E) {
  const BigInt modulus = prime_power(p, E);
  std::vector<std::vector<BigInt>> q(k, std::vector<BigInt>(k, BigInt(0)));
  for (std::size_t i = 0; i < k; ++i) q[i][i] = 1;
  SmithResult res;
  res.y.assign(k, BigInt(0));
  res.free_exp.assign(k, 0);
  std::size_t m = rows.size();
  std::size_t rank = 0;
  std::vector<int> diag;
  for (std::size_t t = 0; t < std::min(m, k); ++t) {
    int best = E;
    std::size_t br = 0, bc = 0;
    for (std::size_t r = t; r < m; ++r)
      for (std::size_t c = t; c < k; ++c) {
        int v = val_mod(rows[r].a[c], p, E);
        if (v < best) {
          best = v;
          br = r;
          bc = c;
        }
      }
    if (best >= E) break;
    std::swap(rows[t], rows[br]);
    if (bc != t) {
      for (auto& row : rows) std::swap(row.a[t], row.a[bc]);
      for (auto& qr : q) std::swap(qr[t], qr[bc]);
    }
    BigInt pd = prime_power(p, best);
    BigInt unit = rows[t].a[t] / pd;
    BigInt uinv = inverse_mod(unit, modulus);
    for (auto& x : rows[t].a) x = mod(x * uinv, modulus);
    rows[t].rhs = mod(rows[t].rhs * uinv, modulus);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == t || rows[r].a[t] == 0) continue;
      BigInt f = rows[r].a[t] / pd;
      for (std::size_t c = 0; c < k; ++c) rows[r].a[c] = mod(rows[r].a[c] - f * rows[t].a[c], modulus);
      rows[r].rhs = mod(rows[r].rhs - f * rows[t].rhs, modulus);
    }
    for (std::size_t c = t + 1; c < k; ++c) {
      if (rows[t].a[c] == 0) continue;
      BigInt f = rows[t].a[c] / pd;
      for (auto& row : rows) row.a[c] = mod(row.a[c] - f * row.a[t], modulus);
      for (auto& qr : q) qr[c] = mod(qr[c] - f * qr[t], modulus);
    }
    diag.push_back(best);
    ++rank;
  }
  for (std::size_t t = 0; t < rank; ++t) {
    int d = diag[t];
    if (val_mod(rows[t].rhs, p, E) < d) {
      res.consistent = false;
      return res;
    }
    BigInt pd = prime_power(p, d);
    res.y[t] = mod(rows[t].rhs / pd, prime_power(p, E - d));
    res.free_exp[t] = E - d;
  }
  for (std::size_t r = rank; r < m; ++r)
    if (rows[r].rhs != 0) {
      res.consistent = false;
      return res;
    }
  res.q = std::move(q);
  return res;
}

std::vector<ReducedRow> reduce_rows(const CongruenceSystem& sys, std::size_t count, int E) {
  const long p = sys.p;
  std::vector<ReducedRow> rows;
  BigInt modulus = prime_power(p, E);
  for (std::size_t i = 0; i < count; ++i) {
    const auto& c = sys.conditions[i];
    int e = required_exponent(c, p);
    if (e == 0) continue;
    Rational scale(prime_power(p, e));
    BigInt lift = prime_power(p, E - e);
    ReducedRow row;
    for (const auto& x : c.coeffs) row.a.push_back(mod(reduce_mod_prime_power(x * scale, p, e) * lift, modulus));
    row.rhs = mod(-reduce_mod_prime_power(c.constant * scale, p, e) * lift, modulus);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

AffineCoset solve_affine_congruences(const CongruenceSystem& sys) {
  const long p = sys.p;
  const std::size_t k = sys.unknowns;
  int E = 0;
  for (const auto& c : sys.conditions) E = std::max(E, required_exponent(c, p));
  AffineCoset out;
  out.p = p;
  out.working_exponent = E;
  out.representative.assign(k, BigInt(0));
  out.exponent.assign(k, 0);
  if (E == 0) {
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<BigInt> gen(k, BigInt(0));
      gen[i] = 1;
      out.lattice.push_back(gen);
    }
    return out;
  }

  auto solved = smith_solve(reduce_rows(sys, sys.conditions.size(), E), k, p, E);
  if (!solved.consistent) {
    // Smallest inconsistent prefix; consistency is monotone in the prefix length.
    std::size_t lo = 1, hi = sys.conditions.size();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (smith_solve(reduce_rows(sys, mid, E), k, p, E).consistent)
        lo = mid + 1;
      else
        hi = mid;
    }
    throw Inconsistent("congruence system is inconsistent at condition " + std::to_string(lo - 1), lo - 1);
  }

  const BigInt modulus = prime_power(p, E);
  for (std::size_t i = 0; i < k; ++i) {
    BigInt x(0);
    int e = E;
    for (std::size_t t = 0; t < k; ++t) {
      x += solved.q[i][t] * solved.y[t];
      int vq = val_mod(solved.q[i][t], p, E);
      e = std::min(e, vq + solved.free_exp[t]);
    }
    e = std::max(e, 0);
    out.exponent[i] = e;
    out.representative[i] = mod(x, modulus);
  }
  for (std::size_t t = 0; t < k; ++t) {
    if (solved.free_exp[t] >= E) continue;
    std::vector<BigInt> gen(k);
    BigInt scale = prime_power(p, solved.free_exp[t]);
    for (std::size_t i = 0; i < k; ++i) gen[i] = mod(solved.q[i][t] * scale, modulus);
    out.lattice.push_back(std::move(gen));
  }
  return out;
}

bool satisfies(const CongruenceSystem& sys, const std::vector<Rational>& alpha) {
  for (const auto& c : sys.conditions) {
    Rational s = c.constant;
    for (std::size_t i = 0; i < c.coeffs.size(); ++i) s += alpha[i] * c.coeffs[i];
    if (s != 0 && valuation(s, sys.p) < 0) return false;
  }
  return true;
}

}  // namespace padicfrob
