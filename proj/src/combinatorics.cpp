#include "padicfrob/combinatorics.hpp"

#include <mutex>

namespace padicfrob {

namespace {

// Tangent numbers T_1..T_count via the Brent-Harvey in-place recurrence.
std::vector<BigInt> tangent_numbers(std::size_t count) {
  std::vector<BigInt> t(count + 1);
  if (count == 0) return t;
  t[1] = 1;
  for (std::size_t k = 2; k <= count; ++k) t[k] = BigInt(static_cast<unsigned long>(k - 1)) * t[k - 1];
  for (std::size_t k = 2; k <= count; ++k)
    for (std::size_t j = k; j <= count; ++j)
      t[j] = BigInt(static_cast<unsigned long>(j - k)) * t[j - 1] + BigInt(static_cast<unsigned long>(j - k + 2)) * t[j];
  return t;
}

struct BernoulliCache {
  std::mutex mu;
  std::vector<Rational> even;  // even[k] = B_{2k}
};

BernoulliCache& cache() {
  static BernoulliCache c;
  return c;
}

}  // namespace

Rational bernoulli(unsigned n) {
  if (n == 0) return Rational(1);
  if (n == 1) return make_rational(-1, 2);
  if (n % 2 == 1) return Rational(0);
  std::size_t k = n / 2;
  auto& c = cache();
  std::lock_guard<std::mutex> lock(c.mu);
  if (c.even.size() <= k) {
    std::size_t target = std::max<std::size_t>(k, 2 * c.even.size());
    auto t = tangent_numbers(target);
    c.even.assign(target + 1, Rational(0));
    c.even[0] = 1;
    for (std::size_t i = 1; i <= target; ++i) {
      BigInt four_i = prime_power(4, static_cast<long>(i));
      BigInt num = BigInt(static_cast<unsigned long>(2 * i)) * t[i];
      if (i % 2 == 0) num = -num;
      c.even[i] = make_rational(num, four_i * (four_i - 1));
    }
  }
  return c.even[k];
}

BigInt stirling2(unsigned m, unsigned k) {
  if (k > m) return BigInt(0);
  // Row-by-row table S(i, j) = j S(i-1, j) + S(i-1, j-1).
  std::vector<BigInt> row(k + 1, BigInt(0));
  row[0] = 1;
  for (unsigned i = 1; i <= m; ++i) {
    for (unsigned j = std::min(i, k); j >= 1; --j) row[j] = BigInt(j) * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

BigInt multinomial(std::span<const long> parts) {
  BigInt r(1);
  long total = 0;
  for (long part : parts) {
    if (part < 0) return BigInt(0);
    total += part;
    r *= binomial(total, part);
  }
  return r;
}

std::vector<BigInt> falling_factorial_coeffs(unsigned k) {
  std::vector<BigInt> c{BigInt(1)};
  for (unsigned i = 0; i < k; ++i) {
    std::vector<BigInt> next(c.size() + 1, BigInt(0));
    for (std::size_t d = 0; d < c.size(); ++d) {
      next[d + 1] += c[d];
      next[d] -= BigInt(i) * c[d];
    }
    c = std::move(next);
  }
  return c;
}

}  // namespace padicfrob
