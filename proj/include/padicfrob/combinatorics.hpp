#pragma once

#include <span>
#include <vector>

#include "padicfrob/numeric.hpp"

namespace padicfrob {

/// Bernoulli number B_n with B_1 = -1/2. Results are memoised behind a mutex.
Rational bernoulli(unsigned n);

/// Stirling number of the second kind S(m, k); 0 when k > m.
BigInt stirling2(unsigned m, unsigned k);

/// (sum parts)! / prod(parts!), or 0 when some part is negative.
BigInt multinomial(std::span<const long> parts);
inline BigInt multinomial(std::initializer_list<long> parts) {
  return multinomial(std::span<const long>(parts.begin(), parts.size()));
}

/// [x]_k = x (x-1) ... (x-k+1), [x]_0 = 1.
template <class T>
T falling_factorial(const T& x, unsigned k) {
  T r(1);
  for (unsigned i = 0; i < k; ++i) r *= x - T(static_cast<long>(i));
  return r;
}

/// Coefficients (lowest degree first) of the polynomial [x]_k.
std::vector<BigInt> falling_factorial_coeffs(unsigned k);

}  // namespace padicfrob
