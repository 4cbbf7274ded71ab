#pragma once

#include <vector>

#include "padicfrob/numeric.hpp"

namespace padicfrob {

/// One condition v_p(constant + sum_i alpha_i * coeffs[i]) >= 0.
struct IntegralityCondition {
  Rational constant;
  std::vector<Rational> coeffs;
};

struct CongruenceSystem {
  long p = 7;
  std::size_t unknowns = 0;
  std::vector<IntegralityCondition> conditions;

  void add(Rational constant, std::vector<Rational> coeffs);
};

/// Solution coset representative + lattice. The representative is one
/// solution, reduced mod p^working_exponent; exponent[i] says coordinate i is
/// pinned to representative[i] mod p^exponent[i] (0 = unconstrained).
struct AffineCoset {
  long p = 7;
  std::vector<BigInt> representative;
  std::vector<int> exponent;
  /// Modulus the whole problem was reduced to (max over conditions).
  int working_exponent = 0;
  /// Generators of the homogeneous solution lattice modulo p^working_exponent
  /// (columns of the unimodular transform scaled by the free part).
  std::vector<std::vector<BigInt>> lattice;
};

/// Reduces every condition to a congruence modulo p^e, e = max(0, -min_i v_p(c_i)),
/// scales all of them to a common modulus and solves via Smith normal form over
/// Z/p^E. Throws Inconsistent (with the first violated condition index).
AffineCoset solve_affine_congruences(const CongruenceSystem& sys);

/// Exact check that a vector satisfies every condition.
bool satisfies(const CongruenceSystem& sys, const std::vector<Rational>& alpha);

}  // namespace padicfrob
