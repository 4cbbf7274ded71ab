#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padicfrob/congruence.hpp"
#include "padicfrob/mum.hpp"
#include "padicfrob/padic.hpp"

namespace padicfrob {

/// A_j = slots[0][j] + sum_{k>=1} alpha_k slots[k][j], all exact over Q.
struct FrobeniusDecomposition {
  long p = 7;
  MumOperator L;
  std::size_t M = 0;
  StandardBasis basis;
  std::vector<std::vector<RationalSeries>> slots;

  int n() const { return L.n; }
};

FrobeniusDecomposition solve_A_series(const MumOperator& L, long p, std::size_t M);
/// Uses a precomputed basis; throws InsufficientOrder when basis.order < M.
FrobeniusDecomposition solve_A_series(const MumOperator& L, const StandardBasis& basis, long p, std::size_t M);

/// Replaces alpha_0 by exact 1 if the list omits it; n entries alpha_0..alpha_{n-1}.
std::vector<PadicSeries> assemble(const FrobeniusDecomposition& dec, const std::vector<PadicNum>& alpha);

struct FrobeniusCheck {
  bool ok = true;
  /// "identity" (A(y_i(t^p)) = p^i sum alpha_k y_{i-k}) or "solution" (L of the image).
  std::string failed_check;
  int i = -1;
  int ell_power = -1;
  long t_degree = -1;
};

FrobeniusCheck verify_frobenius_property(const FrobeniusDecomposition& dec, const std::vector<PadicNum>& alpha, std::size_t M);

struct IntegralityEntry {
  int j = 0;
  std::size_t m = 0;
  std::optional<int> val;   // empty for exact zero
  std::optional<int> prec;  // empty for exact values
};

struct IntegralityReport {
  long p = 7;
  std::size_t M = 0;
  bool integral = false;
  std::optional<int> min_valuation;
  std::optional<std::pair<int, std::size_t>> first_failure;  // (j, m)
  std::vector<IntegralityEntry> entries;

  std::string verdict() const { return integral ? "integral" : "non-integral"; }
  std::string to_json() const;
};

/// Integrality of the assembled A_j in Z_p[[t]] up to t^M. Throws
/// PrecisionExhausted when no coefficient is provably non-integral but some
/// coefficient is undecided at the given alpha precision.
IntegralityReport check_integrality(const FrobeniusDecomposition& dec, const std::vector<PadicNum>& alpha, long p, std::size_t M);

/// Congruence system for alpha_1..alpha_{n-1} from integrality of every
/// A_j coefficient below t^M, solved.
CongruenceSystem integrality_conditions(const FrobeniusDecomposition& dec, std::size_t M);
AffineCoset recover_alpha(const FrobeniusDecomposition& dec, long p, std::size_t M);

/// Order-2 check of the modified operator
/// A + lambda (y_0(t)/W(t^p)) (y_0(t^p) theta - theta(y_0(t^p))),
/// with A the alpha = (1, 0) structure. `wronskian` overrides W.
bool nonuniqueness_witness(const MumOperator& L, long p, const Rational& lambda, std::size_t M,
                           const std::optional<RationalSeries>& wronskian = std::nullopt);

/// W = y_0 theta(y_1) - theta(y_0) y_1 of the standard basis (l-free).
RationalSeries wronskian(const StandardBasis& basis);

}  // namespace padicfrob
