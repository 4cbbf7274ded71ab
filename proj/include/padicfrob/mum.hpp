#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padicfrob/log_series.hpp"
#include "padicfrob/numeric.hpp"
#include "padicfrob/power_series.hpp"

namespace padicfrob {

/// L = sum_{i=0}^n a_i(t) theta^i with integer polynomial a_i (lowest degree first).
struct MumOperator {
  int n = 0;
  std::vector<std::vector<BigInt>> coeffs;

  /// Throws NotMUM unless a_n(0) != 0 and a_i(0) = 0 for i < n.
  void validate() const;
  /// Largest degree in t over all a_i.
  std::size_t degree() const;
  /// Coefficient of t^d in a_i (zero past its length).
  BigInt coeff(int i, std::size_t d) const;
  const std::vector<BigInt>& leading() const { return coeffs.at(n); }
  bool is_even() const;

  friend bool operator==(const MumOperator& a, const MumOperator& b);
};

/// theta^n - ((n+1) t)^(n+1) (theta+1)...(theta+n).
MumOperator simplicial_operator(int n);
/// The printed hyperoctahedral operators of order 4 and 5.
MumOperator printed_hyperoctahedral_operator(int n);
/// Hyperoctahedral operator: printed for n = 4, 5, guessed from the period series otherwise.
MumOperator hyperoctahedral_operator(int n);

/// sum_k ((n+1)k)! / k!^(n+1) t^((n+1)k) mod t^M.
RationalSeries period_series_simplicial(int n, std::size_t M);
/// sum_k t^(2k) sum_{k_1+..+k_n=k} (2k)! / (k_1! ... k_n!)^2 mod t^M.
RationalSeries period_series_hyperoctahedral(int n, std::size_t M);

struct StandardBasis {
  int n = 0;
  std::size_t order = 0;
  std::vector<RationalSeries> F;

  /// y_i = sum_k F_k l^(i-k) / (i-k)!.
  LogSeries<Rational> y(int i) const;
};

StandardBasis standard_basis(const MumOperator& L, std::size_t M);

LogSeries<Rational> apply_operator(const MumOperator& L, const LogSeries<Rational>& s);
RationalSeries apply_operator(const MumOperator& L, const RationalSeries& f);

/// Unknowns a_{i,d}, d <= degree; exact nullspace of the order-M linear system.
/// M = 0 picks the default (n+1)(degree+1) + 10.
MumOperator guess_operator(const RationalSeries& f, int n, int degree, std::size_t M = 0);
/// Tries degree = 1 .. max_degree and returns the first operator found.
MumOperator guess_operator_auto(const RationalSeries& f, int n, int max_degree);

inline constexpr std::size_t kGuessGuardMargin = 10;

std::string operator_to_json(const MumOperator& L);
MumOperator operator_from_json(const std::string& text);
/// Reads a series file: a JSON array of coefficients (integers or "a/b" strings).
RationalSeries series_from_json(const std::string& text);

}  // namespace padicfrob
