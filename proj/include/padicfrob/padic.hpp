#pragma once

#include <iosfwd>
#include <string>

#include "padicfrob/numeric.hpp"

namespace padicfrob {

/// Element of Q_p.
///
/// A value is either exact (it stores a rational number, precision is
/// infinite) or approximate: p^valuation * unit known modulo p^abs_precision,
/// with the unit coprime to p and reduced into [0, p^(abs_precision -
/// valuation)). An approximate value that is zero to its precision has
/// valuation == abs_precision and unit 0.
///
/// Precision propagates pessimistically: sums keep the minimum absolute
/// precision, products and quotients keep the minimum relative precision.
class PadicNum {
 public:
  static constexpr int kExactPrecision = INT_MAX;

  PadicNum() = default;  // exact zero at p = 2; only useful as a placeholder

  static PadicNum exact(const Rational& q, long p);
  static PadicNum exact_zero(long p) { return exact(Rational(0), p); }
  /// Zero known modulo p^abs_precision.
  static PadicNum zero(long p, int abs_precision);
  /// q modulo p^(rel_precision + v_p(q)); exact zero maps to exact zero.
  static PadicNum from_rational(const Rational& q, long p, int rel_precision);
  /// q modulo p^abs_precision.
  static PadicNum from_rational_abs(const Rational& q, long p, int abs_precision);

  long prime() const noexcept { return p_; }
  bool is_exact() const noexcept { return exact_; }
  /// True for exact zero and for values that vanish to their precision.
  bool is_zero() const;
  bool is_exact_zero() const { return exact_ && exact_value_ == 0; }

  /// kInfiniteValuation for exact zero, abs_precision() for inexact zero.
  int valuation() const noexcept { return val_; }
  int abs_precision() const noexcept { return exact_ ? kExactPrecision : prec_; }
  int rel_precision() const noexcept;
  /// Unit part modulo p^rel_precision (approximate values only).
  const BigInt& unit() const noexcept { return unit_; }
  const Rational& exact_value() const noexcept { return exact_value_; }

  /// Rational representative p^valuation * unit (or the exact value).
  Rational lift() const;
  /// Representative of the class modulo p^e as an integer in [0, p^e);
  /// requires a p-integral value known to absolute precision >= e.
  BigInt residue(int e) const;

  /// Drops precision to at most `abs_precision`.
  PadicNum with_abs_precision(int abs_precision) const;

  PadicNum operator-() const;
  PadicNum& operator+=(const PadicNum& o);
  PadicNum& operator-=(const PadicNum& o);
  PadicNum& operator*=(const PadicNum& o);
  PadicNum& operator/=(const PadicNum& o);

  friend PadicNum operator+(PadicNum a, const PadicNum& b) { return a += b; }
  friend PadicNum operator-(PadicNum a, const PadicNum& b) { return a -= b; }
  friend PadicNum operator*(PadicNum a, const PadicNum& b) { return a *= b; }
  friend PadicNum operator/(PadicNum a, const PadicNum& b) { return a /= b; }

  /// Equality to the joint precision (a - b vanishes to its precision).
  friend bool congruent(const PadicNum& a, const PadicNum& b);

  /// "unit*p^v + O(p^N)" style.
  std::string to_string() const;

 private:
  PadicNum(long p, int val, BigInt unit, int prec);
  void normalize(BigInt value_scaled);  // value = p^val_ * value_scaled, mod p^prec_
  PadicNum approximate_like(int abs_precision) const;
  void check_prime(const PadicNum& o) const;

  long p_ = 2;
  bool exact_ = true;
  Rational exact_value_{0};
  int val_ = kInfiniteValuation;
  BigInt unit_{0};
  int prec_ = kExactPrecision;
};

std::ostream& operator<<(std::ostream& os, const PadicNum& x);

inline PadicNum padic_from_rational(const Rational& q, long p, int precision) {
  return PadicNum::from_rational(q, p, precision);
}

}  // namespace padicfrob
