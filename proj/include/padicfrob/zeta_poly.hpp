#pragma once

#include <map>
#include <string>
#include <vector>

#include "padicfrob/numeric.hpp"
#include "padicfrob/power_series.hpp"

namespace padicfrob {

/// Polynomial over Q in z_3, z_5, z_7, ..., where z_m stands for zeta_p(m).
/// Exponent slot i holds the power of z_{2i+3}; trailing zero slots are trimmed.
class ZetaPoly {
 public:
  using Monomial = std::vector<unsigned>;

  ZetaPoly() = default;
  ZetaPoly(const Rational& c);  // NOLINT: constants convert implicitly
  ZetaPoly(long c) : ZetaPoly(Rational(c)) {}  // NOLINT

  /// z_m for odd m >= 3; the zero polynomial for even m >= 2.
  static ZetaPoly z(unsigned m);

  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  /// Graded weight of a monomial (z_m has weight m).
  static unsigned weight(const Monomial& mono);

  ZetaPoly& operator+=(const ZetaPoly& o);
  ZetaPoly& operator-=(const ZetaPoly& o);
  ZetaPoly& operator*=(const ZetaPoly& o);
  ZetaPoly operator-() const;
  friend ZetaPoly operator+(ZetaPoly a, const ZetaPoly& b) { return a += b; }
  friend ZetaPoly operator-(ZetaPoly a, const ZetaPoly& b) { return a -= b; }
  friend ZetaPoly operator*(const ZetaPoly& a, const ZetaPoly& b);
  friend bool operator==(const ZetaPoly& a, const ZetaPoly& b) { return a.terms_ == b.terms_; }

  /// "-8/25 * z3", "z3^2/18", "-(18*z9 + z3^3)/162".
  std::string to_string() const;

 private:
  void add_term(const Monomial& mono, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

template <>
struct CoeffOps<ZetaPoly> {
  static ZetaPoly zero_like(const ZetaPoly&) { return ZetaPoly(); }
  static ZetaPoly from_rational(const Rational& q, const ZetaPoly&) { return ZetaPoly(q); }
  static bool is_zero(const ZetaPoly& x) { return x.is_zero(); }
  static ZetaPoly inverse(const ZetaPoly& x) {
    if (!x.is_constant() || x.is_zero()) throw NonUnitConstantTerm("zeta polynomial is not an invertible constant");
    return ZetaPoly(1 / x.constant_term());
  }
};

using ZetaSeries = PowerSeries<ZetaPoly>;

}  // namespace padicfrob
