#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "padicfrob/errors.hpp"
#include "padicfrob/numeric.hpp"
#include "padicfrob/padic.hpp"

namespace padicfrob {

/// Coefficient-field plumbing for PowerSeries. Every specialisation provides
/// zero_like / from_rational (a value in the same field as its argument),
/// is_zero and inverse (throws NonUnitConstantTerm when not invertible).
template <class T>
struct CoeffOps;

template <>
struct CoeffOps<Rational> {
  static Rational zero_like(const Rational&) { return Rational(0); }
  static Rational from_rational(const Rational& q, const Rational&) { return q; }
  static bool is_zero(const Rational& x) { return x == 0; }
  static Rational inverse(const Rational& x) {
    if (x == 0) throw NonUnitConstantTerm("series constant term is zero");
    return 1 / x;
  }
};

template <>
struct CoeffOps<PadicNum> {
  static PadicNum zero_like(const PadicNum& x) { return PadicNum::exact_zero(x.prime()); }
  static PadicNum from_rational(const Rational& q, const PadicNum& x) { return PadicNum::exact(q, x.prime()); }
  static bool is_zero(const PadicNum& x) { return x.is_zero(); }
  static PadicNum inverse(const PadicNum& x) {
    if (x.is_zero()) throw NonUnitConstantTerm("series constant term vanishes to its precision");
    return PadicNum::exact(Rational(1), x.prime()) / x;
  }
};

/// Truncated power series c_0 + c_1 t + ... + c_{M-1} t^{M-1} + O(t^M).
/// Binary operations truncate to the smaller order.
template <class T>
class PowerSeries {
 public:
  PowerSeries() = default;
  /// Zero series of the given order; `zero` fixes the coefficient field.
  explicit PowerSeries(std::size_t order, const T& zero = T()) : zero_(zero), c_(order, zero) {}
  PowerSeries(std::vector<T> coeffs, const T& zero) : zero_(zero), c_(std::move(coeffs)) {}

  static PowerSeries one(std::size_t order, const T& zero = T()) {
    PowerSeries s(order, zero);
    if (order > 0) s.c_[0] = CoeffOps<T>::from_rational(Rational(1), zero);
    return s;
  }
  /// c * t^k truncated at `order`.
  static PowerSeries monomial(const T& c, std::size_t k, std::size_t order, const T& zero) {
    PowerSeries s(order, zero);
    if (k < order) s.c_[k] = c;
    return s;
  }

  std::size_t order() const noexcept { return c_.size(); }
  const T& zero() const noexcept { return zero_; }
  const T& operator[](std::size_t i) const { return c_[i]; }
  T& operator[](std::size_t i) { return c_[i]; }
  /// Coefficient of t^i; throws InsufficientOrder past the truncation order.
  T coeff(std::size_t i) const {
    if (i >= c_.size()) throw InsufficientOrder("coefficient requested beyond truncation order");
    return c_[i];
  }
  const std::vector<T>& coeffs() const noexcept { return c_; }

  PowerSeries truncated(std::size_t order) const {
    PowerSeries r(std::min(order, c_.size()), zero_);
    std::copy(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(r.order()), r.c_.begin());
    return r;
  }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const T& x) { return CoeffOps<T>::is_zero(x); });
  }
  /// Index of the first non-zero coefficient, or order() if none.
  std::size_t valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!CoeffOps<T>::is_zero(c_[i])) return i;
    return c_.size();
  }

  PowerSeries operator-() const {
    PowerSeries r = *this;
    for (auto& x : r.c_) x = zero_ - x;
    return r;
  }
  PowerSeries& operator+=(const PowerSeries& o) {
    c_.resize(std::min(c_.size(), o.c_.size()), zero_);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  PowerSeries& operator-=(const PowerSeries& o) {
    c_.resize(std::min(c_.size(), o.c_.size()), zero_);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  PowerSeries& operator*=(const T& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const T& s) { return a *= s; }
  friend PowerSeries operator*(const T& s, PowerSeries a) { return a *= s; }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    std::size_t m = std::min(a.order(), b.order());
    PowerSeries r(m, a.zero_);
    std::size_t va = a.valuation(), vb = b.valuation();
    for (std::size_t i = va; i < m; ++i) {
      if (CoeffOps<T>::is_zero(a.c_[i])) continue;
      for (std::size_t j = vb; i + j < m; ++j) {
        if (CoeffOps<T>::is_zero(b.c_[j])) continue;
        r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return r;
  }
  PowerSeries& operator*=(const PowerSeries& o) { return *this = *this * o; }

  /// Multiplies by t^k keeping the order.
  PowerSeries shifted(std::size_t k) const {
    PowerSeries r(order(), zero_);
    for (std::size_t i = 0; i + k < order(); ++i) r.c_[i + k] = c_[i];
    return r;
  }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    if (a.order() != b.order()) return false;
    for (std::size_t i = 0; i < a.order(); ++i)
      if (!CoeffOps<T>::is_zero(a.c_[i] - b.c_[i])) return false;
    return true;
  }

 private:
  T zero_{};
  std::vector<T> c_;
};

using RationalSeries = PowerSeries<Rational>;
using PadicSeries = PowerSeries<PadicNum>;

/// Series with the given coefficients; order = size.
inline RationalSeries rational_series(std::vector<Rational> c) {
  return RationalSeries(std::move(c), Rational(0));
}

template <class T>
PowerSeries<T> series_invert(const PowerSeries<T>& f) {
  std::size_t m = f.order();
  PowerSeries<T> g(m, f.zero());
  if (m == 0) return g;
  T inv0 = CoeffOps<T>::inverse(f[0]);
  g[0] = inv0;
  for (std::size_t k = 1; k < m; ++k) {
    T acc = f.zero();
    for (std::size_t i = 1; i <= k; ++i) {
      if (CoeffOps<T>::is_zero(f[i])) continue;
      acc += f[i] * g[k - i];
    }
    g[k] = f.zero() - acc * inv0;
  }
  return g;
}

/// f(t^p). Result order defaults to f's order and never exceeds p * order(f).
template <class T>
PowerSeries<T> substitute_tp(const PowerSeries<T>& f, long p, std::size_t order) {
  std::size_t cap = static_cast<std::size_t>(p) * f.order();
  if (order > cap) order = cap;
  PowerSeries<T> r(order, f.zero());
  for (std::size_t k = 0; k * static_cast<std::size_t>(p) < order; ++k) r[k * p] = f[k];
  return r;
}
template <class T>
PowerSeries<T> substitute_tp(const PowerSeries<T>& f, long p) {
  return substitute_tp(f, p, f.order());
}

/// theta = t d/dt.
template <class T>
PowerSeries<T> theta(const PowerSeries<T>& f) {
  PowerSeries<T> r = f;
  for (std::size_t i = 0; i < r.order(); ++i) r[i] *= CoeffOps<T>::from_rational(Rational(static_cast<long>(i)), f.zero());
  return r;
}

template <class T>
PowerSeries<T> series_exp(const PowerSeries<T>& f) {
  std::size_t m = f.order();
  PowerSeries<T> g(m, f.zero());
  if (m == 0) return g;
  if (!CoeffOps<T>::is_zero(f[0])) throw BadConstantTerm("exp needs a series with zero constant term");
  g[0] = CoeffOps<T>::from_rational(Rational(1), f.zero());
  for (std::size_t k = 1; k < m; ++k) {
    T acc = f.zero();
    for (std::size_t i = 1; i <= k; ++i) {
      if (CoeffOps<T>::is_zero(f[i])) continue;
      acc += CoeffOps<T>::from_rational(Rational(static_cast<long>(i)), f.zero()) * f[i] * g[k - i];
    }
    g[k] = acc * CoeffOps<T>::from_rational(Rational(1, static_cast<long>(k)), f.zero());
  }
  return g;
}

template <class T>
PowerSeries<T> series_log(const PowerSeries<T>& f) {
  std::size_t m = f.order();
  PowerSeries<T> h(m, f.zero());
  if (m == 0) return h;
  T one = CoeffOps<T>::from_rational(Rational(1), f.zero());
  if (!CoeffOps<T>::is_zero(f[0] - one)) throw BadConstantTerm("log needs a series with constant term 1");
  for (std::size_t k = 1; k < m; ++k) {
    T acc = CoeffOps<T>::from_rational(Rational(static_cast<long>(k)), f.zero()) * f[k];
    for (std::size_t i = 1; i < k; ++i) {
      if (CoeffOps<T>::is_zero(f[k - i])) continue;
      acc -= CoeffOps<T>::from_rational(Rational(static_cast<long>(i)), f.zero()) * h[i] * f[k - i];
    }
    h[k] = acc * CoeffOps<T>::from_rational(Rational(1, static_cast<long>(k)), f.zero());
  }
  return h;
}

/// Polynomial (lowest degree first) as a series of the given order.
template <class T>
PowerSeries<T> series_from_poly(const std::vector<BigInt>& poly, std::size_t order, const T& zero) {
  PowerSeries<T> r(order, zero);
  for (std::size_t i = 0; i < poly.size() && i < order; ++i) r[i] = CoeffOps<T>::from_rational(Rational(poly[i]), zero);
  return r;
}

}  // namespace padicfrob
