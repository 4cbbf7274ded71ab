#pragma once

#include <vector>

#include "padicfrob/power_series.hpp"

namespace padicfrob {

/// sum_k s_k(t) l^k where l stands for log t. All parts share one order.
template <class T>
class LogSeries {
 public:
  LogSeries() = default;
  explicit LogSeries(PowerSeries<T> s0) : order_(s0.order()), zero_(s0.zero()) { parts_.push_back(std::move(s0)); }
  LogSeries(std::vector<PowerSeries<T>> parts, std::size_t order, const T& zero)
      : parts_(std::move(parts)), order_(order), zero_(zero) {
    for (auto& s : parts_) s = s.truncated(order_);
    for (auto& s : parts_)
      if (s.order() < order_) order_ = s.order();
    for (auto& s : parts_) s = s.truncated(order_);
  }

  std::size_t order() const noexcept { return order_; }
  const T& zero() const noexcept { return zero_; }
  /// Highest stored power of l plus one.
  std::size_t size() const noexcept { return parts_.size(); }
  /// Coefficient of l^k (zero series past the stored range).
  PowerSeries<T> part(std::size_t k) const { return k < parts_.size() ? parts_[k] : PowerSeries<T>(order_, zero_); }
  const std::vector<PowerSeries<T>>& parts() const noexcept { return parts_; }

  bool is_zero() const {
    for (const auto& s : parts_)
      if (!s.is_zero()) return false;
    return true;
  }

  LogSeries& operator+=(const LogSeries& o) { return combine(o, 1); }
  LogSeries& operator-=(const LogSeries& o) { return combine(o, -1); }
  LogSeries& operator*=(const T& c) {
    for (auto& s : parts_) s *= c;
    return *this;
  }
  friend LogSeries operator+(LogSeries a, const LogSeries& b) { return a += b; }
  friend LogSeries operator-(LogSeries a, const LogSeries& b) { return a -= b; }
  friend LogSeries operator*(LogSeries a, const T& c) { return a *= c; }
  friend LogSeries operator*(const PowerSeries<T>& f, const LogSeries& a) {
    std::vector<PowerSeries<T>> parts;
    for (const auto& s : a.parts_) parts.push_back(f * s);
    return LogSeries(std::move(parts), std::min(a.order_, f.order()), a.zero_);
  }
  friend LogSeries operator*(const LogSeries& a, const LogSeries& b) {
    std::size_t m = std::min(a.order_, b.order_);
    if (a.parts_.empty() || b.parts_.empty()) return LogSeries({}, m, a.zero_);
    std::vector<PowerSeries<T>> parts(a.parts_.size() + b.parts_.size() - 1, PowerSeries<T>(m, a.zero_));
    for (std::size_t i = 0; i < a.parts_.size(); ++i)
      for (std::size_t j = 0; j < b.parts_.size(); ++j) parts[i + j] += a.parts_[i] * b.parts_[j];
    return LogSeries(std::move(parts), m, a.zero_);
  }

 private:
  LogSeries& combine(const LogSeries& o, int sign) {
    order_ = std::min(order_, o.order_);
    if (parts_.size() < o.parts_.size()) parts_.resize(o.parts_.size(), PowerSeries<T>(order_, zero_));
    for (auto& s : parts_) s = s.truncated(order_);
    for (std::size_t k = 0; k < o.parts_.size(); ++k) {
      if (sign > 0)
        parts_[k] += o.parts_[k];
      else
        parts_[k] -= o.parts_[k];
    }
    return *this;
  }

  std::vector<PowerSeries<T>> parts_;
  std::size_t order_ = 0;
  T zero_{};
};

/// theta(sum s_k l^k) = sum (theta s_k) l^k + sum k s_k l^(k-1).
template <class T>
LogSeries<T> theta_apply(const LogSeries<T>& s) {
  std::vector<PowerSeries<T>> parts;
  for (std::size_t k = 0; k < s.size(); ++k) {
    PowerSeries<T> r = theta(s.part(k));
    if (k + 1 < s.size()) r += s.part(k + 1) * CoeffOps<T>::from_rational(Rational(static_cast<long>(k + 1)), s.zero());
    parts.push_back(std::move(r));
  }
  return LogSeries<T>(std::move(parts), s.order(), s.zero());
}

/// s(t^p): l maps to p*l, series parts are composed with t^p.
template <class T>
LogSeries<T> substitute_tp(const LogSeries<T>& s, long p, std::size_t order) {
  std::vector<PowerSeries<T>> parts;
  Rational pk(1);
  for (std::size_t k = 0; k < s.size(); ++k) {
    parts.push_back(substitute_tp(s.part(k), p, order) * CoeffOps<T>::from_rational(pk, s.zero()));
    pk *= p;
  }
  std::size_t m = std::min(order, static_cast<std::size_t>(p) * s.order());
  return LogSeries<T>(std::move(parts), m, s.zero());
}

}  // namespace padicfrob
