#include "padicfrob/padic.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "padicfrob/errors.hpp"

namespace padicfrob {

PadicNum::PadicNum(long p, int val, BigInt unit, int prec)
    : p_(p), exact_(false), exact_value_(0), val_(val), unit_(std::move(unit)), prec_(prec) {}

PadicNum PadicNum::exact(const Rational& q, long p) {
  PadicNum x;
  x.p_ = p;
  x.exact_ = true;
  x.exact_value_ = q;
  x.val_ = padicfrob::valuation(q, p);
  x.prec_ = kExactPrecision;
  return x;
}

PadicNum PadicNum::zero(long p, int abs_precision) { return PadicNum(p, abs_precision, BigInt(0), abs_precision); }

PadicNum PadicNum::from_rational(const Rational& q, long p, int rel_precision) {
  if (q == 0) return exact_zero(p);
  int v = padicfrob::valuation(q, p);
  return from_rational_abs(q, p, v + std::max(rel_precision, 0));
}

PadicNum PadicNum::from_rational_abs(const Rational& q, long p, int abs_precision) {
  int v = padicfrob::valuation(q, p);
  if (q == 0 || v >= abs_precision) return zero(p, abs_precision);
  Rational scaled = q;
  if (v > 0) scaled /= Rational(prime_power(p, v));
  if (v < 0) scaled *= Rational(prime_power(p, -v));
  return PadicNum(p, v, reduce_mod_prime_power(scaled, p, abs_precision - v), abs_precision);
}

bool PadicNum::is_zero() const { return exact_ ? exact_value_ == 0 : unit_ == 0; }

int PadicNum::rel_precision() const noexcept {
  if (exact_) return kExactPrecision;
  return prec_ - val_;
}

Rational PadicNum::lift() const {
  if (exact_) return exact_value_;
  if (unit_ == 0) return Rational(0);
  Rational r(unit_);
  if (val_ > 0) r *= Rational(prime_power(p_, val_));
  if (val_ < 0) r /= Rational(prime_power(p_, -val_));
  return r;
}

BigInt PadicNum::residue(int e) const {
  if (e <= 0) return BigInt(0);
  if (!exact_ && prec_ < e) throw std::domain_error("residue requested beyond known precision");
  if (is_zero()) return BigInt(0);
  if (val_ < 0) throw std::domain_error("residue of a non-integral p-adic number");
  return reduce_mod_prime_power(lift(), p_, e);
}

PadicNum PadicNum::with_abs_precision(int abs_precision) const {
  if (exact_) return from_rational_abs(exact_value_, p_, abs_precision);
  if (abs_precision >= prec_) return *this;
  if (val_ >= abs_precision) return zero(p_, abs_precision);
  BigInt u = unit_ % prime_power(p_, abs_precision - val_);
  return PadicNum(p_, val_, u, abs_precision);
}

PadicNum PadicNum::approximate_like(int abs_precision) const { return from_rational_abs(exact_value_, p_, abs_precision); }

void PadicNum::check_prime(const PadicNum& o) const {
  // The default-constructed placeholder (exact zero at 2) adapts to any prime.
  if (p_ != o.p_) throw PrimeMismatch("p-adic numbers over different primes");
}

void PadicNum::normalize(BigInt scaled) {
  if (scaled != 0) {
    BigInt prime(p_);
    BigInt rest;
    int extra = static_cast<int>(mpz_remove(rest.get_mpz_t(), scaled.get_mpz_t(), prime.get_mpz_t()));
    val_ += extra;
    scaled = rest;
  }
  if (scaled == 0 || val_ >= prec_) {
    val_ = prec_;
    unit_ = 0;
    return;
  }
  BigInt m = prime_power(p_, prec_ - val_);
  mpz_mod(unit_.get_mpz_t(), scaled.get_mpz_t(), m.get_mpz_t());
}

PadicNum PadicNum::operator-() const {
  if (exact_) return exact(-exact_value_, p_);
  if (unit_ == 0) return *this;
  BigInt m = prime_power(p_, prec_ - val_);
  return PadicNum(p_, val_, m - unit_, prec_);
}

PadicNum& PadicNum::operator+=(const PadicNum& o) {
  if (o.is_exact_zero()) return *this;
  if (is_exact_zero() && o.p_ != p_) {
    *this = o;
    return *this;
  }
  check_prime(o);
  if (exact_ && o.exact_) {
    *this = exact(exact_value_ + o.exact_value_, p_);
    return *this;
  }
  if (exact_) *this = approximate_like(o.prec_);
  PadicNum rhs = o.exact_ ? o.approximate_like(prec_) : o;
  int n = std::min(prec_, rhs.prec_);
  bool lhs_live = unit_ != 0 && val_ < n;
  bool rhs_live = rhs.unit_ != 0 && rhs.val_ < n;
  if (!lhs_live && !rhs_live) {
    *this = zero(p_, n);
    return *this;
  }
  int vmin = std::min(lhs_live ? val_ : n, rhs_live ? rhs.val_ : n);
  BigInt scaled(0);
  if (lhs_live) scaled += unit_ * prime_power(p_, val_ - vmin);
  if (rhs_live) scaled += rhs.unit_ * prime_power(p_, rhs.val_ - vmin);
  val_ = vmin;
  prec_ = n;
  normalize(scaled);
  return *this;
}

PadicNum& PadicNum::operator-=(const PadicNum& o) { return *this += -o; }

PadicNum& PadicNum::operator*=(const PadicNum& o) {
  if (is_exact_zero()) {
    p_ = o.p_;
    return *this;
  }
  if (o.is_exact_zero()) {
    *this = exact_zero(o.p_);
    return *this;
  }
  check_prime(o);
  if (exact_ && o.exact_) {
    *this = exact(exact_value_ * o.exact_value_, p_);
    return *this;
  }
  PadicNum lhs = exact_ ? from_rational(exact_value_, p_, o.rel_precision()) : *this;
  PadicNum rhs = o.exact_ ? from_rational(o.exact_value_, p_, rel_precision()) : o;
  int rel = std::min(lhs.prec_ - lhs.val_, rhs.prec_ - rhs.val_);
  int v = lhs.val_ + rhs.val_;
  if (rel <= 0 || lhs.unit_ == 0 || rhs.unit_ == 0) {
    *this = zero(p_, v + std::max(rel, 0));
    return *this;
  }
  BigInt u = lhs.unit_ * rhs.unit_;
  mpz_mod(u.get_mpz_t(), u.get_mpz_t(), prime_power(p_, rel).get_mpz_t());
  *this = PadicNum(p_, v, u, v + rel);
  return *this;
}

PadicNum& PadicNum::operator/=(const PadicNum& o) {
  if (o.is_zero()) throw DivisionByZero("p-adic division by zero");
  if (is_exact_zero()) {
    p_ = o.p_;
    return *this;
  }
  check_prime(o);
  if (exact_ && o.exact_) {
    *this = exact(exact_value_ / o.exact_value_, p_);
    return *this;
  }
  PadicNum lhs = exact_ ? from_rational(exact_value_, p_, o.rel_precision()) : *this;
  PadicNum rhs = o.exact_ ? from_rational(o.exact_value_, p_, rel_precision()) : o;
  int rel = std::min(lhs.prec_ - lhs.val_, rhs.prec_ - rhs.val_);
  int v = lhs.val_ - rhs.val_;
  if (rel <= 0 || lhs.unit_ == 0) {
    *this = zero(p_, v + std::max(rel, 0));
    return *this;
  }
  BigInt m = prime_power(p_, rel);
  BigInt u = lhs.unit_ * inverse_mod(rhs.unit_, m);
  mpz_mod(u.get_mpz_t(), u.get_mpz_t(), m.get_mpz_t());
  *this = PadicNum(p_, v, u, v + rel);
  return *this;
}

bool congruent(const PadicNum& a, const PadicNum& b) { return (a - b).is_zero(); }

std::string PadicNum::to_string() const {
  std::ostringstream os;
  if (exact_) {
    os << exact_value_.get_str();
    return os.str();
  }
  if (unit_ == 0) {
    os << "O(" << p_ << "^" << prec_ << ")";
    return os.str();
  }
  if (val_ >= 0) {
    os << BigInt(unit_ * prime_power(p_, val_)).get_str();
  } else {
    os << unit_.get_str() << "*" << p_ << "^" << val_;
  }
  os << " + O(" << p_ << "^" << prec_ << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PadicNum& x) { return os << x.to_string(); }

}  // namespace padicfrob
