#include "padicfrob/numeric.hpp"

#include <stdexcept>

#include "padicfrob/errors.hpp"

namespace padicfrob {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) { return make_rational(BigInt(num), BigInt(den)); }

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    return make_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
}

std::string to_string(const BigInt& x) { return x.get_str(); }
std::string to_string(const Rational& x) { return x.get_str(); }

BigInt pow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

BigInt prime_power(long p, long exp) {
  if (exp < 0) throw std::invalid_argument("negative exponent");
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(exp));
  return r;
}

int valuation(const BigInt& x, long p) {
  if (x == 0) return kInfiniteValuation;
  BigInt rest;
  BigInt prime(p);
  return static_cast<int>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
}

int valuation(const Rational& x, long p) {
  if (x == 0) return kInfiniteValuation;
  return valuation(x.get_num(), p) - valuation(x.get_den(), p);
}

BigInt inverse_mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  if (m == 1) return BigInt(0);
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw DivisionByZero("element is not invertible modulo " + m.get_str());
  return r;
}

BigInt reduce_mod_prime_power(const Rational& x, long p, long e) {
  if (e <= 0) return BigInt(0);
  if (x == 0) return BigInt(0);
  if (valuation(x, p) < 0) throw std::domain_error("rational is not p-integral");
  BigInt m = prime_power(p, e);
  BigInt r = x.get_num() * inverse_mod(x.get_den(), m);
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0) return BigInt(0);
  BigInt r;
  if (n >= 0) {
    if (k > n) return BigInt(0);
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  } else {
    BigInt nn(n);
    mpz_bin_ui(r.get_mpz_t(), nn.get_mpz_t(), static_cast<unsigned long>(k));
  }
  return r;
}

}  // namespace padicfrob
