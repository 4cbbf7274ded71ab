#pragma once

#include <gmpxx.h>

#include <climits>
#include <cstdint>
#include <string>

namespace padicfrob {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Valuation reported for exact zero.
inline constexpr int kInfiniteValuation = INT_MAX;

Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(long num, long den = 1);

/// Parses "a", "-a" or "a/b".
Rational parse_rational(const std::string& text);
std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);

BigInt pow(const BigInt& base, unsigned long exp);
BigInt prime_power(long p, long exp);

/// p-adic valuation; kInfiniteValuation for zero.
int valuation(const BigInt& x, long p);
int valuation(const Rational& x, long p);

/// Reduces a p-integral rational modulo p^e into [0, p^e). Throws if v_p(x) < 0.
BigInt reduce_mod_prime_power(const Rational& x, long p, long e);

/// Modular inverse of a unit; throws DivisionByZero when gcd(a, m) != 1.
BigInt inverse_mod(const BigInt& a, const BigInt& m);

BigInt factorial(unsigned long n);
BigInt binomial(long n, long k);

}  // namespace padicfrob
