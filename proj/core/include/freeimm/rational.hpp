#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace freeimm {

// GMP keeps mpq_class canonical (coprime, positive denominator) after every
// arithmetic operation; values built from raw parts must go through
// make_rational().
using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(long num, long den = 1);

/// "p/q" with q >= 1, always including the denominator ("-31/1").
std::string format_rational(const Rational& r);

/// Accepts "p/q", "p" and optional sign. Throws ValidationError otherwise.
Rational parse_rational(std::string_view text);

int sign(const Rational& r);
int sign(const BigInt& z);

bool is_canonical(const Rational& r);

}  // namespace freeimm
