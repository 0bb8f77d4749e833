#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ellbr {

using Integer = mpz_class;
using Rational = mpq_class;

// Raised when a finite-precision computation cannot certify the requested digits.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Integer ipow(const Integer& base, unsigned long exponent);
Integer ipow(long base, unsigned long exponent);

// Least non-negative residue.
Integer mod(const Integer& a, const Integer& m);
long mod(long a, long m);

// Exponent of p in a; a must be nonzero.
int valuation(const Integer& a, long p);
int valuation(const Rational& a, long p);

Integer inverse_mod(const Integer& a, const Integer& m);

bool is_prime(long n);
bool is_prime(const Integer& n);

// Prime factorization by trial division; n must be nonzero and small enough.
std::vector<std::pair<Integer, int>> factor(Integer n);

// Legendre symbol of a rational p-unit, as +1/-1.
int legendre_unit(const Rational& u, long p);

Integer squarefree_part(const Integer& n);

Rational parse_rational(const std::string& text);
std::string to_string(const Integer& a);
std::string to_string(const Rational& a);

long to_long(const Integer& a);

}  // namespace ellbr
