#pragma once

#include <string>

#include "ellbr/arith/integer.hpp"

namespace ellbr {

// Finite-precision element of Q_p: p^v * unit with the unit known mod p^N.
// A value whose digits are all unknown is kept as "zero at absolute precision A",
// meaning only that it lies in p^A Z_p.
class PAdic {
 public:
  PAdic() = default;

  static PAdic zero(long p, int absolute_precision);
  // Relative precision N: the unit part is recorded mod p^N.
  static PAdic from_rational(const Rational& x, long p, int precision);
  static PAdic from_integer(const Integer& x, long p, int precision) { return from_rational(Rational(x), p, precision); }
  // x known mod p^A; zero marker when v_p(x) >= A.
  static PAdic from_rational_absolute(const Rational& x, long p, int absolute_precision);

  long prime() const { return p_; }
  bool is_zero() const { return zero_; }
  int valuation() const;
  int relative_precision() const { return zero_ ? 0 : rel_; }
  int absolute_precision() const { return zero_ ? abs_zero_ : v_ + rel_; }
  // Unit part in [0, p^N); zero values have no unit.
  const Integer& unit() const;

  // Value mod p^k as a residue in [0, p^k); needs v >= 0 and k <= absolute precision.
  Integer residue(int k) const;
  // The rational integer p^v * unit (unit taken in [0, p^N)); only for v >= 0 representatives.
  Rational representative() const;

  // Forget digits beyond absolute precision a.
  PAdic truncated(int a) const;

  PAdic operator-() const;
  friend PAdic operator+(const PAdic& x, const PAdic& y);
  friend PAdic operator-(const PAdic& x, const PAdic& y) { return x + (-y); }
  friend PAdic operator*(const PAdic& x, const PAdic& y);
  friend PAdic operator/(const PAdic& x, const PAdic& y);

  // Equal as elements of Q_p / p^A for A the smaller absolute precision.
  bool agrees_with(const PAdic& other) const;

  std::string to_string() const;

 private:
  void check_compatible(const PAdic& other) const;

  long p_ = 2;
  bool zero_ = true;
  int v_ = 0;
  int rel_ = 0;
  int abs_zero_ = 0;
  Integer unit_ = 0;
};

}  // namespace ellbr
