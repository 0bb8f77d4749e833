#pragma once

#include <string>

#include "ellbr/arith/padic.hpp"

namespace ellbr {

// Element a + b*zeta of Q_3(zeta_3), zeta^2 = -1 - zeta, with 3-adic coefficients.
// Uniformizer pi = 1 - zeta; 3 O = pi^2 O, so coefficient precision k means
// the element is known mod pi^(2k).
class ZetaThreeLocal {
 public:
  ZetaThreeLocal(PAdic a, PAdic b);

  // Exact rational coefficients, known to at least N pi-adic digits.
  static ZetaThreeLocal from_rationals(const Rational& a, const Rational& b, int precision);
  static ZetaThreeLocal one(int precision) { return from_rationals(1, 0, precision); }
  static ZetaThreeLocal zeta(int precision) { return from_rationals(0, 1, precision); }
  static ZetaThreeLocal pi(int precision) { return from_rationals(1, -1, precision); }
  static ZetaThreeLocal from_padic(const PAdic& x);

  const PAdic& a() const { return a_; }
  const PAdic& b() const { return b_; }

  PAdic trace() const;
  PAdic norm() const;
  ZetaThreeLocal conjugate() const;

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  // v_pi, read off as v_3 of the norm.
  int valuation() const;
  // Known mod pi^absolute_precision().
  int absolute_precision() const;
  ZetaThreeLocal truncated(int pi_digits) const;

  ZetaThreeLocal operator-() const { return {-a_, -b_}; }
  friend ZetaThreeLocal operator+(const ZetaThreeLocal& x, const ZetaThreeLocal& y);
  friend ZetaThreeLocal operator-(const ZetaThreeLocal& x, const ZetaThreeLocal& y);
  friend ZetaThreeLocal operator*(const ZetaThreeLocal& x, const ZetaThreeLocal& y);
  friend ZetaThreeLocal operator/(const ZetaThreeLocal& x, const ZetaThreeLocal& y);
  friend ZetaThreeLocal operator*(const PAdic& c, const ZetaThreeLocal& y) { return {c * y.a_, c * y.b_}; }

  bool agrees_with(const ZetaThreeLocal& other) const { return (*this - other).is_zero(); }
  std::string to_string() const;

 private:
  PAdic a_, b_;
};

}  // namespace ellbr
