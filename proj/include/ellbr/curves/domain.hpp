#pragma once

#include <string>

#include "ellbr/arith/integer.hpp"
#include "ellbr/arith/padic.hpp"

namespace ellbr {

// Element of F_p, p prime below 2^31.
class Fp {
 public:
  Fp(long p, long value);
  long prime() const { return p_; }
  long value() const { return v_; }

  Fp operator-() const { return Fp(p_, -v_); }
  friend Fp operator+(Fp x, Fp y) { return Fp(x.check(y), x.v_ + y.v_); }
  friend Fp operator-(Fp x, Fp y) { return Fp(x.check(y), x.v_ - y.v_); }
  friend Fp operator*(Fp x, Fp y) { return Fp(x.check(y), static_cast<long>((__int128)x.v_ * y.v_ % x.p_)); }
  friend Fp operator/(Fp x, Fp y) { return x * y.inverse(); }
  friend bool operator==(Fp x, Fp y) { return x.p_ == y.p_ && x.v_ == y.v_; }
  Fp inverse() const;
  std::string to_string() const { return std::to_string(v_) + " mod " + std::to_string(p_); }

 private:
  long check(Fp other) const;
  long p_, v_;
};

// The few operations the curve code needs from a coefficient domain.
template <class F>
struct DomainTraits;

template <>
struct DomainTraits<Rational> {
  static Rational from_int(const Rational&, long n) { return Rational(n); }
  static bool is_zero(const Rational& x) { return x == 0; }
  static bool is_unit(const Rational& x) { return x != 0; }
  static bool equal(const Rational& x, const Rational& y) { return x == y; }
  static std::string to_string(const Rational& x) { return x.get_str(); }
};

template <>
struct DomainTraits<Fp> {
  static Fp from_int(const Fp& like, long n) { return Fp(like.prime(), n); }
  static bool is_zero(const Fp& x) { return x.value() == 0; }
  static bool is_unit(const Fp& x) { return x.value() != 0; }
  static bool equal(const Fp& x, const Fp& y) { return x == y; }
  static std::string to_string(const Fp& x) { return x.to_string(); }
};

// Q_p at finite precision: "zero" means indistinguishable from zero, so a value is
// a unit only when it is certifiably nonzero. Constants carry the precision of `like`.
template <>
struct DomainTraits<PAdic> {
  static PAdic from_int(const PAdic& like, long n) {
    return PAdic::from_rational_absolute(n, like.prime(), std::max(like.absolute_precision(), 1) + 8);
  }
  static bool is_zero(const PAdic& x) { return x.is_zero(); }
  static bool is_unit(const PAdic& x) { return !x.is_zero(); }
  static bool equal(const PAdic& x, const PAdic& y) { return x.agrees_with(y); }
  static std::string to_string(const PAdic& x) { return x.to_string(); }
};

}  // namespace ellbr
