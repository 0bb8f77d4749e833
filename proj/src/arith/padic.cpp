#include "ellbr/arith/padic.hpp"

#include <algorithm>
#include <sstream>

namespace ellbr {

PAdic PAdic::zero(long p, int absolute_precision) {
  if (!is_prime(p)) throw std::invalid_argument("PAdic: p must be prime");
  PAdic z;
  z.p_ = p;
  z.zero_ = true;
  z.abs_zero_ = absolute_precision;
  return z;
}

PAdic PAdic::from_rational(const Rational& x, long p, int precision) {
  if (!is_prime(p)) throw std::invalid_argument("PAdic: p must be prime");
  if (precision < 1) throw std::invalid_argument("PAdic: precision must be at least 1");
  if (x == 0) return zero(p, precision);
  PAdic r;
  r.p_ = p;
  r.zero_ = false;
  Integer num = x.get_num(), den = x.get_den();
  int vn = ellbr::valuation(num, p), vd = ellbr::valuation(den, p);
  num /= ipow(p, vn);
  den /= ipow(p, vd);
  r.v_ = vn - vd;
  r.rel_ = precision;
  Integer pn = ipow(p, precision);
  r.unit_ = mod(num * inverse_mod(den, pn), pn);
  return r;
}

PAdic PAdic::from_rational_absolute(const Rational& x, long p, int absolute_precision) {
  if (x == 0) return zero(p, absolute_precision);
  int v = ellbr::valuation(x, p);
  if (v >= absolute_precision) return zero(p, absolute_precision);
  return from_rational(x, p, absolute_precision - v);
}

int PAdic::valuation() const {
  if (zero_) throw PrecisionError("valuation of a value indistinguishable from zero");
  return v_;
}

const Integer& PAdic::unit() const {
  if (zero_) throw PrecisionError("unit part of a value indistinguishable from zero");
  return unit_;
}

Integer PAdic::residue(int k) const {
  if (k > absolute_precision()) throw PrecisionError("residue requested beyond known digits");
  if (k <= 0) return 0;
  if (zero_) return 0;
  if (v_ < 0) throw std::domain_error("residue of a non-integral p-adic value");
  return mod(unit_ * ipow(p_, v_), ipow(p_, k));
}

Rational PAdic::representative() const {
  if (zero_) return 0;
  if (v_ >= 0) return Rational(unit_ * ipow(p_, v_));
  return Rational(unit_, ipow(p_, -v_));
}

PAdic PAdic::truncated(int a) const {
  if (a >= absolute_precision()) return *this;
  if (zero_ || a <= v_) return zero(p_, a);
  PAdic r = *this;
  r.rel_ = a - v_;
  r.unit_ = mod(unit_, ipow(p_, r.rel_));
  return r;
}

PAdic PAdic::operator-() const {
  if (zero_) return *this;
  PAdic r = *this;
  r.unit_ = mod(-unit_, ipow(p_, rel_));
  return r;
}

void PAdic::check_compatible(const PAdic& other) const {
  if (p_ != other.p_) throw std::invalid_argument("PAdic: mismatched primes");
}

PAdic operator+(const PAdic& x, const PAdic& y) {
  x.check_compatible(y);
  long p = x.p_;
  int a = std::min(x.absolute_precision(), y.absolute_precision());
  if (x.zero_ && y.zero_) return PAdic::zero(p, a);
  if (x.zero_) return y.truncated(a);
  if (y.zero_) return x.truncated(a);
  int m = std::min(x.v_, y.v_);
  if (m >= a) return PAdic::zero(p, a);
  int e = a - m;
  Integer pe = ipow(p, e);
  Integer s = x.unit_ * ipow(p, x.v_ - m) + y.unit_ * ipow(p, y.v_ - m);
  s = mod(s, pe);
  if (s == 0) return PAdic::zero(p, a);
  int k = ellbr::valuation(s, p);
  PAdic r;
  r.p_ = p;
  r.zero_ = false;
  r.v_ = m + k;
  r.rel_ = e - k;
  r.unit_ = mod(s / ipow(p, k), ipow(p, r.rel_));
  return r;
}

PAdic operator*(const PAdic& x, const PAdic& y) {
  x.check_compatible(y);
  long p = x.p_;
  if (x.zero_ && y.zero_) return PAdic::zero(p, x.abs_zero_ + y.abs_zero_);
  if (x.zero_) return PAdic::zero(p, x.abs_zero_ + y.v_);
  if (y.zero_) return PAdic::zero(p, y.abs_zero_ + x.v_);
  PAdic r;
  r.p_ = p;
  r.zero_ = false;
  r.v_ = x.v_ + y.v_;
  r.rel_ = std::min(x.rel_, y.rel_);
  r.unit_ = mod(x.unit_ * y.unit_, ipow(p, r.rel_));
  return r;
}

PAdic operator/(const PAdic& x, const PAdic& y) {
  x.check_compatible(y);
  long p = x.p_;
  if (y.zero_) throw PrecisionError("division by a value indistinguishable from zero");
  if (x.zero_) return PAdic::zero(p, x.abs_zero_ - y.v_);
  PAdic r;
  r.p_ = p;
  r.zero_ = false;
  r.v_ = x.v_ - y.v_;
  r.rel_ = std::min(x.rel_, y.rel_);
  Integer pn = ipow(p, r.rel_);
  r.unit_ = mod(x.unit_ * inverse_mod(y.unit_, pn), pn);
  return r;
}

bool PAdic::agrees_with(const PAdic& other) const { return (*this - other).is_zero(); }

std::string PAdic::to_string() const {
  std::ostringstream os;
  if (zero_) {
    os << "O(" << p_ << "^" << abs_zero_ << ")";
    return os.str();
  }
  os << unit_.get_str();
  if (v_ != 0) os << "*" << p_ << "^" << v_;
  os << " + O(" << p_ << "^" << absolute_precision() << ")";
  return os.str();
}

}  // namespace ellbr
