#include "ellbr/arith/zeta3.hpp"

#include <algorithm>

namespace ellbr {

ZetaThreeLocal::ZetaThreeLocal(PAdic a, PAdic b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.prime() != 3 || b_.prime() != 3) throw std::invalid_argument("ZetaThreeLocal: coefficients must be 3-adic");
}

ZetaThreeLocal ZetaThreeLocal::from_rationals(const Rational& a, const Rational& b, int precision) {
  if (precision < 1) throw std::invalid_argument("ZetaThreeLocal: precision must be positive");
  int k = (precision + 1) / 2;
  return {PAdic::from_rational_absolute(a, 3, k), PAdic::from_rational_absolute(b, 3, k)};
}

ZetaThreeLocal ZetaThreeLocal::from_padic(const PAdic& x) { return {x, PAdic::zero(3, x.absolute_precision())}; }

PAdic ZetaThreeLocal::trace() const { return a_ + a_ - b_; }

PAdic ZetaThreeLocal::norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

ZetaThreeLocal ZetaThreeLocal::conjugate() const { return {a_ - b_, -b_}; }

int ZetaThreeLocal::valuation() const {
  PAdic n = norm();
  if (n.is_zero()) throw PrecisionError("pi-adic valuation of a value indistinguishable from zero");
  return n.valuation();
}

int ZetaThreeLocal::absolute_precision() const {
  return 2 * std::min(a_.absolute_precision(), b_.absolute_precision());
}

ZetaThreeLocal ZetaThreeLocal::truncated(int pi_digits) const {
  int k = pi_digits >= 0 ? pi_digits / 2 : -((-pi_digits + 1) / 2);
  return {a_.truncated(k), b_.truncated(k)};
}

ZetaThreeLocal operator+(const ZetaThreeLocal& x, const ZetaThreeLocal& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }

ZetaThreeLocal operator-(const ZetaThreeLocal& x, const ZetaThreeLocal& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }

ZetaThreeLocal operator*(const ZetaThreeLocal& x, const ZetaThreeLocal& y) {
  PAdic bd = x.b_ * y.b_;
  return {x.a_ * y.a_ - bd, x.a_ * y.b_ + x.b_ * y.a_ - bd};
}

ZetaThreeLocal operator/(const ZetaThreeLocal& x, const ZetaThreeLocal& y) {
  PAdic n = y.norm();
  if (n.is_zero()) throw PrecisionError("division by a value indistinguishable from zero");
  ZetaThreeLocal num = x * y.conjugate();
  return {num.a_ / n, num.b_ / n};
}

std::string ZetaThreeLocal::to_string() const { return "(" + a_.to_string() + ") + (" + b_.to_string() + ")*zeta"; }

}  // namespace ellbr
