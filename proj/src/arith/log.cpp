#include "ellbr/arith/log.hpp"

#include <algorithm>

namespace ellbr {

namespace {

// True once every term i' >= i has valuation >= target, i.e. p^(i*v - target) >= i^e.
bool tail_negligible(long p, long i, int v, int e, int target) {
  long excess = i * v - target;
  if (excess < 0 || i < 2) return false;
  return ipow(p, static_cast<unsigned long>(excess)) >= ipow(i, static_cast<unsigned long>(e));
}

int digits_in(long i, long p) { return valuation(Integer(i), p); }

template <class T, class Truncate, class Scale>
T log_series(const T& y, int v, long p, int e, int target, T zero, Truncate truncate, Scale divide) {
  T sum = zero;
  T power = y;
  for (long i = 1;; ++i) {
    if (i > 1) power = power * y;
    if (i * v - e * digits_in(i, p) < target) {
      T term = divide(power, i);
      sum = (i % 2 == 1) ? sum + term : sum - term;
    }
    if (tail_negligible(p, i + 1, v, e, target)) break;
  }
  return truncate(sum, target);
}

}  // namespace

PAdic padic_log(const PAdic& x, int target) {
  long p = x.prime();
  PAdic y = x - PAdic::from_integer(1, p, std::max({target, x.absolute_precision(), 1}));
  if (y.is_zero()) return PAdic::zero(p, std::min(target, y.absolute_precision()));
  int v = y.valuation();
  if (v < 1) throw std::domain_error("padic_log: need v(x - 1) >= 1");
  return log_series<PAdic>(
      y, v, p, 1, target, PAdic::zero(p, target), [](const PAdic& s, int t) { return s.truncated(t); },
      [p, target](const PAdic& s, long i) { return s / PAdic::from_integer(i, p, std::max(target, 1) + 2); });
}

ZetaThreeLocal padic_log(const ZetaThreeLocal& x, int target) {
  ZetaThreeLocal y = x - ZetaThreeLocal::one(std::max({target, x.absolute_precision(), 2}));
  if (y.is_zero()) {
    int k = std::min(target, y.absolute_precision()) / 2;
    return {PAdic::zero(3, k), PAdic::zero(3, k)};
  }
  PAdic n = y.norm();
  if (!n.is_zero() && n.valuation() < 1) throw std::domain_error("padic_log: need v_pi(x - 1) >= 1");
  int v = n.is_zero() ? n.absolute_precision() : n.valuation();
  int k = (target + 1) / 2 + 1;
  ZetaThreeLocal zero{PAdic::zero(3, k), PAdic::zero(3, k)};
  return log_series<ZetaThreeLocal>(
      y, v, 3, 2, target, zero, [](const ZetaThreeLocal& s, int t) { return s.truncated(t); },
      [target](const ZetaThreeLocal& s, long i) {
        return ZetaThreeLocal{s.a() / PAdic::from_integer(i, 3, target + 2), s.b() / PAdic::from_integer(i, 3, target + 2)};
      });
}

PiPowerTrace trace_pi_power(unsigned m) {
  static const long tail[6] = {2, 3, 3, 0, -9, -27};
  PiPowerTrace r;
  r.closed_form = ipow(-27, m / 6) * tail[m % 6];
  // (a + b zeta)(1 - zeta) = a + b zeta - a zeta - b zeta^2 = (a + b) + (2b - a) zeta
  Integer a = 1, b = 0;
  for (unsigned i = 0; i < m; ++i) {
    Integer na = a + b, nb = 2 * b - a;
    a = na;
    b = nb;
  }
  r.expansion = 2 * a - b;
  if (r.closed_form != r.expansion)
    throw std::logic_error("trace of pi^" + std::to_string(m) + ": closed form disagrees with expansion");
  return r;
}

}  // namespace ellbr
