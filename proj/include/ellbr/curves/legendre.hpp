#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ellbr/curves/weierstrass.hpp"
#include "ellbr/hilbert/quadratic.hpp"

namespace ellbr {

// t with t, t - 1 and 2 invertible; the curve y^2 = x(x - 1)(x - t).
template <class F>
class LegendreParameter {
 public:
  using Traits = DomainTraits<F>;

  explicit LegendreParameter(F t) : t_(std::move(t)) {
    F one = Traits::from_int(t_, 1), two = Traits::from_int(t_, 2);
    if (!Traits::is_unit(t_) || !Traits::is_unit(t_ - one) || !Traits::is_unit(two))
      throw std::invalid_argument("Legendre parameter needs t, t - 1 and 2 invertible");
  }

  const F& t() const { return t_; }

  // x(x - 1)(x - t) = x^3 - (1 + t) x^2 + t x
  WeierstrassCurve<F> curve() const {
    F zero = Traits::from_int(t_, 0), one = Traits::from_int(t_, 1);
    return WeierstrassCurve<F>(zero, -(one + t_), zero, t_, zero);
  }

 private:
  F t_;
};

// 16 t^2 (t - 1)^2, cross-checked against the discriminant of the expanded curve.
template <class F>
F legendre_discriminant(const LegendreParameter<F>& p) {
  using T = DomainTraits<F>;
  const F& t = p.t();
  F u = t - T::from_int(t, 1);
  F d = T::from_int(t, 16) * t * t * u * u;
  if (!T::equal(d, p.curve().discriminant()))
    throw std::logic_error("legendre_discriminant: closed form disagrees with the Weierstrass invariants");
  return d;
}

// t = (e3 - e1)/(e2 - e1) for y^2 = (x - e1)(x - e2)(x - e3).
template <class F>
LegendreParameter<F> legendre_from_roots(const F& e1, const F& e2, const F& e3) {
  using T = DomainTraits<F>;
  if (!T::is_unit(e2 - e1) || !T::is_unit(e3 - e1) || !T::is_unit(e3 - e2))
    throw std::invalid_argument("legendre_from_roots: roots must be pairwise distinct");
  if (!T::is_unit(T::from_int(e1, 2))) throw std::invalid_argument("legendre_from_roots: 2 must be invertible");
  return LegendreParameter<F>((e3 - e1) / (e2 - e1));
}

// sigma(t) = (t - 1)/t, tau(t) = 1/t.
template <class F>
F s3_sigma(const F& t) {
  return (t - DomainTraits<F>::from_int(t, 1)) / t;
}
template <class F>
F s3_tau(const F& t) {
  return DomainTraits<F>::from_int(t, 1) / t;
}

template <class F>
struct S3Orbit {
  std::vector<std::pair<std::string, F>> images;  // labelled by the acting word, applied right to left
  bool degenerate;                                // fewer than six distinct values
};

// The six images of t; checks sigma^3 = tau^2 = id, tau sigma tau = sigma^2 and that j is constant.
template <class F>
S3Orbit<F> s3_orbit(const LegendreParameter<F>& p) {
  using T = DomainTraits<F>;
  const F& t = p.t();
  F s = s3_sigma(t), s2 = s3_sigma(s), tt = s3_tau(t);
  if (!T::equal(s3_sigma(s2), t) || !T::equal(s3_tau(tt), t)) throw std::logic_error("s3_orbit: sigma^3 or tau^2 is not the identity");
  if (!T::equal(s3_tau(s3_sigma(tt)), s2)) throw std::logic_error("s3_orbit: tau sigma tau != sigma^2");
  S3Orbit<F> o{{{"id", t}, {"sigma", s}, {"sigma^2", s2}, {"tau", tt}, {"sigma*tau", s3_sigma(tt)}, {"sigma^2*tau", s3_sigma(s3_sigma(tt))}}, false};
  F j = p.curve().j_invariant();
  for (auto& [label, v] : o.images)
    if (!T::equal(LegendreParameter<F>(v).curve().j_invariant(), j)) throw std::logic_error("s3_orbit: j not constant on the orbit");
  for (size_t i = 0; i < o.images.size(); ++i)
    for (size_t k = i + 1; k < o.images.size(); ++k)
      if (T::equal(o.images[i].second, o.images[k].second)) o.degenerate = true;
  return o;
}

struct PointSymbols {
  int minus_one;  // (-1, Delta)_2
  int two;        // (2, Delta)_2
};

// Local values at the Q_2-point of the classes (-1, Delta) and (2, Delta); needs v_2(Delta) = 0.
PointSymbols point_symbol_pair(const RationalCurve& curve);

}  // namespace ellbr
