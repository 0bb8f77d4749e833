#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "ellbr/curves/domain.hpp"

namespace ellbr {

template <class F>
struct CurveInvariants {
  F b2, b4, b6, b8, c4, c6, discriminant;
};

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
template <class F>
class WeierstrassCurve {
 public:
  using Traits = DomainTraits<F>;

  WeierstrassCurve(F a1, F a2, F a3, F a4, F a6) : a_{a1, a2, a3, a4, a6} {}
  explicit WeierstrassCurve(std::array<F, 5> a) : a_(std::move(a)) {}

  const F& a1() const { return a_[0]; }
  const F& a2() const { return a_[1]; }
  const F& a3() const { return a_[2]; }
  const F& a4() const { return a_[3]; }
  const F& a6() const { return a_[4]; }
  const std::array<F, 5>& ainvs() const { return a_; }

  CurveInvariants<F> invariants() const {
    auto k = [this](long n) { return Traits::from_int(a_[0], n); };
    const F &a1 = a_[0], &a2 = a_[1], &a3 = a_[2], &a4 = a_[3], &a6 = a_[4];
    CurveInvariants<F> r{k(0), k(0), k(0), k(0), k(0), k(0), k(0)};
    r.b2 = a1 * a1 + k(4) * a2;
    r.b4 = k(2) * a4 + a1 * a3;
    r.b6 = a3 * a3 + k(4) * a6;
    r.b8 = a1 * a1 * a6 + k(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    r.c4 = r.b2 * r.b2 - k(24) * r.b4;
    r.c6 = -(r.b2 * r.b2 * r.b2) + k(36) * r.b2 * r.b4 - k(216) * r.b6;
    r.discriminant = -(r.b2 * r.b2 * r.b8) - k(8) * r.b4 * r.b4 * r.b4 - k(27) * r.b6 * r.b6 + k(9) * r.b2 * r.b4 * r.b6;
    return r;
  }

  F discriminant() const { return invariants().discriminant; }
  bool is_elliptic() const { return Traits::is_unit(discriminant()); }

  F j_invariant() const {
    auto inv = invariants();
    if (!Traits::is_unit(inv.discriminant)) throw std::domain_error("j-invariant of a singular curve");
    return inv.c4 * inv.c4 * inv.c4 / inv.discriminant;
  }

  // (x, y) -> (x, y - (a1 x + a3)/2): y^2 = x^3 + b2/4 x^2 + b4/2 x + b6/4. Needs 2 invertible.
  WeierstrassCurve complete_square() const {
    auto k = [this](long n) { return Traits::from_int(a_[0], n); };
    if (!Traits::is_unit(k(2))) throw std::domain_error("completing the square needs 2 invertible");
    auto inv = invariants();
    return WeierstrassCurve(k(0), inv.b2 / k(4), k(0), inv.b4 / k(2), inv.b6 / k(4));
  }

  std::string to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < 5; ++i) s += (i ? "," : "") + Traits::to_string(a_[i]);
    return s + "]";
  }

 private:
  std::array<F, 5> a_;
};

using RationalCurve = WeierstrassCurve<Rational>;

// Parses "[a1,a2,a3,a4,a6]" (LMFDB ainvs order); entries may be rationals.
RationalCurve parse_ainvs(const std::string& text);

}  // namespace ellbr
