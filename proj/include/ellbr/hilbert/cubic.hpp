#pragma once

#include "ellbr/arith/zeta3.hpp"

namespace ellbr {

// Exponent e in {0,1,2} with (zeta, a)_pi = zeta^e, e = Tr(log a)/3 mod 3 (Artin-Hasse).
// Needs v_pi(a - 1) >= 1; throws PrecisionError when Tr(log a) is not known mod 9.
int cubic_symbol_one_unit(const ZetaThreeLocal& a);

// Same for any unit a: units are +-(1 + pi O) and (zeta, -1)_pi = 1.
// Non-units are rejected with std::invalid_argument (no pi-power arguments).
int cubic_symbol_unit(const ZetaThreeLocal& a);

// t = 2 + b*pi, the Legendre parameter at the 3-adic witness point for b.
ZetaThreeLocal legendre_witness_parameter(const PAdic& b, int precision);

struct CubicSymbol {
  int closed_form;  // 1 - b^2 mod 3
  int artin_hasse;  // (zeta, t-1) + (zeta, -t), using (zeta, -1) = 1
  int exponent() const { return closed_form; }
};

// (zeta, t(t-1))_pi for t = 2 + b*pi; throws std::logic_error if the two routes disagree.
CubicSymbol cubic_symbol_legendre(const PAdic& b, int precision = 12);

// Decides whether the unit a is a norm from K(u^(1/3)), K = Q_3(zeta_3), by enumerating
// the cubic norm form x^3 + u y^3 + u^2 z^3 - 3u xyz mod pi^N. N must be even, 4 <= N <= 8,
// and v_pi(+-u - 1) in {1, 2} so that the extension is totally ramified.
bool norm_oracle_cubic(const ZetaThreeLocal& a, const ZetaThreeLocal& u, int N);

}  // namespace ellbr
