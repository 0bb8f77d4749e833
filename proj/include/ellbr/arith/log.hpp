#pragma once

#include "ellbr/arith/padic.hpp"
#include "ellbr/arith/zeta3.hpp"

namespace ellbr {

// log(x) = sum (-1)^(i+1) (x-1)^i / i, needing v(x-1) >= 1.
// target is an absolute precision in uniformizer digits (p-digits for Q_p,
// pi-digits for Q_3(zeta_3)); the result never claims more than its inputs support.
PAdic padic_log(const PAdic& x, int target);
ZetaThreeLocal padic_log(const ZetaThreeLocal& x, int target);

struct PiPowerTrace {
  Integer closed_form;
  Integer expansion;
};

// Tr(pi^m) for pi = 1 - zeta_3: closed form (-27)^k * {2,3,3,0,-9,-27}[l] for m = 6k + l,
// next to the value from expanding (1 - zeta)^m in Z[zeta]. Throws if they differ.
PiPowerTrace trace_pi_power(unsigned m);

}  // namespace ellbr
