#pragma once

#include "ellbr/arith/integer.hpp"
#include "ellbr/hilbert/invariants.hpp"

namespace ellbr {

// a = p^alpha * unit with the unit a p-adic unit.
struct LocalDecomposition {
  int alpha;
  Rational unit;
};
LocalDecomposition decompose(const Rational& a, long p);

// Quadratic Hilbert symbols, as +1 / -1.
int hilbert_two(const Rational& a, const Rational& b);
int hilbert_odd(long p, const Rational& a, const Rational& b);
int hilbert_real(const Rational& a, const Rational& b);
int hilbert_symbol(Place v, const Rational& a, const Rational& b);

// Local invariants of the quaternion algebra (a, b) over Q; aborts with std::logic_error
// if the entries do not sum to zero.
InvariantVector quaternion_invariants(const Rational& a, const Rational& b);

// Smallest search precision accepted by norm_oracle_quadratic for (a, b) at p.
int quadratic_oracle_precision(const Rational& a, const Rational& b, long p);

// Brute-force decision of whether z^2 = a x^2 + b y^2 has a nontrivial solution in Q_p,
// by a normalized residue search mod p^N and Hensel's lemma. N = 0 picks the minimum.
bool norm_oracle_quadratic(const Rational& a, const Rational& b, long p, int N = 0);

}  // namespace ellbr
