#pragma once

#include <set>
#include <vector>

#include "ellbr/arith/poly.hpp"

namespace ellbr {

// Order of the residue at p of the character of the cyclic extension cut out by f, i.e. the
// degree of the splitting field of f mod p. p must not divide disc(f) * deg(f).
int residue_character_order(const QPoly& f, long p);

// Cyclic cubic fields unramified outside P, for P inside {2, 3}.
std::vector<QPoly> cubic_fields_ramified_in(const std::set<long>& primes);

struct QuarticCharacter {
  long prime;
  QPoly polynomial;           // defining polynomial of the cyclic quartic field
  QPoly quadratic_subfield;   // minimal polynomial of an element generating the quadratic subfield
  Integer quadratic_discriminant;  // squarefree part of its discriminant; must equal the prime
};

// The cyclic quartic field ramified only at p: Q(zeta_16 + zeta_16^-1) for p = 2, the
// quartic Gaussian period field of Q(zeta_p) for p = 1 mod 4.
QuarticCharacter quartic_character_data(long p);

}  // namespace ellbr
