#pragma once

#include <string>
#include <vector>

#include "ellbr/brauer/profile.hpp"

namespace ellbr {

struct ExtensionGenerator {
  std::string label;
  long order;
};

// 0 -> Gm(S)/2 -> 2Br-bar'(M_S) -> G -> 0 with each lift of a G-basis element of order 2 or 4.
struct TwoExtension {
  FgAbelianGroup group;
  std::vector<ExtensionGenerator> generators;  // classes (u, Delta) for u in Gm(S)/2, then the lifts
  std::vector<std::string> audit;
};

// Needs Pic(S) = 0. A lift has order 4 when G -> Gm(S[i])/2 is injective, or when a cyclic
// quartic character exhibits 2 (chi, Delta)_4 = (g, Delta)_2; otherwise the call fails.
TwoExtension resolve_two_extension(const BaseProfile& S);

// Sum over p in P + {-1} of Z/2 for p = 3 mod 4 and Z/4 otherwise; P must contain 2.
FgAbelianGroup two_extension_closed_form(const std::vector<long>& primes);

struct PartResult {
  GroupDescription group;
  GroupDescription beyond_base;  // the part not coming from Br'(S)
  std::vector<std::string> audit;
};

// 3Br'(M_S) = 3Br'(S) + H^1(S, C_3) for F_q, Z[1/6] and algebraically closed bases.
PartResult three_part(const BaseProfile& S);

// pBr'(M_S) = pBr'(S) for p >= 5, given that S[1/2p] is dense and M_S -> S has a section.
PartResult p_part_large(const BaseProfile& S, long p, bool dense, bool has_section);

}  // namespace ellbr
