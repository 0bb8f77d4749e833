#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ellbr/brauer/groups.hpp"
#include "ellbr/brauer/modular.hpp"

namespace ellbr {

enum class BaseKind { finite_field, localized_integers, gaussian_localized, algebraically_closed };

// The cohomological inputs of a base scheme S, as data. Units mod 2 carry a labeled F_2
// basis; G is derived from the quaternion algebras (-1, u) and never supplied by hand.
struct BaseProfile {
  std::string name;
  BaseKind kind = BaseKind::localized_integers;
  long q = 0;                // order of the finite field
  std::vector<long> primes;  // inverted primes of Z_P (always containing 2)

  std::optional<FgAbelianGroup> units;  // Gm(S); empty when Gm(S) is divisible
  FgAbelianGroup picard;
  GroupDescription brauer;
  std::vector<std::string> units_mod_2_basis;
  std::vector<Rational> units_mod_2_values;  // rational representatives, for Z_P only
  std::vector<ModVector> g_basis;            // coordinates in units_mod_2_basis
  std::vector<std::string> g_labels;
  std::vector<std::string> provenance;

  bool two_invertible() const { return true; }
  bool six_invertible() const;
  bool contains_i() const;

  FgAbelianGroup units_mod(long n) const;
  FgAbelianGroup mu(long n) const;  // mu_n(S)
  FgAbelianGroup picard_torsion(long n) const { return picard.torsion_of(n); }
  FgAbelianGroup picard_mod(long n) const { return picard.quotient_by(n); }
  // Kummer: 0 -> Gm/n -> H^1(S, mu_n) -> Pic[n] -> 0, reported as the split group when Pic[n] = 0.
  std::optional<FgAbelianGroup> h1_mu(long n) const;
  FgAbelianGroup g_group() const { return FgAbelianGroup::from_cyclic_orders(std::vector<Integer>(g_basis.size(), Integer(2))); }
};

BaseProfile finite_field_profile(long q);
// Z[1/p : p in P]; P must contain 2.
BaseProfile localized_integers_profile(std::vector<long> primes);
BaseProfile gaussian_profile();  // Z[1/2, i]
BaseProfile algebraically_closed_profile();
// "Fq:<q>", "Z[1/2]", "Z[1/6]", "Z_P:2,3,5", "Z[1/2,i]", "closed".
BaseProfile profile_by_name(const std::string& name);

// The map Gm(S)/2 -> Gm(S[i])/2 on the labeled bases, as image rows indexed by the basis of
// Gm(S)/2. For S = F_q with q = 3 mod 4 the map is zero.
struct GaussianUnitMap {
  std::vector<std::string> target_basis;
  std::vector<ModVector> images;
  std::vector<std::string> notes;
};
GaussianUnitMap gaussian_unit_map(const BaseProfile& S);

}  // namespace ellbr
