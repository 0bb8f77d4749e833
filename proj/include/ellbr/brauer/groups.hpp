#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ellbr/cohomology/abelian.hpp"
#include "ellbr/hilbert/invariants.hpp"

namespace ellbr {

// A finitely generated group plus divisible summands Q/Z and Q_l/Z_l, which are only ever
// handled symbolically or through their finite n-torsion.
class GroupDescription {
 public:
  GroupDescription() = default;
  GroupDescription(FgAbelianGroup finitely_generated, int rationals_mod_integers = 0, std::map<long, int> local = {});
  static GroupDescription rationals_mod_integers(int count = 1) { return {FgAbelianGroup(), count, {}}; }
  static GroupDescription local_divisible(long l, int count = 1) { return {FgAbelianGroup(), 0, {{l, count}}}; }

  const FgAbelianGroup& finitely_generated() const { return fg_; }
  int qz_count() const { return qz_; }
  const std::map<long, int>& local_divisible() const { return local_; }
  bool is_finite() const { return fg_.is_finite() && qz_ == 0 && local_.empty(); }
  bool is_trivial() const { return fg_.is_trivial() && qz_ == 0 && local_.empty(); }
  std::optional<Integer> order() const;

  GroupDescription primary_part(long l) const;
  // The n-torsion subgroup, always finite: the truncation used for divisible summands.
  FgAbelianGroup torsion_of(long n) const;
  GroupDescription operator+(const GroupDescription& other) const;
  friend bool operator==(const GroupDescription&, const GroupDescription&) = default;
  std::string to_string() const;

 private:
  FgAbelianGroup fg_;
  int qz_ = 0;
  std::map<long, int> local_;
};

// Br(Z_P) from the class field theory sequence
//   0 -> Br(Z_P) -> (+)_{p in P} Q/Z (+) Z/2 -> Q/Z -> 0,
// the real place included when include_real is set.
struct LocalizedBrauer {
  std::vector<long> primes;
  bool include_real = true;
  GroupDescription group;
  long truncation = 0;
  FgAbelianGroup truncated;                          // group[truncation], from the sum map
  std::vector<std::map<Place, Rational>> generators;  // invariant vectors of generators of group[truncation]
};

LocalizedBrauer br_localized_integers(std::vector<long> primes, bool include_real = true, long truncation = 12);

}  // namespace ellbr
