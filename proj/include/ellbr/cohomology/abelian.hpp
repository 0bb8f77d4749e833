#pragma once

#include <string>
#include <vector>

#include "ellbr/arith/integer.hpp"

namespace ellbr {

// Z^r + Z/d_1 + ... + Z/d_k with d_1 | d_2 | ... | d_k, each d_i >= 2.
class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;
  // Any list of cyclic orders; 0 stands for Z and 1 is dropped.
  static FgAbelianGroup from_cyclic_orders(const std::vector<Integer>& orders);
  static FgAbelianGroup from_cyclic_orders(std::initializer_list<long> orders);
  static FgAbelianGroup cyclic(long n) { return from_cyclic_orders({n}); }
  static FgAbelianGroup trivial() { return {}; }

  int free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }
  Integer order() const;

  // G/nG, G[n], and the p-primary part of the torsion.
  FgAbelianGroup quotient_by(long n) const;
  FgAbelianGroup torsion_of(long n) const;
  FgAbelianGroup primary_part(long p) const;
  FgAbelianGroup operator+(const FgAbelianGroup& other) const;
  // Elementary divisors (prime powers) followed by one 0 per free summand.
  std::vector<Integer> elementary_divisors() const;

  friend bool operator==(const FgAbelianGroup&, const FgAbelianGroup&) = default;
  std::string to_string() const;

 private:
  int free_rank_ = 0;
  std::vector<Integer> torsion_;
};

}  // namespace ellbr
