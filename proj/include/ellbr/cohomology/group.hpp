#pragma once

#include <memory>
#include <string>
#include <vector>

namespace ellbr {

// Finite group given by its multiplication table; element 0 is the identity.
class FiniteGroup {
 public:
  FiniteGroup(std::string name, std::vector<std::vector<int>> table, std::vector<int> generators,
              std::vector<std::string> element_names);

  // S3 acting on {1,2,3}: sigma = (1 3 2), tau = (2 3). Elements in the order
  // id, sigma, sigma^2, tau, sigma*tau, sigma^2*tau (products act right to left).
  static std::shared_ptr<const FiniteGroup> symmetric3();
  static std::shared_ptr<const FiniteGroup> cyclic(int n);
  // "S3", "C2", "C3", "C4", ...
  static std::shared_ptr<const FiniteGroup> by_name(const std::string& name);

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(table_.size()); }
  int mul(int g, int h) const { return table_[g][h]; }
  int inv(int g) const { return inverse_[g]; }
  const std::vector<int>& generators() const { return generators_; }
  const std::string& element_name(int g) const { return names_[g]; }
  int element(const std::string& name) const;

  // The subgroup generated by `gens`, with embedding[i] = index in this group.
  struct Subgroup {
    std::shared_ptr<const FiniteGroup> group;
    std::vector<int> embedding;
  };
  Subgroup subgroup(const std::vector<int>& gens, const std::string& name) const;

  // For S3 only: the permutation of {0,1,2} an element induces.
  const std::vector<std::vector<int>>& permutations() const { return perms_; }

 private:
  std::string name_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_, generators_;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> perms_;
};

}  // namespace ellbr
