#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ellbr/cohomology/abelian.hpp"
#include "ellbr/cohomology/group.hpp"
#include "ellbr/cohomology/lattice.hpp"

namespace ellbr {

// Z^k / (column span of `relations`) with a G-action by integer matrices.
class GroupModule {
 public:
  // generator_action[i] is the matrix of group.generators()[i].
  GroupModule(std::shared_ptr<const FiniteGroup> group, size_t rank, IntMatrix relations,
              const std::vector<IntMatrix>& generator_action, std::string name = "",
              std::vector<std::string> basis_labels = {});

  static GroupModule trivial(std::shared_ptr<const FiniteGroup> group, long n);  // Z (n = 0) or Z/n
  // Trivial action on Z/n_1 + ... (entries 0 for Z).
  static GroupModule trivial_sum(std::shared_ptr<const FiniteGroup> group, const std::vector<long>& orders,
                                 const std::string& name = "");
  static GroupModule permutation(std::shared_ptr<const FiniteGroup> s3);          // rho = Z^3
  static GroupModule reduced_permutation(std::shared_ptr<const FiniteGroup> s3);  // rho~ in basis [t], [t-1]
  // M (a lattice, no relations) tensored with Z/n.
  GroupModule tensor_cyclic(long n) const;
  GroupModule restrict_to(const FiniteGroup::Subgroup& h) const;
  // "Z", "Z/n", "rho", "rho/n", "rhotilde", "rhotilde/n" over `group`.
  static GroupModule by_name(std::shared_ptr<const FiniteGroup> group, const std::string& name);

  const FiniteGroup& group() const { return *group_; }
  std::shared_ptr<const FiniteGroup> group_ptr() const { return group_; }
  size_t rank() const { return rank_; }
  const IntMatrix& relations() const { return relations_; }
  const IntMatrix& action(int g) const { return action_[g]; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }

  // n when the relation lattice is n * Z^k (0 for a lattice), else nothing.
  std::optional<Integer> uniform_modulus() const { return modulus_; }
  bool in_relations(const IntVector& v) const;
  IntVector reduce(const IntVector& v) const;
  FgAbelianGroup underlying_group() const;

 private:
  std::shared_ptr<const FiniteGroup> group_;
  size_t rank_;
  IntMatrix relations_;
  std::vector<IntMatrix> action_;
  std::string name_;
  std::vector<std::string> labels_;
  std::optional<Integer> modulus_;
};

}  // namespace ellbr
