#include "ellbr/cohomology/module.hpp"

#include <algorithm>

namespace ellbr {

namespace {

std::optional<Integer> detect_uniform_modulus(const IntMatrix& r, size_t k) {
  if (r.cols() == 0 || r.is_zero()) return Integer(0);
  if (r.rows() != k || r.cols() != k) return std::nullopt;
  Integer n = r(0, 0);
  if (n <= 0) return std::nullopt;
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      if (r(i, j) != (i == j ? n : Integer(0))) return std::nullopt;
  return n;
}

}  // namespace

GroupModule::GroupModule(std::shared_ptr<const FiniteGroup> group, size_t rank, IntMatrix relations,
                         const std::vector<IntMatrix>& generator_action, std::string name,
                         std::vector<std::string> basis_labels)
    : group_(std::move(group)), rank_(rank), relations_(std::move(relations)), name_(std::move(name)), labels_(std::move(basis_labels)) {
  if (relations_.cols() == 0) relations_ = IntMatrix(rank_, 0);
  if (relations_.rows() != rank_) throw std::invalid_argument("GroupModule: relation matrix has wrong height");
  if (generator_action.size() != group_->generators().size())
    throw std::invalid_argument("GroupModule: one action matrix per generator required");
  modulus_ = detect_uniform_modulus(relations_, rank_);
  int n = group_->order();
  action_.assign(n, IntMatrix());
  action_[0] = IntMatrix::identity(rank_);
  std::vector<int> reached{0};
  for (size_t i = 0; i < reached.size(); ++i)
    for (size_t s = 0; s < group_->generators().size(); ++s) {
      const IntMatrix& a = generator_action[s];
      if (a.rows() != rank_ || a.cols() != rank_) throw std::invalid_argument("GroupModule: action matrix has wrong shape");
      int g = group_->mul(reached[i], group_->generators()[s]);
      if (action_[g].rows() == 0) {
        action_[g] = action_[reached[i]] * a;
        reached.push_back(g);
      }
    }
  if (static_cast<int>(reached.size()) != n) throw std::invalid_argument("GroupModule: generators do not generate the group");
  // Relations: A_g A_h = A_gh and A_g preserves the relation lattice.
  for (int g = 0; g < n; ++g) {
    IntMatrix moved = action_[g] * relations_;
    for (size_t j = 0; j < moved.cols(); ++j)
      if (!in_relations(moved.column(j))) throw std::invalid_argument("GroupModule: action does not preserve the relations");
    for (int h = 0; h < n; ++h) {
      IntMatrix diff = action_[g] * action_[h] - action_[group_->mul(g, h)];
      for (size_t j = 0; j < rank_; ++j)
        if (!in_relations(diff.column(j))) throw std::invalid_argument("GroupModule: action matrices violate the group law");
    }
  }
}

bool GroupModule::in_relations(const IntVector& v) const {
  if (modulus_) {
    for (auto& x : v) {
      if (*modulus_ == 0 ? x != 0 : !mpz_divisible_p(x.get_mpz_t(), modulus_->get_mpz_t())) return false;
    }
    return true;
  }
  return in_column_lattice(relations_, v);
}

IntVector GroupModule::reduce(const IntVector& v) const {
  if (!modulus_ || *modulus_ == 0) return v;
  IntVector r = v;
  for (auto& x : r) x = mod(x, *modulus_);
  return r;
}

FgAbelianGroup GroupModule::underlying_group() const {
  SmithForm s = smith_normal_form(relations_, kSmithNone);
  std::vector<Integer> orders(s.diagonal);
  for (size_t i = s.rank; i < rank_; ++i) orders.emplace_back(0);
  return FgAbelianGroup::from_cyclic_orders(orders);
}

GroupModule GroupModule::trivial(std::shared_ptr<const FiniteGroup> group, long n) {
  if (n < 0) throw std::invalid_argument("trivial module: negative order");
  return trivial_sum(std::move(group), {n}, n == 0 ? "Z" : "Z/" + std::to_string(n));
}

GroupModule GroupModule::trivial_sum(std::shared_ptr<const FiniteGroup> group, const std::vector<long>& orders,
                                     const std::string& name) {
  size_t k = orders.size();
  IntMatrix rel(k, k);
  for (size_t i = 0; i < k; ++i) rel(i, i) = orders[i];
  std::vector<IntMatrix> act(group->generators().size(), IntMatrix::identity(k));
  return GroupModule(std::move(group), k, rel, act, name);
}

GroupModule GroupModule::permutation(std::shared_ptr<const FiniteGroup> s3) {
  if (s3->permutations().empty()) throw std::invalid_argument("permutation module needs S3");
  std::vector<IntMatrix> act;
  for (int g : s3->generators()) {
    IntMatrix m(3, 3);
    for (int i = 0; i < 3; ++i) m(s3->permutations()[g][i], i) = 1;
    act.push_back(m);
  }
  return GroupModule(s3, 3, IntMatrix(3, 0), act, "rho", {"e1", "e2", "e3"});
}

GroupModule GroupModule::reduced_permutation(std::shared_ptr<const FiniteGroup> s3) {
  if (s3->permutations().empty()) throw std::invalid_argument("reduced permutation module needs S3");
  // sigma(t) = (t-1)/t and tau(t) = 1/t acting on units mod constants.
  IntMatrix sigma = IntMatrix::from_rows({{-1, -1}, {1, 0}});
  IntMatrix tau = IntMatrix::from_rows({{-1, -1}, {0, 1}});
  return GroupModule(s3, 2, IntMatrix(2, 0), {sigma, tau}, "rhotilde", {"[t]", "[t-1]"});
}

GroupModule GroupModule::tensor_cyclic(long n) const {
  if (!modulus_ || *modulus_ != 0) throw std::invalid_argument("tensor_cyclic: module must be a lattice");
  if (n < 0) throw std::invalid_argument("tensor_cyclic: negative modulus");
  IntMatrix rel(rank_, rank_);
  for (size_t i = 0; i < rank_; ++i) rel(i, i) = n;
  std::vector<IntMatrix> act;
  for (int g : group_->generators()) act.push_back(action_[g]);
  return GroupModule(group_, rank_, rel, act, n == 0 ? name_ : name_ + "/" + std::to_string(n), labels_);
}

GroupModule GroupModule::restrict_to(const FiniteGroup::Subgroup& h) const {
  std::vector<IntMatrix> act;
  for (int g : h.group->generators()) act.push_back(action_[h.embedding[g]]);
  return GroupModule(h.group, rank_, relations_, act, name_, labels_);
}

GroupModule GroupModule::by_name(std::shared_ptr<const FiniteGroup> group, const std::string& name) {
  std::string base = name;
  long n = 0;
  auto slash = name.find('/');
  if (slash != std::string::npos) {
    base = name.substr(0, slash);
    n = std::stol(name.substr(slash + 1));
    if (n < 2) throw std::invalid_argument("module modulus must be at least 2: " + name);
  }
  if (base == "Z") return trivial(group, n);
  if (base == "rho") return permutation(group).tensor_cyclic(n);
  if (base == "rhotilde" || base == "rho~") return reduced_permutation(group).tensor_cyclic(n);
  throw std::invalid_argument("unknown module '" + name + "' (expected Z, Z/n, rho, rho/n, rhotilde, rhotilde/n)");
}

}  // namespace ellbr
