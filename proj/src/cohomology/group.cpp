#include "ellbr/cohomology/group.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ellbr {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<int>> table, std::vector<int> generators,
                         std::vector<std::string> element_names)
    : name_(std::move(name)), table_(std::move(table)), generators_(std::move(generators)), names_(std::move(element_names)) {
  int n = order();
  if (n < 1 || names_.size() != static_cast<size_t>(n)) throw std::invalid_argument("FiniteGroup: bad table");
  for (auto& row : table_)
    if (row.size() != static_cast<size_t>(n)) throw std::invalid_argument("FiniteGroup: table not square");
  for (int g = 0; g < n; ++g)
    if (table_[0][g] != g || table_[g][0] != g) throw std::invalid_argument("FiniteGroup: element 0 is not the identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) throw std::invalid_argument("FiniteGroup: not associative");
  inverse_.assign(n, -1);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (table_[g][h] == 0) inverse_[g] = h;
  if (std::count(inverse_.begin(), inverse_.end(), -1)) throw std::invalid_argument("FiniteGroup: missing inverses");
}

std::shared_ptr<const FiniteGroup> FiniteGroup::symmetric3() {
  using Perm = std::vector<int>;
  auto compose = [](const Perm& g, const Perm& h) {
    Perm r(3);
    for (int i = 0; i < 3; ++i) r[i] = g[h[i]];
    return r;
  };
  Perm id{0, 1, 2}, sigma{2, 0, 1}, tau{0, 2, 1};
  Perm sigma2 = compose(sigma, sigma);
  std::vector<Perm> elems{id, sigma, sigma2, tau, compose(sigma, tau), compose(sigma2, tau)};
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      Perm c = compose(elems[a], elems[b]);
      table[a][b] = static_cast<int>(std::find(elems.begin(), elems.end(), c) - elems.begin());
    }
  auto g = std::make_shared<FiniteGroup>("S3", table, std::vector<int>{1, 3},
                                         std::vector<std::string>{"1", "sigma", "sigma^2", "tau", "sigma*tau", "sigma^2*tau"});
  g->perms_ = elems;
  return g;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group of non-positive order");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) {
    names.push_back(a == 0 ? "1" : a == 1 ? "g" : "g^" + std::to_string(a));
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return std::make_shared<FiniteGroup>("C" + std::to_string(n), table, n > 1 ? std::vector<int>{1} : std::vector<int>{}, names);
}

std::shared_ptr<const FiniteGroup> FiniteGroup::by_name(const std::string& name) {
  if (name == "S3") return symmetric3();
  if (name.size() >= 2 && name[0] == 'C') {
    int n = std::stoi(name.substr(1));
    if (n >= 1 && n <= 24) return cyclic(n);
  }
  throw std::invalid_argument("unknown group '" + name + "' (expected S3 or Cn)");
}

int FiniteGroup::element(const std::string& name) const {
  for (int g = 0; g < order(); ++g)
    if (names_[g] == name) return g;
  throw std::invalid_argument("no element named " + name + " in " + name_);
}

FiniteGroup::Subgroup FiniteGroup::subgroup(const std::vector<int>& gens, const std::string& name) const {
  std::vector<int> elems{0};
  for (size_t i = 0; i < elems.size(); ++i)
    for (int s : gens) {
      int x = mul(elems[i], s);
      if (std::find(elems.begin(), elems.end(), x) == elems.end()) elems.push_back(x);
    }
  std::sort(elems.begin(), elems.end());
  int m = static_cast<int>(elems.size());
  std::map<int, int> index;
  for (int i = 0; i < m; ++i) index[elems[i]] = i;
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) table[a][b] = index.at(mul(elems[a], elems[b]));
  std::vector<int> sub_gens;
  for (int s : gens)
    if (s != 0) sub_gens.push_back(index.at(s));
  std::vector<std::string> names;
  for (int e : elems) names.push_back(names_[e]);
  return {std::make_shared<FiniteGroup>(name, table, sub_gens, names), elems};
}

}  // namespace ellbr
