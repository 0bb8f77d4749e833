#include "ellbr/cohomology/abelian.hpp"

#include <algorithm>
#include <map>

namespace ellbr {

FgAbelianGroup FgAbelianGroup::from_cyclic_orders(const std::vector<Integer>& orders) {
  FgAbelianGroup g;
  std::map<Integer, std::vector<Integer>> powers;
  for (Integer d : orders) {
    if (d < 0) d = -d;
    if (d == 0) {
      ++g.free_rank_;
      continue;
    }
    for (auto& [p, e] : factor(d)) powers[p].push_back(ipow(p, e));
  }
  size_t len = 0;
  for (auto& [p, v] : powers) {
    std::sort(v.begin(), v.end(), std::greater<>());
    len = std::max(len, v.size());
  }
  // Largest invariant factor first, then reverse into divisibility order.
  std::vector<Integer> inv(len, Integer(1));
  for (auto& [p, v] : powers)
    for (size_t i = 0; i < v.size(); ++i) inv[i] *= v[i];
  std::reverse(inv.begin(), inv.end());
  g.torsion_ = inv;
  return g;
}

FgAbelianGroup FgAbelianGroup::from_cyclic_orders(std::initializer_list<long> orders) {
  std::vector<Integer> v;
  for (long d : orders) v.emplace_back(d);
  return from_cyclic_orders(v);
}

Integer FgAbelianGroup::order() const {
  if (free_rank_ > 0) throw std::domain_error("order of an infinite group");
  Integer n = 1;
  for (auto& d : torsion_) n *= d;
  return n;
}

FgAbelianGroup FgAbelianGroup::quotient_by(long n) const {
  std::vector<Integer> o;
  for (int i = 0; i < free_rank_; ++i) o.emplace_back(n);
  for (auto& d : torsion_) o.push_back(gcd(d, Integer(n)));
  return from_cyclic_orders(o);
}

FgAbelianGroup FgAbelianGroup::torsion_of(long n) const {
  std::vector<Integer> o;
  for (auto& d : torsion_) o.push_back(gcd(d, Integer(n)));
  return from_cyclic_orders(o);
}

FgAbelianGroup FgAbelianGroup::primary_part(long p) const {
  std::vector<Integer> o;
  for (auto& d : torsion_) o.push_back(ipow(p, valuation(d, p)));
  return from_cyclic_orders(o);
}

FgAbelianGroup FgAbelianGroup::operator+(const FgAbelianGroup& other) const {
  std::vector<Integer> o = torsion_;
  o.insert(o.end(), other.torsion_.begin(), other.torsion_.end());
  for (int i = 0; i < free_rank_ + other.free_rank_; ++i) o.emplace_back(0);
  return from_cyclic_orders(o);
}

std::vector<Integer> FgAbelianGroup::elementary_divisors() const {
  std::vector<Integer> out;
  for (auto& d : torsion_)
    for (auto& [p, e] : factor(d)) out.push_back(ipow(p, e));
  std::sort(out.begin(), out.end());
  for (int i = 0; i < free_rank_; ++i) out.emplace_back(0);
  return out;
}

std::string FgAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string s;
  auto add = [&s](const std::string& part) { s += (s.empty() ? "" : " + ") + part; };
  if (free_rank_ == 1) add("Z");
  if (free_rank_ > 1) add("Z^" + std::to_string(free_rank_));
  for (auto& d : torsion_) add("Z/" + d.get_str());
  return s;
}

}  // namespace ellbr
