#include "ellbr/brauer/groups.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ellbr/cohomology/lattice.hpp"

namespace ellbr {

GroupDescription::GroupDescription(FgAbelianGroup finitely_generated, int rationals_mod_integers, std::map<long, int> local)
    : fg_(std::move(finitely_generated)), qz_(rationals_mod_integers) {
  for (auto& [l, c] : local) {
    if (!is_prime(l)) throw std::invalid_argument("GroupDescription: Q_l/Z_l needs a prime l");
    if (c > 0) local_[l] = c;
  }
}

std::optional<Integer> GroupDescription::order() const {
  if (!is_finite()) return std::nullopt;
  return fg_.order();
}

GroupDescription GroupDescription::primary_part(long l) const {
  std::map<long, int> local;
  int c = qz_;
  auto it = local_.find(l);
  if (it != local_.end()) c += it->second;
  if (c > 0) local[l] = c;
  return {fg_.primary_part(l), 0, local};
}

FgAbelianGroup GroupDescription::torsion_of(long n) const {
  std::vector<Integer> orders;
  for (auto& d : fg_.torsion()) orders.push_back(gcd(d, Integer(n)));
  for (int i = 0; i < qz_; ++i) orders.emplace_back(n);
  for (auto& [l, c] : local_)
    for (int i = 0; i < c; ++i) orders.push_back(ipow(l, valuation(Integer(n), l)));
  return FgAbelianGroup::from_cyclic_orders(orders);
}

GroupDescription GroupDescription::operator+(const GroupDescription& o) const {
  std::map<long, int> local = local_;
  for (auto& [l, c] : o.local_) local[l] += c;
  return {fg_ + o.fg_, qz_ + o.qz_, local};
}

std::string GroupDescription::to_string() const {
  std::vector<std::string> parts;
  if (!fg_.is_trivial()) parts.push_back(fg_.to_string());
  if (qz_ == 1) parts.push_back("Q/Z");
  if (qz_ > 1) parts.push_back("(Q/Z)^" + std::to_string(qz_));
  for (auto& [l, c] : local_) {
    std::string s = "Q_" + std::to_string(l) + "/Z_" + std::to_string(l);
    parts.push_back(c == 1 ? s : "(" + s + ")^" + std::to_string(c));
  }
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

LocalizedBrauer br_localized_integers(std::vector<long> primes, bool include_real, long truncation) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (long p : primes)
    if (!is_prime(p)) throw std::invalid_argument("br_localized_integers: " + std::to_string(p) + " is not prime");
  if (truncation < 1) throw std::invalid_argument("br_localized_integers: truncation must be positive");

  LocalizedBrauer out;
  out.primes = primes;
  out.include_real = include_real;
  out.truncation = truncation;
  int k = static_cast<int>(primes.size());
  if (k > 0) out.group = GroupDescription(include_real ? FgAbelianGroup::cyclic(2) : FgAbelianGroup(), k - 1);

  // N-torsion: local groups (1/N)Z/Z at each p and (1/2)Z/Z[N] at infinity, summed into (1/N)Z/Z.
  long N = truncation;
  long real_order = include_real ? std::gcd(2L, N) : 1;
  size_t m = primes.size() + (real_order == 2 ? 1 : 0);
  if (m == 0) {
    out.truncated = FgAbelianGroup();
    return out;
  }
  IntMatrix sum(1, m + 1);
  IntMatrix relations(m, m);
  for (size_t i = 0; i < primes.size(); ++i) {
    sum(0, i) = 1;
    relations(i, i) = N;
  }
  if (real_order == 2) {
    sum(0, m - 1) = N / 2;
    relations(m - 1, m - 1) = 2;
  }
  sum(0, m) = N;
  IntMatrix ker = kernel_basis(sum);
  IntMatrix proj(m, ker.cols());
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < ker.cols(); ++j) proj(i, j) = ker(i, j);
  LatticeQuotient q = LatticeQuotient::from_generators(column_lattice_basis(proj), relations);
  out.truncated = FgAbelianGroup::from_cyclic_orders(q.orders());
  for (const IntVector& g : q.generators()) {
    std::map<Place, Rational> inv;
    Rational total = 0;
    for (size_t i = 0; i < m; ++i) {
      bool real = real_order == 2 && i == m - 1;
      Integer den = real ? Integer(2) : Integer(N);
      Rational x(mod(g[i], den), den);
      x.canonicalize();
      total += x;
      if (x != 0) inv[real ? Place::infinity() : Place::prime(primes[i])] = x;
    }
    total.canonicalize();
    if (total.get_den() != 1) throw std::logic_error("br_localized_integers: generator violates the sum rule");
    out.generators.push_back(inv);
  }
  if (!(out.truncated == out.group.torsion_of(N)))
    throw std::logic_error("br_localized_integers: truncation disagrees with the symbolic group");
  return out;
}

}  // namespace ellbr
