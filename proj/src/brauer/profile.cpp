#include "ellbr/brauer/profile.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ellbr/hilbert/quadratic.hpp"

namespace ellbr {

bool BaseProfile::six_invertible() const {
  switch (kind) {
    case BaseKind::finite_field: return q % 3 != 0;
    case BaseKind::localized_integers: return std::find(primes.begin(), primes.end(), 3) != primes.end();
    case BaseKind::gaussian_localized: return false;
    case BaseKind::algebraically_closed: return true;  // characteristic zero
  }
  return false;
}

bool BaseProfile::contains_i() const {
  switch (kind) {
    case BaseKind::finite_field: return q % 4 == 1;
    case BaseKind::gaussian_localized:
    case BaseKind::algebraically_closed: return true;
    default: return false;
  }
}

FgAbelianGroup BaseProfile::units_mod(long n) const { return units ? units->quotient_by(n) : FgAbelianGroup(); }

FgAbelianGroup BaseProfile::mu(long n) const {
  switch (kind) {
    case BaseKind::finite_field: return FgAbelianGroup::cyclic(std::gcd(n, q - 1));
    case BaseKind::localized_integers: return FgAbelianGroup::cyclic(std::gcd(n, 2L));
    case BaseKind::gaussian_localized: return FgAbelianGroup::cyclic(std::gcd(n, 4L));
    case BaseKind::algebraically_closed: return FgAbelianGroup::cyclic(n);
  }
  return {};
}

std::optional<FgAbelianGroup> BaseProfile::h1_mu(long n) const {
  if (!picard_torsion(n).is_trivial()) return std::nullopt;
  return units_mod(n);
}

namespace {

// u in G iff the invariant vector of (-1, u) vanishes; for a base with Br(S) = 0 every
// class vanishes.
void compute_g(BaseProfile& S) {
  size_t k = S.units_mod_2_basis.size();
  std::vector<ModVector> rows;
  if (S.kind == BaseKind::localized_integers) {
    std::set<Place> places;
    std::vector<InvariantVector> inv;
    for (auto& u : S.units_mod_2_values) {
      inv.push_back(quaternion_invariants(-1, u));
      for (Place v : inv.back().support()) places.insert(v);
    }
    for (Place v : places) {
      ModVector row(k, 0);
      for (size_t j = 0; j < k; ++j) row[j] = inv[j].at(v);
      rows.push_back(row);
    }
    S.provenance.push_back("G: kernel over F_2 of u -> inv((-1, u)) at " + std::to_string(places.size()) + " places");
  } else if (S.brauer.is_trivial()) {
    S.provenance.push_back("G: Br(S) = 0, so every (-1, u) vanishes");
  } else {
    throw std::logic_error("compute_g: no rule for this base");
  }
  S.g_basis = k == 0 ? std::vector<ModVector>{} : kernel_mod(rows, k, 2);
  S.g_labels.clear();
  for (auto& v : S.g_basis) {
    std::string label;
    for (size_t j = 0; j < k; ++j)
      if (v[j]) label += (label.empty() ? "" : "*") + S.units_mod_2_basis[j];
    S.g_labels.push_back(label);
  }
}

bool odd_prime_power(long q, long& p) {
  if (q < 3) return false;
  for (p = 3; p * p <= q; p += 2)
    if (q % p == 0) break;
  if (p * p > q) p = q;
  if (!is_prime(p) || p == 2) return false;
  long r = q;
  while (r % p == 0) r /= p;
  return r == 1;
}

}  // namespace

BaseProfile finite_field_profile(long q) {
  long p = 0;
  if (!odd_prime_power(q, p)) throw std::invalid_argument("finite_field_profile: q must be an odd prime power");
  BaseProfile S;
  S.name = "F_" + std::to_string(q);
  S.kind = BaseKind::finite_field;
  S.q = q;
  S.units = FgAbelianGroup::cyclic(q - 1);
  S.units_mod_2_basis = {"g"};
  S.provenance = {"Gm(F_q) cyclic of order q - 1, generated by g", "Pic = 0 and Br = 0 (local class field theory of finite fields)"};
  compute_g(S);
  return S;
}

BaseProfile localized_integers_profile(std::vector<long> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (long p : primes)
    if (!is_prime(p)) throw std::invalid_argument("localized_integers_profile: " + std::to_string(p) + " is not prime");
  if (primes.empty() || primes[0] != 2) throw std::invalid_argument("localized_integers_profile: 2 must be inverted");
  BaseProfile S;
  S.kind = BaseKind::localized_integers;
  S.primes = primes;
  std::string list;
  for (long p : primes) list += (list.empty() ? "" : ",") + std::to_string(p);
  S.name = primes.size() == 1 ? "Z[1/2]" : "Z[1/" + list + "]";
  if (primes == std::vector<long>{2, 3}) S.name = "Z[1/6]";
  S.units = FgAbelianGroup::from_cyclic_orders(std::vector<Integer>{Integer(2)}) +
            FgAbelianGroup::from_cyclic_orders(std::vector<Integer>(primes.size(), Integer(0)));
  S.brauer = br_localized_integers(primes).group;
  S.units_mod_2_basis.push_back("-1");
  S.units_mod_2_values.push_back(-1);
  for (long p : primes) {
    S.units_mod_2_basis.push_back(std::to_string(p));
    S.units_mod_2_values.push_back(p);
  }
  S.provenance = {"Gm(Z_P) = {+-1} x Z^|P|", "Pic(Z_P) = 0 (principal ideal domain)", "Br from the class field theory sequence"};
  compute_g(S);
  return S;
}

BaseProfile gaussian_profile() {
  BaseProfile S;
  S.name = "Z[1/2,i]";
  S.kind = BaseKind::gaussian_localized;
  S.units = FgAbelianGroup::from_cyclic_orders({4, 0});
  S.units_mod_2_basis = {"i", "1+i"};
  S.provenance = {"Gm = <i> x <1+i>, (1+i) the prime above 2", "Pic = 0 (Z[i] is Euclidean)",
                  "Br = 0: one finite place outside S and no real place"};
  compute_g(S);
  return S;
}

BaseProfile algebraically_closed_profile() {
  BaseProfile S;
  S.name = "algebraically closed";
  S.kind = BaseKind::algebraically_closed;
  S.provenance = {"Gm divisible, Pic = 0, Br = 0 (Tsen)"};
  compute_g(S);
  return S;
}

BaseProfile profile_by_name(const std::string& name) {
  if (name == "Z[1/2]") return localized_integers_profile({2});
  if (name == "Z[1/6]") return localized_integers_profile({2, 3});
  if (name == "Z[1/2,i]") return gaussian_profile();
  if (name == "closed") return algebraically_closed_profile();
  if (name.rfind("Fq:", 0) == 0) return finite_field_profile(std::stol(name.substr(3)));
  if (name.rfind("Z_P:", 0) == 0) {
    std::vector<long> primes;
    std::string rest = name.substr(4);
    size_t pos = 0;
    while (pos <= rest.size()) {
      size_t comma = rest.find(',', pos);
      if (comma == std::string::npos) comma = rest.size();
      primes.push_back(std::stol(rest.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    return localized_integers_profile(primes);
  }
  throw std::invalid_argument("unknown base profile '" + name + "'");
}

GaussianUnitMap gaussian_unit_map(const BaseProfile& S) {
  GaussianUnitMap m;
  size_t k = S.units_mod_2_basis.size();
  switch (S.kind) {
    case BaseKind::localized_integers: {
      m.target_basis = {"i", "1+i"};
      std::vector<std::pair<long, std::pair<size_t, size_t>>> slots;
      for (long p : S.primes) {
        if (p == 2) continue;
        size_t at = m.target_basis.size();
        if (p % 4 == 1) {
          long a = 1, b = 0;
          for (; a * a < p; ++a) {
            long r = p - a * a;
            Integer s;
            if (mpz_root(s.get_mpz_t(), Integer(r).get_mpz_t(), 2)) {
              b = to_long(s);
              break;
            }
          }
          if (a * a + b * b != p) throw std::logic_error("gaussian_unit_map: no sum of two squares");
          m.target_basis.push_back(std::to_string(a) + "+" + std::to_string(b) + "i");
          m.target_basis.push_back(std::to_string(a) + "-" + std::to_string(b) + "i");
          slots.push_back({p, {at, at + 1}});
          m.notes.push_back(std::to_string(p) + " = (" + std::to_string(a) + "+" + std::to_string(b) + "i)(" + std::to_string(a) +
                            "-" + std::to_string(b) + "i) splits");
        } else {
          m.target_basis.push_back(std::to_string(p));
          slots.push_back({p, {at, at}});
          m.notes.push_back(std::to_string(p) + " stays prime");
        }
      }
      size_t n = m.target_basis.size();
      for (size_t j = 0; j < k; ++j) {
        ModVector img(n, 0);
        Rational u = S.units_mod_2_values[j];
        if (u == 2) {
          img[0] = 1;  // 2 = -i (1+i)^2 = i^3 (1+i)^2
        } else if (u != -1) {  // -1 = i^2
          for (auto& [p, s] : slots)
            if (u == p) {
              img[s.first] = 1;
              img[s.second] = 1;
            }
        }
        m.images.push_back(img);
      }
      m.notes.push_back("-1 = i^2 and 2 = i^3 (1+i)^2");
      break;
    }
    case BaseKind::finite_field:
      if (S.q % 4 == 1) {
        m.target_basis = {"g@1", "g@2"};
        m.images = {{1, 1}};
        m.notes.push_back("i in F_q, so S[i] = S x S and the map is diagonal");
      } else {
        m.target_basis = {"h"};
        m.images = {{0}};
        m.notes.push_back("S[i] = F_{q^2}, in which every element of F_q is a square");
      }
      break;
    case BaseKind::gaussian_localized:
      m.target_basis = {"i@1", "1+i@1", "i@2", "1+i@2"};
      m.images = {{1, 0, 1, 0}, {0, 1, 0, 1}};
      m.notes.push_back("i in S, so S[i] = S x S and the map is diagonal");
      break;
    case BaseKind::algebraically_closed:
      break;
  }
  return m;
}

}  // namespace ellbr
