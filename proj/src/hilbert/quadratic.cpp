#include "ellbr/hilbert/quadratic.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace ellbr {

namespace {

void require_nonzero(const Rational& a, const Rational& b) {
  if (a == 0 || b == 0) throw std::invalid_argument("Hilbert symbol of zero");
}

// A rational 2-adic unit mod 8.
long residue_mod8(const Rational& u) {
  Integer r = mod(Integer(u.get_num()) * inverse_mod(Integer(u.get_den()), 8), 8);
  return r.get_si();
}

int epsilon(long u8) { return ((u8 - 1) / 2) % 2; }
int omega(long u8) { return ((u8 * u8 - 1) / 8) % 2; }

}  // namespace

LocalDecomposition decompose(const Rational& a, long p) {
  if (a == 0) throw std::invalid_argument("decompose: zero");
  int alpha = valuation(a, p);
  Rational u = a;
  if (alpha > 0) u /= Rational(ipow(p, alpha));
  if (alpha < 0) u *= Rational(ipow(p, -alpha));
  u.canonicalize();
  return {alpha, u};
}

int hilbert_two(const Rational& a, const Rational& b) {
  require_nonzero(a, b);
  auto [alpha, u] = decompose(a, 2);
  auto [beta, v] = decompose(b, 2);
  long u8 = residue_mod8(u), v8 = residue_mod8(v);
  int e = epsilon(u8) * epsilon(v8) + mod(alpha, 2L) * omega(v8) + mod(beta, 2L) * omega(u8);
  return e % 2 ? -1 : 1;
}

int hilbert_odd(long p, const Rational& a, const Rational& b) {
  require_nonzero(a, b);
  if (p == 2 || !is_prime(p)) throw std::invalid_argument("hilbert_odd: p must be an odd prime");
  auto [alpha, u] = decompose(a, p);
  auto [beta, v] = decompose(b, p);
  long al = mod(alpha, 2L), be = mod(beta, 2L);
  int s = (al * be * ((p - 1) / 2)) % 2 ? -1 : 1;
  if (be) s *= legendre_unit(u, p);
  if (al) s *= legendre_unit(v, p);
  return s;
}

int hilbert_real(const Rational& a, const Rational& b) {
  require_nonzero(a, b);
  return (a < 0 && b < 0) ? -1 : 1;
}

int hilbert_symbol(Place v, const Rational& a, const Rational& b) {
  if (v.is_infinite()) return hilbert_real(a, b);
  if (v.p() == 2) return hilbert_two(a, b);
  return hilbert_odd(v.p(), a, b);
}

InvariantVector quaternion_invariants(const Rational& a, const Rational& b) {
  require_nonzero(a, b);
  std::set<long> primes{2};
  for (const Rational* x : {&a, &b})
    for (const Integer* part : {&x->get_num(), &x->get_den()})
      for (auto& [q, e] : factor(*part)) primes.insert(q.get_si());
  InvariantVector inv(2);
  inv.set(Place::infinity(), hilbert_real(a, b) == -1 ? 1 : 0);
  for (long p : primes) inv.set(Place::prime(p), hilbert_symbol(Place::prime(p), a, b) == -1 ? 1 : 0);
  if (!inv.satisfies_product_formula())
    throw std::logic_error("quaternion_invariants: product formula violated for (" + a.get_str() + ", " + b.get_str() + ")");
  return inv;
}

namespace {

// Integer representative of a's square class at p with valuation 0 or 1.
Integer normalized_coefficient(const Rational& a, long p) {
  Integer n = Integer(a.get_num()) * Integer(a.get_den());
  int v = valuation(n, p);
  return n / ipow(p, v - v % 2);
}

}  // namespace

int quadratic_oracle_precision(const Rational& a, const Rational& b, long p) {
  require_nonzero(a, b);
  Integer A = normalized_coefficient(a, p), B = normalized_coefficient(b, p);
  int v2 = p == 2 ? 1 : 0;
  return 2 * v2 + valuation(A, p) + valuation(B, p) + 3;
}

bool norm_oracle_quadratic(const Rational& a, const Rational& b, long p, int N) {
  require_nonzero(a, b);
  if (!is_prime(p)) throw std::invalid_argument("norm_oracle_quadratic: p must be prime");
  int need = quadratic_oracle_precision(a, b, p);
  if (N == 0) N = need;
  if (N < need) throw std::invalid_argument("norm_oracle_quadratic: precision below the Hensel threshold");
  Integer modulus = ipow(p, N);
  if (modulus > 20000000) throw std::invalid_argument("norm_oracle_quadratic: search space too large");
  long M = modulus.get_si();
  long A = mod(normalized_coefficient(a, p), modulus).get_si();
  long B = mod(normalized_coefficient(b, p), modulus).get_si();
  auto val = [p, N](long x) {
    if (x == 0) return N;
    int v = 0;
    while (x % p == 0) {
      x /= p;
      ++v;
    }
    return v;
  };
  // For each square class mod p^N, the least valuation of a square root.
  std::vector<int> root_val(M, -1);
  for (long z = 0; z < M; ++z) {
    long s = static_cast<long>((__int128)z * z % M);
    int vz = val(z);
    if (root_val[s] < 0 || vz < root_val[s]) root_val[s] = vz;
  }
  int v2 = p == 2 ? 1 : 0;
  auto admissible = [&](long x, long y) {
    long r = static_cast<long>(((__int128)A * x % M * x + (__int128)B * y % M * y) % M);
    int vz = root_val[r];
    if (vz < 0) return false;
    int k = std::min({v2 + val(A * x % M), v2 + val(B * y % M), v2 + vz});
    return N >= 2 * k + 1;
  };
  // A primitive solution has x or y a unit (z alone a unit would force z^2 = 0 mod p^2).
  for (long y = 0; y < M; ++y)
    if (admissible(1, y)) return true;
  for (long x = 0; x < M; x += p)
    if (admissible(x, 1)) return true;
  return false;
}

}  // namespace ellbr
