#include "ellbr/hilbert/cubic.hpp"

#include <algorithm>
#include <queue>
#include <vector>

#include "ellbr/arith/log.hpp"

namespace ellbr {

int cubic_symbol_one_unit(const ZetaThreeLocal& a) {
  ZetaThreeLocal y = a - ZetaThreeLocal::one(a.absolute_precision() + 2);
  if (!y.is_zero() && y.valuation() < 1) throw std::invalid_argument("cubic_symbol_one_unit: argument not in 1 + pi O");
  ZetaThreeLocal l = padic_log(a, a.absolute_precision());
  PAdic tr = l.trace();
  if (tr.absolute_precision() < 2)
    throw PrecisionError("cubic symbol: Tr(log a) known only mod 3^" + std::to_string(tr.absolute_precision()) +
                         "; retry with more digits");
  if (tr.is_zero()) return 0;
  if (tr.valuation() < 1) throw std::logic_error("cubic symbol: Tr(log a) is not divisible by 3");
  PAdic third = tr / PAdic::from_integer(3, 3, 4);
  return static_cast<int>(third.residue(1).get_si());
}

int cubic_symbol_unit(const ZetaThreeLocal& a) {
  if (a.is_zero() || a.valuation() != 0)
    throw std::invalid_argument("cubic symbol: only unit arguments are supported (no pi-power part)");
  ZetaThreeLocal one = ZetaThreeLocal::one(a.absolute_precision() + 2);
  ZetaThreeLocal d = a - one;
  if (d.is_zero() || d.valuation() >= 1) return cubic_symbol_one_unit(a);
  return cubic_symbol_one_unit(-a);
}

ZetaThreeLocal legendre_witness_parameter(const PAdic& b, int precision) {
  if (b.prime() != 3) throw std::invalid_argument("Legendre witness: b must be 3-adic");
  if (!b.is_zero() && b.valuation() < 0) throw std::invalid_argument("Legendre witness: b must lie in Z_3");
  ZetaThreeLocal two = ZetaThreeLocal::from_rationals(2, 0, precision);
  return two + b * ZetaThreeLocal::pi(precision);
}

CubicSymbol cubic_symbol_legendre(const PAdic& b, int precision) {
  if (b.absolute_precision() < 1) throw PrecisionError("cubic_symbol_legendre: b mod 3 unknown");
  ZetaThreeLocal t = legendre_witness_parameter(b, precision);
  ZetaThreeLocal one = ZetaThreeLocal::one(precision);
  CubicSymbol s;
  long b3 = b.residue(1).get_si();
  s.closed_form = static_cast<int>(mod(1 - b3 * b3, 3L));
  s.artin_hasse = (cubic_symbol_one_unit(t - one) + cubic_symbol_one_unit(-t)) % 3;
  if (s.closed_form != s.artin_hasse)
    throw std::logic_error("cubic_symbol_legendre: closed form " + std::to_string(s.closed_form) +
                           " disagrees with Artin-Hasse value " + std::to_string(s.artin_hasse));
  return s;
}

namespace {

// Arithmetic in O_K / 3^k = Z[zeta]/3^k, elements encoded as a*M + b.
struct ResidueRing {
  long M;
  long encode(long a, long b) const { return mod(a, M) * M + mod(b, M); }
  long mul(long x, long y) const {
    long a = x / M, b = x % M, c = y / M, d = y % M;
    long bd = b * d;
    return encode(a * c - bd, a * d + b * c - bd);
  }
  long add(long x, long y) const { return encode(x / M + y / M, x % M + y % M); }
  long neg(long x) const { return encode(-(x / M), -(x % M)); }
  // Units are the elements with a + b != 0 mod 3 (the norm a^2 - ab + b^2 is prime to 3).
  bool is_unit(long x) const { return (x / M + x % M) % 3 != 0; }
  long size() const { return M * M; }
};

long reduce_element(const ZetaThreeLocal& x, long M, int k) {
  if (x.absolute_precision() < 2 * k) throw PrecisionError("norm_oracle_cubic: argument known to too few digits");
  auto coord = [k](const PAdic& c) { return c.residue(k).get_si(); };
  return mod(coord(x.a()), M) * M + mod(coord(x.b()), M);
}

}  // namespace

bool norm_oracle_cubic(const ZetaThreeLocal& a, const ZetaThreeLocal& u, int N) {
  if (N < 4 || N > 8 || N % 2) throw std::invalid_argument("norm_oracle_cubic: N must be 4, 6 or 8");
  if (a.valuation() != 0 || u.valuation() != 0) throw std::invalid_argument("norm_oracle_cubic: arguments must be units");
  ZetaThreeLocal one = ZetaThreeLocal::one(2 * N);
  ZetaThreeLocal du = u - one, dv = u + one;
  int ram = !du.is_zero() && du.valuation() >= 1 ? du.valuation() : (!dv.is_zero() ? dv.valuation() : 99);
  if (ram < 1 || ram > 2) throw std::invalid_argument("norm_oracle_cubic: u must have v_pi(+-u - 1) in {1, 2}");

  int k = N / 2;
  ResidueRing R{ipow(3, k).get_si()};
  long ua = reduce_element(u, R.M, k), aa = reduce_element(a, R.M, k);
  long u2 = R.mul(ua, ua), three_u = R.mul(R.encode(3, 0), ua);
  long one_r = R.encode(1, 0);

  std::vector<long> cube(R.size());
  for (long x = 0; x < R.size(); ++x) cube[x] = R.mul(x, R.mul(x, x));
  std::vector<long> nonunits;
  for (long x = 0; x < R.size(); ++x)
    if (!R.is_unit(x)) nonunits.push_back(x);

  std::vector<char> in_group(R.size(), 0);
  auto record = [&](long x, long y, long z) {
    long n = R.add(R.add(cube[x], R.mul(ua, cube[y])), R.mul(u2, cube[z]));
    n = R.add(n, R.neg(R.mul(three_u, R.mul(x, R.mul(y, z)))));
    if (R.is_unit(n)) in_group[n] = 1;
  };
  for (long y = 0; y < R.size(); ++y)
    for (long z = 0; z < R.size(); ++z) record(one_r, y, z);
  for (long x : nonunits)
    for (long z = 0; z < R.size(); ++z) record(x, one_r, z);
  for (long x : nonunits)
    for (long y : nonunits) record(x, y, one_r);
  for (long x = 0; x < R.size(); ++x)
    if (R.is_unit(x)) in_group[cube[x]] = 1;

  // Close the recorded norms under multiplication; the result lies in the norm group.
  std::vector<long> gens;
  for (long x = 0; x < R.size(); ++x)
    if (in_group[x]) gens.push_back(x);
  std::vector<char> seen(R.size(), 0);
  std::queue<long> todo;
  seen[one_r] = 1;
  todo.push(one_r);
  long group_order = 0;
  while (!todo.empty()) {
    long g = todo.front();
    todo.pop();
    ++group_order;
    for (long h : gens) {
      long gh = R.mul(g, h);
      if (!seen[gh]) {
        seen[gh] = 1;
        todo.push(gh);
      }
    }
  }
  long units = 0;
  for (long x = 0; x < R.size(); ++x) units += R.is_unit(x);
  // A ramified cyclic cubic extension has unit norm index exactly 3.
  if (units != 3 * group_order)
    throw std::logic_error("norm_oracle_cubic: enumerated norms have index " + std::to_string(units / group_order) +
                           ", expected 3; search inconclusive");
  return seen[aa] != 0;
}

}  // namespace ellbr
