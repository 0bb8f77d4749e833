#include "ellbr/brauer/characters.hpp"

#include <numeric>
#include <stdexcept>

#include "ellbr/arith/cyclotomic.hpp"

namespace ellbr {

int residue_character_order(const QPoly& f, long p) {
  if (!is_prime(p)) throw std::invalid_argument("residue_character_order: p must be prime");
  if (f.degree() < 1 || !f.is_integral()) throw std::invalid_argument("residue_character_order: need an integral polynomial of positive degree");
  Rational lead = f.leading();
  if (valuation(lead, p) != 0) throw std::invalid_argument("residue_character_order: leading coefficient divisible by p");
  Rational d = discriminant(f) * f.degree();
  if (d == 0 || valuation(d, p) > 0) throw std::invalid_argument("residue_character_order: p is ramified or divides the degree");
  int order = 1;
  for (auto& [deg, part] : distinct_degree_factorization(FpPoly::reduce(f, p).monic())) order = std::lcm(order, deg);
  return order;
}

std::vector<QPoly> cubic_fields_ramified_in(const std::set<long>& primes) {
  for (long p : primes)
    if (p != 2 && p != 3) throw std::invalid_argument("cubic_fields_ramified_in: only primes 2 and 3 are supported");
  if (!primes.count(3)) return {};
  // (Z/2^k)^x has 2-power order, so a cubic character has no 2-part in its conductor and
  // its 3-part must be 9: the conductor 9 field is the only one.
  QPoly f = QPoly::from_ints({1, -3, 0, 1});
  if (discriminant(f) != 81) throw std::logic_error("cubic_fields_ramified_in: unexpected discriminant");
  if (f.eval(1) == 0 || f.eval(-1) == 0) throw std::logic_error("cubic_fields_ramified_in: reducible cubic");
  if (!(period_minimal_polynomial(9, 3) == f)) throw std::logic_error("cubic_fields_ramified_in: not the conductor 9 period");
  return {f};
}

namespace {

bool is_constant(const CyclotomicElement& x) { return x.residue().degree() <= 0; }

}  // namespace

QuarticCharacter quartic_character_data(long p) {
  if (!is_prime(p) || (p != 2 && p % 4 != 1)) throw std::invalid_argument("quartic_character_data: need p = 2 or p = 1 mod 4");
  int n = p == 2 ? 16 : static_cast<int>(p);
  GaussianPeriod gp = gaussian_period(n, 4);
  // A Galois element acting with order 4 on the period.
  long gen = 0;
  for (long a : unit_group(n)) {
    CyclotomicElement x = gp.period;
    int k = 0;
    do {
      x = x.galois(a);
      ++k;
    } while (!(x == gp.period) && k <= 4);
    if (k == 4) {
      gen = a;
      break;
    }
  }
  if (gen == 0) throw std::logic_error("quartic_character_data: no generator of the quartic Galois group");
  const CyclotomicElement& eta0 = gp.period;
  CyclotomicElement eta2 = eta0.galois(gen).galois(gen);
  CyclotomicElement s = eta0 + eta2;
  if (is_constant(s)) s = eta0 * eta2;
  if (is_constant(s)) throw std::logic_error("quartic_character_data: no generator of the quadratic subfield");
  CyclotomicElement t = s.galois(gen);
  CyclotomicElement c1 = s + t, c0 = s * t;
  if (!is_constant(c1) || !is_constant(c0)) throw std::logic_error("quartic_character_data: quadratic subfield is not quadratic");
  Rational b = c1.residue().coeff(0), c = c0.residue().coeff(0);
  QPoly q({c, -b, Rational(1)});
  Rational disc = b * b - 4 * c;
  Integer sq = squarefree_part(disc.get_num() * disc.get_den());
  QuarticCharacter out{p, gp.minimal_polynomial, q, sq};
  if (sq != p) throw std::logic_error("quartic_character_data: quadratic subfield is not Q(sqrt p)");
  return out;
}

}  // namespace ellbr
