#include <random>

#include "doctest.h"
#include "ellbr/hilbert/cubic.hpp"
#include "ellbr/hilbert/quadratic.hpp"

using namespace ellbr;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-400, 400), den(1, 60);
  long n = 0;
  while (n == 0) n = num(rng);
  Rational r(n, den(rng));
  r.canonicalize();
  return r;
}

const std::vector<Place>& test_places() {
  static const std::vector<Place> places{Place::prime(2), Place::prime(3),  Place::prime(5),
                                         Place::prime(7), Place::prime(11), Place::infinity()};
  return places;
}

}  // namespace

TEST_CASE("quadratic symbol examples") {
  CHECK(hilbert_two(-11, 2) == -1);
  CHECK(hilbert_two(-11, -1) == 1);
  CHECK(hilbert_two(-15, 2) == 1);
  CHECK(hilbert_two(-15, -1) == 1);
  CHECK(hilbert_two(-53, 2) == -1);
  CHECK(hilbert_two(-53, -1) == -1);
  CHECK(hilbert_two(-1, -1) == -1);
  CHECK(hilbert_two(Rational(7, 3), 1) == 1);
  CHECK(hilbert_odd(3, -1, -1) == 1);
  for (long q : {3L, 7L, 11L, 19L}) CHECK(hilbert_odd(q, -1, q) == -1);
  for (long q : {5L, 13L}) CHECK(hilbert_odd(q, -1, q) == 1);
  CHECK(hilbert_odd(5, 2, 3) == 1);
  CHECK(hilbert_real(-1, -1) == -1);
  CHECK(hilbert_real(1, -1) == 1);
  CHECK(hilbert_real(-11, 2) == 1);
  CHECK_THROWS_AS(hilbert_two(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(hilbert_odd(2, 3, 5), std::invalid_argument);
}

TEST_CASE("symbol identities on random inputs") {
  std::mt19937_64 rng(2024);
  for (Place v : test_places()) {
    for (int trial = 0; trial < 200; ++trial) {
      Rational a = random_rational(rng), b1 = random_rational(rng), b2 = random_rational(rng);
      CHECK(hilbert_symbol(v, a, b1 * b2) == hilbert_symbol(v, a, b1) * hilbert_symbol(v, a, b2));
      CHECK(hilbert_symbol(v, a, b1) == hilbert_symbol(v, b1, a));
      CHECK(hilbert_symbol(v, a, -a) == 1);
      if (a != 1) CHECK(hilbert_symbol(v, a, 1 - a) == 1);
      CHECK(hilbert_symbol(v, a, b1 * b1) == 1);
    }
  }
}

TEST_CASE("quaternion invariants") {
  InvariantVector h = quaternion_invariants(-1, -1);
  CHECK(h.support() == std::vector<Place>{Place::prime(2), Place::infinity()});
  CHECK(quaternion_invariants(1, 17).is_zero());
  InvariantVector e = quaternion_invariants(-11, 2);
  CHECK(e.support().size() % 2 == 0);
  CHECK(e.at(Place::prime(2)) == 1);
  CHECK(e.at(Place::prime(11)) == 1);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    InvariantVector inv = quaternion_invariants(random_rational(rng), random_rational(rng));
    CHECK(inv.satisfies_product_formula());
    CHECK(inv.support().size() % 2 == 0);
  }
}

TEST_CASE("quadratic norm oracle agrees with the symbols") {
  CHECK_FALSE(norm_oracle_quadratic(-11, 2, 2));
  CHECK(norm_oracle_quadratic(-15, 2, 2));
  for (long p : {2L, 3L, 5L}) CHECK(norm_oracle_quadratic(1, 7, p));
  CHECK_THROWS_AS(norm_oracle_quadratic(3, 5, 2, 2), std::invalid_argument);

  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> d(-60, 60);
  std::vector<std::pair<Rational, Rational>> corpus;
  while (corpus.size() < 50) {
    long a = d(rng), b = d(rng);
    if (a != 0 && b != 0) corpus.emplace_back(a, b);
  }
  corpus[0] = {Rational(-1), Rational(-1)};
  corpus[1] = {Rational(3, 4), Rational(-5, 2)};
  for (auto& [a, b] : corpus)
    for (long p : {2L, 3L, 5L}) CHECK(norm_oracle_quadratic(a, b, p) == (hilbert_symbol(Place::prime(p), a, b) == 1));
}

TEST_CASE("cubic symbol of one-units") {
  CHECK(cubic_symbol_one_unit(ZetaThreeLocal::one(12)) == 0);
  PAdic one3 = PAdic::from_integer(1, 3, 12);
  ZetaThreeLocal t1 = legendre_witness_parameter(one3, 12);
  CHECK(cubic_symbol_one_unit(t1 - ZetaThreeLocal::one(12)) == 2);
  ZetaThreeLocal t0 = legendre_witness_parameter(PAdic::zero(3, 12), 12);
  CHECK(cubic_symbol_one_unit(-t0) == 1);
  CHECK_THROWS_AS(cubic_symbol_unit(ZetaThreeLocal::pi(12)), std::invalid_argument);
  CHECK(cubic_symbol_unit(ZetaThreeLocal::from_rationals(-1, 0, 12)) == 0);
  // Too few digits for Tr(log a) mod 9.
  CHECK_THROWS_AS(cubic_symbol_one_unit(ZetaThreeLocal::one(2) + ZetaThreeLocal::pi(2)), PrecisionError);
}

TEST_CASE("cubic symbol at Legendre witnesses") {
  for (long b = 0; b <= 8; ++b) {
    CubicSymbol s = cubic_symbol_legendre(PAdic::from_integer(b, 3, 12));
    CHECK(s.closed_form == mod(1 - b * b, 3L));
    CHECK(s.artin_hasse == s.closed_form);
  }
  CHECK(cubic_symbol_legendre(PAdic::zero(3, 12)).exponent() == 1);
  CHECK(cubic_symbol_legendre(PAdic::from_integer(1, 3, 12)).exponent() == 0);
  CHECK(cubic_symbol_legendre(PAdic::from_integer(2, 3, 12)).exponent() == 0);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(0, 531440);
  for (int i = 0; i < 5; ++i) {
    long b = d(rng);
    CHECK(cubic_symbol_legendre(PAdic::from_integer(b, 3, 12)).artin_hasse == mod(1 - b * b, 3L));
  }
}

TEST_CASE("cubic norm oracle") {
  ZetaThreeLocal zeta = ZetaThreeLocal::zeta(12);
  CHECK(norm_oracle_cubic(ZetaThreeLocal::one(12), zeta, 6));
  // (zeta, -1) = 1: -1 is a norm from K(zeta_9).
  CHECK(norm_oracle_cubic(ZetaThreeLocal::from_rationals(-1, 0, 12), zeta, 6));
  for (long b : {0L, 1L, 2L, 3L, 4L, 7L}) {
    ZetaThreeLocal t = legendre_witness_parameter(PAdic::from_integer(b, 3, 12), 12);
    ZetaThreeLocal a = t * (t - ZetaThreeLocal::one(12));
    int e = cubic_symbol_legendre(PAdic::from_integer(b, 3, 12)).exponent();
    CHECK(norm_oracle_cubic(a, zeta, 6) == (e == 0));
    CHECK(norm_oracle_cubic(a, zeta, 4) == (e == 0));
  }
  // zeta itself: (zeta, zeta) = Tr(log zeta)/3.
  CHECK(norm_oracle_cubic(zeta, zeta, 6) == (cubic_symbol_one_unit(zeta) == 0));
  CHECK_THROWS_AS(norm_oracle_cubic(ZetaThreeLocal::one(12), ZetaThreeLocal::one(12), 6), std::invalid_argument);
  CHECK_THROWS_AS(norm_oracle_cubic(ZetaThreeLocal::one(12), zeta, 5), std::invalid_argument);
}
