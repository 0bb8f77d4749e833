#include <random>

#include "doctest.h"
#include "ellbr/arith/cyclotomic.hpp"
#include "ellbr/arith/log.hpp"
#include "ellbr/arith/padic.hpp"
#include "ellbr/arith/poly.hpp"
#include "ellbr/arith/zeta3.hpp"

using namespace ellbr;

namespace {

// Tr(pi^m) as the power sum of the roots of x^2 - 3x + 3 (pi and its conjugate).
Integer power_sum_trace(unsigned m) {
  Integer s0 = 2, s1 = 3;
  if (m == 0) return s0;
  for (unsigned i = 1; i < m; ++i) {
    Integer s2 = 3 * s1 - 3 * s0;
    s0 = s1;
    s1 = s2;
  }
  return s1;
}

// Irreducible over F_p for degree <= 4 by exhaustive search for linear and quadratic factors.
bool irreducible_by_search(const QPoly& f, long p) {
  FpPoly g = FpPoly::reduce(f, p);
  if (g.degree() != f.degree()) return false;
  if (count_roots(g) > 0) return false;
  if (g.degree() <= 3) return true;
  for (long a = 0; a < p; ++a)
    for (long b = 0; b < p; ++b)
      if (g.divmod(FpPoly(p, {b, a, 1})).second.is_zero()) return false;
  return true;
}

ZetaThreeLocal random_one_unit(std::mt19937_64& rng, int prec) {
  std::uniform_int_distribution<long> d(-200, 200);
  // 1 + pi * (c + d zeta)
  ZetaThreeLocal w = ZetaThreeLocal::from_rationals(d(rng), d(rng), prec + 2);
  return ZetaThreeLocal::one(prec + 2) + ZetaThreeLocal::pi(prec + 2) * w;
}

}  // namespace

TEST_CASE("rational_to_padic examples") {
  PAdic a = PAdic::from_rational(8, 2, 5);
  CHECK(a.valuation() == 3);
  CHECK(a.unit() == 1);
  PAdic b = PAdic::from_rational(-11, 2, 4);
  CHECK(b.valuation() == 0);
  CHECK(b.unit() == 5);
  PAdic c = PAdic::from_rational(1, 3, 6);
  CHECK(c.valuation() == 0);
  CHECK(c.unit() == 1);
  PAdic z = PAdic::from_rational(0, 5, 7);
  CHECK(z.is_zero());
  CHECK(z.absolute_precision() == 7);
  PAdic q = PAdic::from_rational(Rational(5, 12), 3, 4);
  CHECK(q.valuation() == -1);
  CHECK((q.unit() * 4 - 5) % 81 == 0);
}

TEST_CASE("padic precision loss is tracked") {
  PAdic x = PAdic::from_rational(10, 3, 4);
  PAdic y = PAdic::from_rational(1, 3, 4);
  PAdic d = x - y;
  CHECK(d.valuation() == 2);
  CHECK(d.relative_precision() == 2);
  CHECK(d.absolute_precision() == 4);
  PAdic e = x - x;
  CHECK(e.is_zero());
  CHECK(e.absolute_precision() == 4);
  CHECK_THROWS_AS(e.valuation(), PrecisionError);
  CHECK_THROWS_AS(x / e, PrecisionError);
  PAdic f = PAdic::from_rational(9, 3, 3) * PAdic::from_rational(1, 3, 10);
  CHECK(f.relative_precision() == 3);
}

TEST_CASE("padic arithmetic matches rational arithmetic") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-5000, 5000);
  for (long p : {2L, 3L, 5L, 7L}) {
    for (int trial = 0; trial < 200; ++trial) {
      Rational r(d(rng), d(rng) == 0 ? 1 : 1 + std::abs(d(rng)));
      Rational s(d(rng), 1 + std::abs(d(rng)));
      r.canonicalize();
      s.canonicalize();
      if (r == 0 || s == 0) continue;
      PAdic x = PAdic::from_rational(r, p, 8), y = PAdic::from_rational(s, p, 9);
      CHECK((x + y).agrees_with(PAdic::from_rational(r + s, p, 20)));
      CHECK((x - y).agrees_with(PAdic::from_rational(r - s, p, 20)));
      CHECK((x * y).agrees_with(PAdic::from_rational(r * s, p, 20)));
      CHECK((x / y).agrees_with(PAdic::from_rational(r / s, p, 20)));
      CHECK((x * y).relative_precision() == 8);
    }
  }
}

TEST_CASE("trace of pi powers") {
  CHECK(trace_pi_power(0).closed_form == 2);
  CHECK(trace_pi_power(3).closed_form == 0);
  CHECK(trace_pi_power(4).closed_form == -9);
  CHECK(trace_pi_power(5).closed_form == -27);
  for (unsigned m = 0; m <= 30; ++m) {
    auto t = trace_pi_power(m);
    CHECK(t.closed_form == t.expansion);
    CHECK(t.closed_form == power_sum_trace(m));
  }
  ZetaThreeLocal p6 = ZetaThreeLocal::pi(20);
  ZetaThreeLocal acc = ZetaThreeLocal::one(20);
  for (int i = 0; i < 6; ++i) acc = acc * p6;
  CHECK(acc.agrees_with(ZetaThreeLocal::from_rationals(-27, 0, 20)));
}

TEST_CASE("ZetaThreeLocal norm, trace and valuation") {
  ZetaThreeLocal pi = ZetaThreeLocal::pi(12);
  CHECK(pi.valuation() == 1);
  CHECK(pi.norm().agrees_with(PAdic::from_rational(3, 3, 6)));
  CHECK(pi.trace().agrees_with(PAdic::from_rational(3, 3, 6)));
  CHECK(ZetaThreeLocal::zeta(12).valuation() == 0);
  CHECK((pi * pi).agrees_with(ZetaThreeLocal::from_rationals(0, -3, 12)));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-300, 300);
  for (int trial = 0; trial < 200; ++trial) {
    ZetaThreeLocal x = ZetaThreeLocal::from_rationals(d(rng), d(rng), 24);
    ZetaThreeLocal y = ZetaThreeLocal::from_rationals(d(rng), d(rng), 24);
    if (x.is_zero() || y.is_zero()) continue;
    CHECK((x * y).valuation() == x.valuation() + y.valuation());
    ZetaThreeLocal q = (x * y) / y;
    CHECK(q.agrees_with(x));
  }
}

TEST_CASE("padic log") {
  CHECK(padic_log(ZetaThreeLocal::one(12), 12).is_zero());
  CHECK(padic_log(PAdic::from_rational(1, 5, 10), 10).is_zero());
  CHECK_THROWS_AS(padic_log(ZetaThreeLocal::from_rationals(2, 0, 12), 12), std::domain_error);
  CHECK_NOTHROW(padic_log(ZetaThreeLocal::zeta(12), 12));
  CHECK_THROWS_AS(padic_log(PAdic::from_rational(2, 5, 10), 10), std::domain_error);

  ZetaThreeLocal x = ZetaThreeLocal::one(30) + ZetaThreeLocal::pi(30);
  ZetaThreeLocal shallow = padic_log(x, 6), deep = padic_log(x, 16);
  CHECK(shallow.absolute_precision() >= 6);
  CHECK(shallow.agrees_with(deep));

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    ZetaThreeLocal a = random_one_unit(rng, 16), b = random_one_unit(rng, 16);
    ZetaThreeLocal lhs = padic_log(a * b, 12), rhs = padic_log(a, 12) + padic_log(b, 12);
    CHECK(lhs.agrees_with(rhs));
    CHECK(std::min(lhs.absolute_precision(), rhs.absolute_precision()) >= 6);
  }
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (long p : {2L, 3L, 7L}) {
    long q = p == 2 ? 4 : p;
    for (int trial = 0; trial < 40; ++trial) {
      PAdic a = PAdic::from_rational(1 + q * d(rng), p, 14), b = PAdic::from_rational(1 + q * d(rng), p, 14);
      PAdic lhs = padic_log(a * b, 10), rhs = padic_log(a, 10) + padic_log(b, 10);
      CHECK(lhs.agrees_with(rhs));
    }
  }
}

TEST_CASE("cyclotomic elements") {
  CyclotomicElement z = CyclotomicElement::zeta_power(5, 1);
  CHECK(z.pow(5) == CyclotomicElement::constant(5, 1));
  CHECK(z.trace() == -1);
  CHECK(CyclotomicElement::constant(5, 1).trace() == 4);
  CyclotomicElement i4 = CyclotomicElement::zeta_power(4, 1);
  CHECK(i4 * i4 == CyclotomicElement::constant(4, -1));
  CHECK(CyclotomicElement::zeta_power(9, 3).trace() == -3);
  CHECK(z.galois(2) == z * z);
}

TEST_CASE("Gaussian period minimal polynomials") {
  CHECK(period_minimal_polynomial(5, 4) == QPoly::cyclotomic(5));
  CHECK(period_minimal_polynomial(9, 3) == QPoly::from_ints({1, -3, 0, 1}));
  CHECK(period_minimal_polynomial(16, 4) == QPoly::from_ints({2, 0, -4, 0, 1}));
  CHECK(period_minimal_polynomial(7, 3) == QPoly::from_ints({-1, -2, 1, 1}));
  CHECK(period_minimal_polynomial(5, 2) == QPoly::from_ints({-1, 1, 1}));
  CHECK_THROWS(period_minimal_polynomial(24, 2));
  CHECK_THROWS(period_minimal_polynomial(7, 4));

  struct Case {
    int n, d;
    long inert_prime, split_prime;
  };
  for (Case c : {Case{9, 3, 2, 19}, Case{16, 4, 3, 17}, Case{5, 4, 2, 11}, Case{13, 4, 2, 53}}) {
    QPoly f = period_minimal_polynomial(c.n, c.d);
    CHECK(f.degree() == c.d);
    CHECK(irreducible_by_search(f, c.inert_prime));
    CHECK(is_irreducible(FpPoly::reduce(f, c.inert_prime)));
    CHECK(count_roots(FpPoly::reduce(f, c.split_prime)) == c.d);
  }
  CHECK(FpPoly::reduce(period_minimal_polynomial(9, 3), 2) == FpPoly(2, {1, 1, 0, 1}));
}

TEST_CASE("polynomials over F_p") {
  CHECK(is_irreducible(FpPoly(2, {1, 1, 0, 1})));
  auto ddf = distinct_degree_factorization(FpPoly(5, {1, 0, 1}));
  REQUIRE(ddf.size() == 1);
  CHECK(ddf[0].first == 1);
  CHECK(is_irreducible(FpPoly(3, {1, 0, 1})));
  CHECK(discriminant(QPoly::from_ints({1, -3, 0, 1})) == 81);
  CHECK(discriminant(QPoly::from_ints({1, 1, 0, 1})) == -31);
  CHECK(discriminant(QPoly::from_ints({1, 0, 1})) == -4);
}
