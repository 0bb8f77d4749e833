#include <random>

#include "doctest.h"
#include "ellbr/curves/legendre.hpp"

using namespace ellbr;

namespace {

Rational rnd(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> n(-500, 500), d(1, 97);
  Rational r(n(rng), d(rng));
  r.canonicalize();
  return r;
}

}  // namespace

TEST_CASE("invariants of the witness curves") {
  RationalCurve e1 = parse_ainvs("[0,-1,1,0,0]");
  auto inv = e1.invariants();
  CHECK(inv.b2 == -4);
  CHECK(inv.b4 == 0);
  CHECK(inv.b6 == 1);
  CHECK(inv.b8 == -1);
  CHECK(inv.discriminant == -11);
  CHECK(e1.j_invariant() == Rational(-4096, 11));
  CHECK(parse_ainvs("[1, -2, 0, 1, 0]").discriminant() == -15);
  CHECK(parse_ainvs("[1,-1,1,0,0]").discriminant() == -53);
  CHECK_THROWS_AS(parse_ainvs("[1,2,3]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ainvs("1,2,3,4,5"), std::invalid_argument);
  CHECK_THROWS_AS(RationalCurve(0, 0, 0, 0, 0).j_invariant(), std::domain_error);
}

TEST_CASE("Weierstrass identities on random curves") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    RationalCurve e(rnd(rng), rnd(rng), rnd(rng), rnd(rng), rnd(rng));
    auto i = e.invariants();
    CHECK(4 * i.b8 == i.b2 * i.b6 - i.b4 * i.b4);
    CHECK(1728 * i.discriminant == i.c4 * i.c4 * i.c4 - i.c6 * i.c6);
    RationalCurve s = e.complete_square();
    CHECK(s.a1() == 0);
    CHECK(s.a3() == 0);
    if (i.discriminant != 0) CHECK(s.j_invariant() == e.j_invariant());
  }
}

TEST_CASE("curves over prime fields and p-adics") {
  WeierstrassCurve<Fp> e(Fp(11, 0), Fp(11, -1), Fp(11, 1), Fp(11, 0), Fp(11, 0));
  CHECK_FALSE(e.is_elliptic());
  WeierstrassCurve<Fp> e7(Fp(7, 0), Fp(7, -1), Fp(7, 1), Fp(7, 0), Fp(7, 0));
  CHECK(e7.discriminant() == Fp(7, -11));
  WeierstrassCurve<Fp> e2(Fp(2, 0), Fp(2, 1), Fp(2, 1), Fp(2, 0), Fp(2, 0));
  CHECK_THROWS_AS(e2.complete_square(), std::domain_error);
  auto P = [](long n) { return PAdic::from_rational_absolute(n, 2, 20); };
  WeierstrassCurve<PAdic> q(P(0), P(-1), P(1), P(0), P(0));
  CHECK(q.discriminant().agrees_with(P(-11)));
  CHECK(q.discriminant().valuation() == 0);
}

TEST_CASE("Legendre discriminant") {
  CHECK(legendre_discriminant(LegendreParameter<Rational>(-1)) == 64);
  CHECK(legendre_discriminant(LegendreParameter<Rational>(2)) == 64);
  CHECK(legendre_discriminant(LegendreParameter<Rational>(Rational(1, 2))) == 1);
  CHECK_THROWS_AS(LegendreParameter<Rational>(1), std::invalid_argument);
  CHECK_THROWS_AS(LegendreParameter<Fp>(Fp(3, 1)), std::invalid_argument);
  CHECK_THROWS_AS(LegendreParameter<Fp>(Fp(2, 1)), std::invalid_argument);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Rational t = rnd(rng);
    if (t == 0 || t == 1) continue;
    LegendreParameter<Rational> p(t);
    CHECK(legendre_discriminant(p) == 16 * t * t * (t - 1) * (t - 1));
    CHECK(legendre_discriminant(p) == p.curve().discriminant());
  }
  CHECK(legendre_discriminant(LegendreParameter<Fp>(Fp(13, 5))) == Fp(13, 16 * 25 * 16));
}

TEST_CASE("Legendre parameter from roots") {
  CHECK(legendre_from_roots<Rational>(0, 1, 7).t() == 7);
  CHECK(legendre_from_roots<Rational>(0, 1, -1).t() == -1);
  CHECK(legendre_from_roots<Rational>(1, 3, 2).t() == Rational(1, 2));
  CHECK_THROWS_AS(legendre_from_roots<Rational>(1, 1, 2), std::invalid_argument);
}

TEST_CASE("S3 orbit of the Legendre parameter") {
  auto o = s3_orbit(LegendreParameter<Rational>(-1));
  CHECK(o.degenerate);
  std::map<Rational, int> counts;
  for (auto& [label, v] : o.images) counts[v]++;
  CHECK(counts.size() == 3);
  CHECK(counts[Rational(-1)] == 2);
  CHECK(counts[Rational(2)] == 2);
  CHECK(counts[Rational(1, 2)] == 2);
  auto o3 = s3_orbit(LegendreParameter<Rational>(3));
  CHECK_FALSE(o3.degenerate);
  CHECK(LegendreParameter<Rational>(3).curve().j_invariant() == LegendreParameter<Rational>(Rational(1, 3)).curve().j_invariant());
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    Rational t = rnd(rng);
    if (t == 0 || t == 1) continue;
    CHECK(s3_tau(s3_sigma(s3_tau(t))) == s3_sigma(s3_sigma(t)));
    CHECK_NOTHROW(s3_orbit(LegendreParameter<Rational>(t)));
  }
  // t^2 - t + 1 = 0 in F_7 at t = 3: the orbit collapses.
  CHECK(s3_orbit(LegendreParameter<Fp>(Fp(7, 3))).degenerate);
}

TEST_CASE("point symbol pairs") {
  auto s1 = point_symbol_pair(parse_ainvs("[0,-1,1,0,0]"));
  CHECK(s1.minus_one == 1);
  CHECK(s1.two == -1);
  auto s2 = point_symbol_pair(parse_ainvs("[1,-2,0,1,0]"));
  CHECK(s2.minus_one == 1);
  CHECK(s2.two == 1);
  auto s3 = point_symbol_pair(parse_ainvs("[1,-1,1,0,0]"));
  CHECK(s3.minus_one == -1);
  CHECK(s3.two == -1);
  CHECK_THROWS_AS(point_symbol_pair(LegendreParameter<Rational>(-1).curve()), std::invalid_argument);
}
