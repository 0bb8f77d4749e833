#include <random>

#include "doctest.h"
#include "ellbr/arith/cyclotomic.hpp"
#include "ellbr/brauer/characters.hpp"
#include "ellbr/brauer/cyclic_algebra.hpp"
#include "ellbr/brauer/assembly.hpp"
#include "ellbr/brauer/groups.hpp"
#include "ellbr/brauer/ledger.hpp"
#include "ellbr/brauer/modular.hpp"
#include "ellbr/brauer/witness.hpp"
#include "ellbr/curves/legendre.hpp"
#include "ellbr/hilbert/quadratic.hpp"

using namespace ellbr;

TEST_CASE("group descriptions") {
  GroupDescription g(FgAbelianGroup::cyclic(2), 1);
  CHECK(g.to_string() == "Z/2 + Q/Z");
  CHECK(GroupDescription::local_divisible(3).to_string() == "Q_3/Z_3");
  CHECK(GroupDescription().to_string() == "0");
  CHECK(g.torsion_of(12) == FgAbelianGroup::from_cyclic_orders({2, 12}));
  CHECK(g.primary_part(3) == GroupDescription::local_divisible(3));
  CHECK_FALSE(g.order());
  CHECK(*GroupDescription(FgAbelianGroup::from_cyclic_orders({2, 4})).order() == 8);
}

TEST_CASE("Brauer group of localized integers") {
  LocalizedBrauer b2 = br_localized_integers({2});
  CHECK(b2.group == GroupDescription(FgAbelianGroup::cyclic(2)));
  CHECK(b2.truncated == FgAbelianGroup::cyclic(2));
  LocalizedBrauer b6 = br_localized_integers({2, 3});
  CHECK(b6.group.to_string() == "Z/2 + Q/Z");
  CHECK(b6.truncated == FgAbelianGroup::from_cyclic_orders({2, 12}));
  CHECK(br_localized_integers({}).group.is_trivial());
  CHECK(br_localized_integers({2, 3, 5}, false, 6).truncated == FgAbelianGroup::from_cyclic_orders({6, 6}));
  for (auto& g : b6.generators) {
    Rational total = 0;
    for (auto& [v, x] : g) total += x;
    total.canonicalize();
    CHECK(total.get_den() == 1);
  }
}

TEST_CASE("residue character orders") {
  QPoly c9 = QPoly::from_ints({1, -3, 0, 1});
  CHECK(residue_character_order(c9, 2) == 3);
  CHECK(residue_character_order(c9, 17) == 1);
  CHECK(residue_character_order(QPoly::from_ints({1, 0, 1}), 3) == 2);
  CHECK(residue_character_order(QPoly::from_ints({1, 0, 1}), 5) == 1);
  CHECK_THROWS_AS(residue_character_order(c9, 3), std::invalid_argument);
  CHECK(cubic_fields_ramified_in({2}).empty());
  auto f = cubic_fields_ramified_in({2, 3});
  REQUIRE(f.size() == 1);
  CHECK(f[0] == c9);
  CHECK_THROWS_AS(cubic_fields_ramified_in({5}), std::invalid_argument);
}

TEST_CASE("quartic characters") {
  for (long p : {2L, 5L, 13L, 17L}) {
    QuarticCharacter q = quartic_character_data(p);
    CHECK(q.polynomial.degree() == 4);
    CHECK(q.quadratic_discriminant == p);
  }
  CHECK(quartic_character_data(2).polynomial == QPoly::from_ints({2, 0, -4, 0, 1}));
  CHECK(quartic_character_data(5).polynomial == QPoly::cyclotomic(5));
  CHECK_THROWS_AS(quartic_character_data(7), std::invalid_argument);
}

TEST_CASE("quaternion algebras") {
  QPoly i2 = QPoly::from_ints({1, 0, 1});
  CyclicAlgebraTable h = cyclic_algebra(i2, -1);
  CHECK(h.dimension() == 4);
  CHECK(h.associative);
  CHECK(h.center_dimension == 1);
  CHECK(h.central_simple);
  CHECK(h.splitting == Splitting::division);
  CyclicAlgebraTable m = cyclic_algebra(i2, 2);
  CHECK(m.splitting == Splitting::split);
  REQUIRE(m.zero_divisor);
  CHECK_THROWS_AS(cyclic_algebra(QPoly::from_ints({-1, 0, 1}), 3), std::invalid_argument);
  CHECK_THROWS_AS(cyclic_algebra(QPoly::from_ints({1, 0, 2}), 3), std::invalid_argument);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> dd(-30, 30), uu(-40, 40);
  int done = 0;
  while (done < 20) {
    long d = dd(rng), u = uu(rng);
    if (u == 0 || d == 0 || squarefree_part(Integer(d)) == 1 || mpz_perfect_square_p(Integer(d).get_mpz_t())) continue;
    CyclicAlgebraTable a = cyclic_algebra(QPoly::from_ints({-d, 0, 1}), u);
    bool split = quaternion_invariants(d, u).is_zero();
    CHECK(a.splitting == (split ? Splitting::split : Splitting::division));
    if (split) CHECK(a.zero_divisor);
    ++done;
  }
}

TEST_CASE("cyclic algebras of degree 3 and 4") {
  QPoly c9 = QPoly::from_ints({1, -3, 0, 1});
  QPoly g = QPoly::from_ints({-2, 0, 1});  // x -> x^2 - 2
  CyclicAlgebraTable one = cyclic_algebra(c9, 1, 3, g);
  CHECK(one.dimension() == 9);
  CHECK(one.central_simple);
  CHECK(one.splitting == Splitting::split);
  CyclicAlgebraTable two = cyclic_algebra(c9, 8, 3, g);
  CHECK(two.splitting == Splitting::split);
  CyclicAlgebraTable norm = cyclic_algebra(c9, 3, 3, g);
  CHECK(norm.associative);
  CHECK(norm.center_dimension == 1);
  CHECK_THROWS_AS(cyclic_algebra(c9, 2, 3, QPoly::x()), std::invalid_argument);

  QPoly p16 = QPoly::from_ints({2, 0, -4, 0, 1});  // zeta_16 + zeta_16^-1
  QPoly g16 = QPoly::from_ints({0, -3, 0, 1});  // 2cos(t) -> 2cos(3t)
  CyclicAlgebraTable four = cyclic_algebra(p16, 1, 4, g16);
  CHECK(four.dimension() == 16);
  CHECK(four.central_simple);
  CHECK(four.splitting == Splitting::split);
}

TEST_CASE("base profiles compute G") {
  auto labels = [](const BaseProfile& S) { return S.g_labels; };
  CHECK(labels(localized_integers_profile({2})) == std::vector<std::string>{"2"});
  CHECK(labels(localized_integers_profile({2, 3, 5, 7, 13})) == std::vector<std::string>{"2", "5", "13"});
  CHECK(labels(finite_field_profile(7)) == std::vector<std::string>{"g"});
  CHECK(labels(gaussian_profile()).size() == 2);
  CHECK(labels(algebraically_closed_profile()).empty());
  CHECK_THROWS_AS(localized_integers_profile({3}), std::invalid_argument);
  CHECK_THROWS_AS(finite_field_profile(8), std::invalid_argument);
  CHECK(finite_field_profile(9).units_mod(2) == FgAbelianGroup::cyclic(2));
  CHECK(gaussian_profile().units_mod(4) == FgAbelianGroup::from_cyclic_orders({4, 4}));
}

TEST_CASE("two-primary extension") {
  TwoExtension z2 = resolve_two_extension(localized_integers_profile({2}));
  CHECK(z2.group == FgAbelianGroup::from_cyclic_orders({2, 4}));
  REQUIRE(z2.generators.size() == 3);
  CHECK(z2.generators[0].label == "(-1,Delta)");
  CHECK(z2.generators[0].order == 2);
  CHECK(z2.generators[2].order == 4);
  for (long q : {3L, 5L, 7L, 9L, 25L}) CHECK(resolve_two_extension(finite_field_profile(q)).group == FgAbelianGroup::cyclic(4));
  CHECK(resolve_two_extension(gaussian_profile()).group == FgAbelianGroup::from_cyclic_orders({4, 4}));
  CHECK(resolve_two_extension(algebraically_closed_profile()).group.is_trivial());

  std::vector<long> odd{3, 5, 7, 11, 13};
  for (int mask = 0; mask < 32; ++mask) {
    std::vector<long> P{2};
    for (int i = 0; i < 5; ++i)
      if (mask >> i & 1) P.push_back(odd[i]);
    CHECK(resolve_two_extension(localized_integers_profile(P)).group == two_extension_closed_form(P));
  }
}

TEST_CASE("descent ledgers") {
  SpectralLedger fq = descent_ledger(finite_field_profile(7), Figure::m_two_local);
  CHECK(*fq.diagonal_order(2, 2, true) == 8);
  CHECK(*fq.diagonal_order(2, SpectralLedger::kInfinity, true) == 4);
  SpectralLedger z2 = descent_ledger(localized_integers_profile({2}), Figure::m_two_local);
  CHECK(*z2.diagonal_order(2, 2) == 32);
  CHECK(*z2.diagonal_order(2) == 16);
  CHECK(z2.unknown_touching(2).empty());
  CHECK_FALSE(z2.flags.empty());

  SpectralLedger c4 = descent_ledger(gaussian_profile(), Figure::c4_comparison);
  CHECK(*c4.diagonal_order(2, 2, true) == 32);
  CHECK(*c4.diagonal_order(2, SpectralLedger::kInfinity, true) == 16);
  bool iso = false;
  for (auto& d : c4.differentials())
    if (d.page == 2 && d.p == 1 && d.q == 1) iso = d.status == DifferentialStatus::iso;
  CHECK(iso);
  CHECK_THROWS_AS(descent_ledger(finite_field_profile(7), Figure::c4_comparison), std::invalid_argument);

  for (long n : {2L, 3L, 4L}) {
    BaseProfile S = localized_integers_profile({2, 3});
    SpectralLedger leray = descent_ledger(S, Figure::bcn_leray, n);
    CHECK(leray.unknown_touching(2).empty());
    SpectralLedger desc = descent_ledger(S, Figure::bcn_descent, n);
    CHECK(desc.unknown_touching(2).empty());
    CHECK(*desc.diagonal_order(2, SpectralLedger::kInfinity, true) == S.units_mod(n).order());
  }

  // A ledger with an unresolved differential reports bounds.
  SpectralLedger L("toy");
  L.set_entry(0, 1, {{"A", GroupDescription(FgAbelianGroup::cyclic(2))}});
  L.set_entry(2, 0, {{"B", GroupDescription(FgAbelianGroup::cyclic(2))}});
  L.set_entry(1, 1, {{"C", GroupDescription(FgAbelianGroup::cyclic(3))}});
  L.add_differential({2, 0, 1, "A", "B", DifferentialStatus::unknown, ""});
  OrderBounds b = L.diagonal_bounds(2);
  CHECK(*b.lower == 3);
  CHECK(*b.upper == 6);
  CHECK(L.force_from_abutment(2, 3, false, "toy"));
  CHECK(*L.diagonal_order(2) == 3);
  L.validate();
}

TEST_CASE("three-primary and large primes") {
  for (long q : {3L, 5L, 7L, 9L, 25L}) CHECK(three_part(finite_field_profile(q)).group == GroupDescription(FgAbelianGroup::cyclic(3)));
  PartResult six = three_part(localized_integers_profile({2, 3}));
  CHECK(six.group.to_string() == "Z/3 + Q_3/Z_3");
  CHECK(three_part(algebraically_closed_profile()).group.is_trivial());
  CHECK_THROWS_AS(three_part(localized_integers_profile({2})), std::invalid_argument);
  CHECK_THROWS_AS(three_part(localized_integers_profile({2, 3, 5})), std::invalid_argument);

  CHECK(p_part_large(localized_integers_profile({2}), 5, true, true).group.is_trivial());
  CHECK(p_part_large(finite_field_profile(7), 5, true, true).group.is_trivial());
  CHECK(p_part_large(localized_integers_profile({2, 7}), 7, true, true).group == GroupDescription::local_divisible(7));
  CHECK_THROWS_AS(p_part_large(localized_integers_profile({2}), 5, false, true), std::invalid_argument);
}

TEST_CASE("witness obstruction") {
  RationalCurve e1 = parse_ainvs("[0,-1,1,0,0]"), e2 = parse_ainvs("[1,-2,0,1,0]"), e3 = parse_ainvs("[1,-1,1,0,0]");
  WitnessRow w1 = two_adic_witness("11a3", e1), w2 = two_adic_witness("15a8", e2), w3 = two_adic_witness("53a1", e3);
  CHECK(w1.values == ModVector{1, 0, 1});
  CHECK(w2.values == ModVector{1, 0, 0});
  CHECK(w3.values == ModVector{1, 1, 1});
  CHECK(witness_obstruction_check(2, two_adic_classes(), {w1, w2, w3}).surviving.empty());
  ObstructionResult without = witness_obstruction_check(2, two_adic_classes(), {w1, w2});
  CHECK(without.surviving_labels() == std::vector<std::string>{"β"});
  // Brute force over F_2^3: x survives iff it pairs to zero with both rows.
  std::vector<ModVector> brute;
  for (const ModVector& x : nonzero_vectors(3, 2)) {
    bool survives = true;
    for (auto* w : {&w1, &w2}) survives &= (x[0] * w->values[0] + x[1] * w->values[1] + x[2] * w->values[2]) % 2 == 0;
    if (survives) brute.push_back(x);
  }
  CHECK(brute == std::vector<ModVector>{{0, 1, 0}});
  CHECK(witness_obstruction_check(2, two_adic_classes(), {}).surviving.size() == 7);

  WitnessRow t0 = three_adic_witness(0), t1 = three_adic_witness(1);
  CHECK(t0.values == ModVector{1, 1});
  CHECK(t1.values == ModVector{1, 0});
  CHECK(witness_obstruction_check(3, three_adic_classes(), {t0, t1}).surviving.empty());
  CHECK(witness_obstruction_check(3, three_adic_classes(), {t1}).surviving_labels() == std::vector<std::string>{"θ", "2θ"});
  CHECK(witness_obstruction_check(3, three_adic_classes(), {}).surviving.size() == 8);
}

TEST_CASE("Brauer group of the moduli stack") {
  for (long q : {3L, 5L, 7L, 9L, 25L}) CHECK(brauer_of_moduli(finite_field_profile(q)).total.to_string() == "Z/12");
  ModuliBrauer half = brauer_of_moduli(localized_integers_profile({2}));
  CHECK(half.total == GroupDescription(FgAbelianGroup::from_cyclic_orders({2, 2, 4})));
  CHECK(brauer_of_moduli(algebraically_closed_profile()).total.is_trivial());

  std::vector<NamedCurve> curves{{"11a3", parse_ainvs("[0,-1,1,0,0]")},
                                 {"15a8", parse_ainvs("[1,-2,0,1,0]")},
                                 {"53a1", parse_ainvs("[1,-1,1,0,0]")}};
  VerdictOptions opts;
  opts.two_adic = curves;
  nlohmann::json v = final_verdict(opts);
  CHECK(v["result"] == "0");
  CHECK(v["parts"]["p2"] == "0");
  CHECK(v["witnesses"].size() == 5);
  opts.two_adic.pop_back();
  CHECK(final_verdict(opts)["result"] == "undetermined: β unobstructed");
  VerdictOptions fq;
  fq.mode = VerdictMode::finite_field;
  fq.q = 7;
  CHECK(final_verdict(fq)["result"] == "Z/12");
  VerdictOptions closed;
  closed.mode = VerdictMode::algebraically_closed;
  CHECK(final_verdict(closed)["result"] == "0");
}
