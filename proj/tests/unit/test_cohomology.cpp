#include <random>

#include "doctest.h"
#include "ellbr/cohomology/cohomology.hpp"

using namespace ellbr;

namespace {

Integer det(const std::vector<std::vector<Integer>>& m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  Integer s = 0;
  for (size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Integer>> minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<Integer> row;
      for (size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(row);
    }
    Integer term = m[0][c] * det(minor);
    s += c % 2 ? Integer(-term) : term;
  }
  return s;
}

void subsets(size_t n, size_t k, size_t from, std::vector<size_t>& cur, std::vector<std::vector<size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// gcd of all k x k minors.
Integer determinantal_divisor(const IntMatrix& A, size_t k) {
  std::vector<std::vector<size_t>> rs, cs;
  std::vector<size_t> cur;
  subsets(A.rows(), k, 0, cur, rs);
  subsets(A.cols(), k, 0, cur, cs);
  Integer g = 0;
  for (auto& r : rs)
    for (auto& c : cs) {
      std::vector<std::vector<Integer>> m;
      for (size_t i : r) {
        std::vector<Integer> row;
        for (size_t j : c) row.push_back(A(i, j));
        m.push_back(row);
      }
      g = gcd(g, det(m));
    }
  return g;
}

FgAbelianGroup G(std::initializer_list<long> orders) { return FgAbelianGroup::from_cyclic_orders(orders); }

long torsion(long m, long k) { return m == 0 ? (k == 0 ? 0 : 1) : std::gcd(m, k); }

// M[k] and M/k for M = Z or Z/m.
FgAbelianGroup killed_by(long m, long k) { return m == 0 ? FgAbelianGroup::trivial() : FgAbelianGroup::cyclic(std::gcd(m, k)); }
FgAbelianGroup mod_out(long m, long k) { return FgAbelianGroup::cyclic(m == 0 ? k : std::gcd(m, k)); }

}  // namespace

TEST_CASE("smith normal form examples") {
  SmithForm s = smith_normal_form(IntMatrix::identity(3));
  CHECK(s.D == IntMatrix::identity(3));
  s = smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}}));
  CHECK(s.D == IntMatrix::from_rows({{1, 0}, {0, 6}}));
  IntMatrix zero(2, 3);
  s = smith_normal_form(zero);
  CHECK(s.D.is_zero());
  CHECK(s.rank == 0);
  CHECK(torsion(0, 0) == 0);
}

TEST_CASE("smith normal form against determinantal divisors") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> entry(-9, 9), dim(1, 4);
  for (int trial = 0; trial < 150; ++trial) {
    size_t r = dim(rng), c = dim(rng);
    std::vector<std::vector<long>> rows(r, std::vector<long>(c));
    for (auto& row : rows)
      for (auto& x : row) x = trial % 3 == 0 ? 2 * entry(rng) : entry(rng);
    IntMatrix A = IntMatrix::from_rows(rows);
    SmithForm s = smith_normal_form(A);
    CHECK(s.U * A * s.V == s.D);
    CHECK(s.U * s.U_inv == IntMatrix::identity(r));
    CHECK(s.V * s.V_inv == IntMatrix::identity(c));
    Integer prev = 1;
    for (size_t k = 1; k <= std::min(r, c); ++k) {
      Integer dk = determinantal_divisor(A, k);
      Integer expect = k <= s.rank ? Integer(dk / prev) : Integer(0);
      CHECK(s.D(k - 1, k - 1) == expect);
      if (dk == 0) break;
      prev = dk;
    }
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j)
        if (i != j) CHECK(s.D(i, j) == 0);
    for (size_t k = 1; k < s.rank; ++k) CHECK(s.diagonal[k] % s.diagonal[k - 1] == 0);
  }
}

TEST_CASE("lattice helpers") {
  IntMatrix A = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {-4, 10, 16}});
  IntMatrix K = kernel_basis(A);
  CHECK(K.cols() == 1);
  CHECK((A * K).is_zero());
  CHECK(in_column_lattice(A, {2, -6, -4}));
  CHECK_FALSE(in_column_lattice(A, {1, 0, 0}));
  auto x = solve_integer(A, {6, 0, 6});
  REQUIRE(x);
  CHECK(A * *x == IntVector{6, 0, 6});
  // Z^2 / <(2,0), (0,3)> is cyclic of order 6.
  LatticeQuotient q = LatticeQuotient::from_generators(IntMatrix::identity(2), IntMatrix::from_rows({{2, 0}, {0, 3}}));
  CHECK(q.orders() == std::vector<Integer>{6});
  CHECK(q.classify({2, 0}) == IntVector{0});
  CHECK(q.classify({1, 1}) != IntVector{0});
}

TEST_CASE("finitely generated abelian groups") {
  CHECK(G({2, 3}) == G({6}));
  CHECK(G({2, 4}).to_string() == "Z/2 + Z/4");
  CHECK(G({0, 0, 1}).to_string() == "Z^2");
  CHECK(G({1}).is_trivial());
  CHECK(G({0}).to_string() == "Z");
  CHECK(G({12}).torsion_of(4) == G({4}));
  CHECK(G({12}).quotient_by(8) == G({4}));
  CHECK(G({0}).quotient_by(3) == G({3}));
  CHECK(G({12, 9}).primary_part(3) == G({3, 9}));
  CHECK(G({4, 6}).order() == 24);
}

TEST_CASE("groups and modules") {
  auto S3 = FiniteGroup::symmetric3();
  CHECK(S3->order() == 6);
  int s = S3->element("sigma"), t = S3->element("tau");
  CHECK(S3->mul(s, S3->mul(s, s)) == 0);
  CHECK(S3->mul(t, t) == 0);
  CHECK(S3->mul(t, S3->mul(s, t)) == S3->mul(s, s));
  auto rt = GroupModule::reduced_permutation(S3);
  CHECK(rt.action(s) == IntMatrix::from_rows({{-1, -1}, {1, 0}}));
  CHECK(rt.action(t) == IntMatrix::from_rows({{-1, -1}, {0, 1}}));
  CHECK(rt.basis_labels() == std::vector<std::string>{"[t]", "[t-1]"});
  // rho~ sits in rho via f1 = e2 - e3, f2 = e1 - e3.
  auto rho = GroupModule::permutation(S3);
  IntMatrix emb = IntMatrix::from_rows({{0, 1}, {1, 0}, {-1, -1}});
  for (int g = 0; g < 6; ++g) CHECK(rho.action(g) * emb == emb * rt.action(g));
  // sigma acting with a wrong matrix is rejected.
  CHECK_THROWS(GroupModule(S3, 1, IntMatrix(1, 0), {IntMatrix::from_rows({{2}}), IntMatrix::from_rows({{1}})}));
  CHECK_THROWS(GroupModule::by_name(S3, "nonsense"));
  CHECK(GroupModule::by_name(S3, "rhotilde/3").uniform_modulus() == Integer(3));
}

TEST_CASE("d o d = 0 on the bar complex") {
  auto S3 = FiniteGroup::symmetric3();
  auto C4 = FiniteGroup::cyclic(4);
  std::vector<GroupModule> modules{GroupModule::by_name(S3, "Z"), GroupModule::by_name(S3, "rho"),
                                   GroupModule::by_name(S3, "rhotilde/4"),
                                   GroupModule::trivial_sum(S3, {2, 0, 6}),
                                   GroupModule(C4, 1, IntMatrix::from_rows({{5}}), {IntMatrix::from_rows({{2}})}, "Z/5(chi)")};
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> entry(-20, 20);
  for (const auto& M : modules) {
    BarComplex bar(M);
    for (int i = 0; i <= 2; ++i) {
      IntMatrix dd = bar.differential(i + 1) * bar.differential(i);
      for (int trial = 0; trial < 5; ++trial) {
        IntVector f(bar.dimension(i));
        for (auto& x : f) x = entry(rng);
        IntVector g = dd * f;
        size_t k = M.rank();
        for (size_t b = 0; b < g.size() / k; ++b) CHECK(M.in_relations(IntVector(g.begin() + b * k, g.begin() + (b + 1) * k)));
      }
    }
  }
}

TEST_CASE("cohomology of S3 with trivial coefficients") {
  auto S3 = FiniteGroup::symmetric3();
  CHECK(group_cohomology(GroupModule::trivial(S3, 0), 1).is_trivial());
  CHECK(group_cohomology(GroupModule::trivial(S3, 0), 2) == G({2}));
  CHECK(group_cohomology(GroupModule::trivial(S3, 0), 4) == G({6}));
  for (long m : {0L, 2L, 3L, 4L, 12L}) {
    CAPTURE(m);
    auto M = GroupModule::trivial(S3, m);
    FreeResolution R(S3, 5);
    CHECK(group_cohomology(M, 0, R) == (m == 0 ? G({0}) : G({m})));
    CHECK(group_cohomology(M, 1, R) == killed_by(m, 2));
    CHECK(group_cohomology(M, 2, R) == mod_out(m, 2));
    CHECK(group_cohomology(M, 3, R) == killed_by(m, 6));
    CHECK(group_cohomology(M, 4, R) == mod_out(m, 6));
    // The bar complex agrees through degree 3.
    for (int i = 0; i <= 3; ++i) CHECK(BarCohomology(BarComplex(M), i).group() == group_cohomology(M, i, R));
  }
  CHECK_THROWS_AS(group_cohomology(GroupModule::trivial(S3, 0), 5), std::invalid_argument);
}

TEST_CASE("cohomology of S3 with coefficients in rho~") {
  auto S3 = FiniteGroup::symmetric3();
  CHECK(group_cohomology(GroupModule::reduced_permutation(S3), 0).is_trivial());
  CHECK(group_cohomology(GroupModule::reduced_permutation(S3), 1) == G({3}));
  for (long m : {0L, 2L, 3L, 4L, 12L}) {
    CAPTURE(m);
    auto M = m == 0 ? GroupModule::reduced_permutation(S3) : GroupModule::reduced_permutation(S3).tensor_cyclic(m);
    FreeResolution R(S3, 5);
    CHECK(group_cohomology(M, 0, R) == killed_by(m, 3));
    CHECK(group_cohomology(M, 1, R) == mod_out(m, 3));
    CHECK(group_cohomology(M, 2, R).is_trivial());
    CHECK(group_cohomology(M, 3, R).is_trivial());
    // Periodicity: H^4 = H^0 = M[3].
    CHECK(group_cohomology(M, 4, R) == killed_by(m, 3));
    for (int i = 0; i <= 3; ++i) CHECK(BarCohomology(BarComplex(M), i).group() == group_cohomology(M, i, R));
  }
}

TEST_CASE("invariant generators") {
  auto S3 = FiniteGroup::symmetric3();
  auto inv = invariants_generator(GroupModule::by_name(S3, "rhotilde/3"));
  CHECK(inv.group == G({3}));
  REQUIRE(inv.descriptions.size() == 1);
  CHECK(inv.descriptions[0] == "[t] + [t-1]");
  CHECK(inv.generators[0] == IntVector{1, 1});
  CHECK(invariants_generator(GroupModule::by_name(S3, "rhotilde/2")).group.is_trivial());
  auto five = invariants_generator(GroupModule::trivial(S3, 5));
  CHECK(five.group == G({5}));
  CHECK(five.descriptions[0] == "1");
}

TEST_CASE("connecting homomorphism") {
  auto S3 = FiniteGroup::symmetric3();
  auto rt = GroupModule::reduced_permutation(S3);
  auto rho = GroupModule::permutation(S3);
  auto Z = GroupModule::trivial(S3, 0);
  IntMatrix emb = IntMatrix::from_rows({{0, 1}, {1, 0}, {-1, -1}});
  IntMatrix sum = IntMatrix::from_rows({{1, 1, 1}});
  ShortExactSequence ses{rt, rho, Z, emb, sum};
  CHECK_NOTHROW(verify_exact(ses));
  ConnectingImage d = connecting_map(ses, {1});
  CHECK(d.h1 == G({3}));
  REQUIRE(d.class_coordinates.size() == 1);
  CHECK(d.class_coordinates[0] != 0);
  CHECK(connecting_map(ses, {3}).class_coordinates[0] == 0);

  // Split sequence: Z -> Z + Z/3 -> Z/3.
  auto A = GroupModule::trivial(S3, 0), C = GroupModule::trivial(S3, 3);
  auto B = GroupModule::trivial_sum(S3, {0, 3});
  ShortExactSequence split{A, B, C, IntMatrix::from_rows({{1}, {0}}), IntMatrix::from_rows({{0, 1}})};
  CHECK_NOTHROW(verify_exact(split));
  auto zero = connecting_map(split, {1});
  CHECK(zero.h1.is_trivial());

  // 0 -> Z -2-> Z -> Z/2 -> 0 with trivial action: the target H^1(Z) vanishes.
  ShortExactSequence two{Z, Z, GroupModule::trivial(S3, 2), IntMatrix::from_rows({{2}}), IntMatrix::from_rows({{1}})};
  CHECK(connecting_map(two, {1}).h1.is_trivial());

  ShortExactSequence broken{Z, Z, GroupModule::trivial(S3, 2), IntMatrix::from_rows({{4}}), IntMatrix::from_rows({{1}})};
  CHECK_THROWS_AS(verify_exact(broken), std::invalid_argument);
  ShortExactSequence not_equivariant{Z, rho, Z, IntMatrix::from_rows({{1}, {0}, {0}}), sum};
  CHECK_THROWS_AS(connecting_map(not_equivariant, {1}), std::invalid_argument);
}

TEST_CASE("Shapiro: rho (x) M against C2") {
  auto S3 = FiniteGroup::symmetric3();
  auto C2 = FiniteGroup::cyclic(2);
  for (long m : {0L, 4L}) {
    CAPTURE(m);
    auto rho = m == 0 ? GroupModule::permutation(S3) : GroupModule::permutation(S3).tensor_cyclic(m);
    auto M = GroupModule::trivial(C2, m);
    for (int i = 0; i <= 3; ++i) {
      CAPTURE(i);
      CHECK(group_cohomology(rho, i) == group_cohomology(M, i));
      CHECK(BarCohomology(BarComplex(rho), i).group() == BarCohomology(BarComplex(M), i).group());
    }
  }
}

TEST_CASE("corestriction after restriction is multiplication by 3") {
  auto S3 = FiniteGroup::symmetric3();
  CHECK(transfer_composition_check(GroupModule::trivial(S3, 0), 2));
  CHECK(transfer_composition_check(GroupModule::trivial(S3, 12), 1));
  CHECK(transfer_composition_check(GroupModule::reduced_permutation(S3), 1));
  for (auto name : {"Z", "Z/2", "Z/3", "Z/4", "Z/12", "rho", "rhotilde", "rhotilde/3", "rhotilde/12"})
    for (int i = 0; i <= 3; ++i) {
      CAPTURE(name);
      CAPTURE(i);
      CHECK(transfer_composition_check(GroupModule::by_name(S3, name), i));
    }
  CHECK_THROWS(transfer_composition_check(GroupModule::trivial(FiniteGroup::cyclic(3), 0), 1));
}
