#pragma once

#include <optional>
#include <vector>

#include "ellbr/arith/poly.hpp"

namespace ellbr {

using RationalVector = std::vector<Rational>;

// Rank over Q of the matrix with the given rows.
size_t rational_rank(std::vector<RationalVector> rows);

enum class Splitting { split, division, unknown };
const char* to_string(Splitting s);

// The cyclic algebra (L/Q, sigma, u) of degree n on the basis x^i y^j (index i*n + j), with
// f(x) = 0, y^n = u and x y = y g(x), where g(root) = sigma(root).
struct CyclicAlgebraTable {
  int degree = 0;
  QPoly f, generator;
  Rational u;
  std::vector<std::vector<RationalVector>> structure;  // structure[a][b] = e_a * e_b

  size_t dimension() const { return structure.size(); }
  RationalVector multiply(const RationalVector& a, const RationalVector& b) const;
  RationalVector basis(size_t index) const;

  bool associative = false;
  size_t center_dimension = 0;
  bool central_simple = false;  // x (x) y -> (v -> x v y) has full rank n^4
  Splitting splitting = Splitting::unknown;
  std::optional<RationalVector> zero_divisor;
};

// n in {2, 3, 4}; f monic integral and irreducible, with g of order n on its roots.
// Anything else is rejected with std::invalid_argument.
CyclicAlgebraTable cyclic_algebra(const QPoly& f, const Rational& u, int n, const QPoly& g);
// Degree 2 with the nontrivial automorphism x -> -f_1 - x.
CyclicAlgebraTable cyclic_algebra(const QPoly& f, const Rational& u);

}  // namespace ellbr
