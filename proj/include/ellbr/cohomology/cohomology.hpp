#pragma once

#include <string>
#include <vector>

#include "ellbr/cohomology/module.hpp"

namespace ellbr {

// Free ZG-resolution F_n -> ... -> F_0 -> Z with small ranks, built by choosing
// ZG-generators of each kernel greedily. boundary(i) is the Z-matrix of F_i -> F_{i-1}
// (i >= 1) on the basis g*e_j (index j*|G| + g).
class FreeResolution {
 public:
  FreeResolution(std::shared_ptr<const FiniteGroup> group, int length);
  const FiniteGroup& group() const { return *group_; }
  int length() const { return static_cast<int>(ranks_.size()) - 1; }
  size_t rank(int i) const { return ranks_[i]; }
  const IntMatrix& boundary(int i) const { return boundary_[i]; }

 private:
  std::shared_ptr<const FiniteGroup> group_;
  std::vector<size_t> ranks_;
  std::vector<IntMatrix> boundary_;  // boundary_[0] is the augmentation
};

// H^i(G, M) for 0 <= i <= 4.
FgAbelianGroup group_cohomology(const GroupModule& M, int degree);
FgAbelianGroup group_cohomology(const GroupModule& M, int degree, const FreeResolution& resolution);

// Normalized inhomogeneous cochains: C^i = maps from (G \ {1})^i to M, as vectors of length
// (|G|-1)^i * rank, tuple-major.
class BarComplex {
 public:
  explicit BarComplex(const GroupModule& M);
  const GroupModule& module() const { return M_; }
  size_t dimension(int i) const;
  // Matrix of d: C^i -> C^(i+1).
  IntMatrix differential(int i) const;
  size_t tuple_index(const std::vector<int>& elements) const;  // elements all != 1
  std::vector<int> tuple(size_t index, int length) const;

 private:
  GroupModule M_;
  std::vector<int> nontrivial_;
  std::vector<int> position_;
};

// H^i computed from the normalized bar complex, with explicit cocycles and classification.
class BarCohomology {
 public:
  BarCohomology(const BarComplex& complex, int degree);
  FgAbelianGroup group() const;
  const std::vector<Integer>& orders() const { return quotient_.orders(); }
  const std::vector<IntVector>& generators() const { return quotient_.generators(); }
  bool is_cocycle(const IntVector& f) const { return quotient_.contains(f); }
  IntVector classify(const IntVector& cocycle) const { return quotient_.classify(cocycle); }

 private:
  LatticeQuotient quotient_;
};

struct InvariantsDescription {
  FgAbelianGroup group;
  std::vector<IntVector> generators;      // canonical representatives
  std::vector<std::string> descriptions;  // e.g. "[t] + [t-1]"
};

// Explicit generators of H^0(G, M) = M^G.
InvariantsDescription invariants_generator(const GroupModule& M);

struct ShortExactSequence {
  GroupModule A, B, C;
  IntMatrix alpha;  // A -> B
  IntMatrix beta;   // B -> C
};

// Throws std::invalid_argument unless the maps are equivariant, well defined and exact.
void verify_exact(const ShortExactSequence& ses);

struct ConnectingImage {
  FgAbelianGroup h1;     // H^1(G, A)
  IntVector cocycle;     // g -> g.b - b on G \ {1}, pulled back to A
  IntVector class_coordinates;
};

// The coboundary H^0(G, C) -> H^1(G, A) applied to an invariant element c of C.
ConnectingImage connecting_map(const ShortExactSequence& ses, const IntVector& c);

// Checks cor o res = [G:H] on H^i(G, M) for H = <tau> (order 2) in S3 at the cochain level.
bool transfer_composition_check(const GroupModule& M, int degree);

}  // namespace ellbr
