#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ellbr/arith/integer.hpp"

namespace ellbr {

using IntVector = std::vector<Integer>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows, IntVector(cols, Integer(0))) {}
  static IntMatrix identity(size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
  static IntMatrix from_columns(const std::vector<IntVector>& cols, size_t rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Integer& operator()(size_t i, size_t j) { return data_[i][j]; }
  const Integer& operator()(size_t i, size_t j) const { return data_[i][j]; }
  const IntVector& row(size_t i) const { return data_[i]; }
  IntVector column(size_t j) const;
  std::vector<IntVector> columns() const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& other) const;
  IntVector operator*(const IntVector& v) const;
  IntMatrix operator-(const IntMatrix& other) const;
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;
  bool is_zero() const;

  // [this | other]
  IntMatrix hconcat(const IntMatrix& other) const;

  std::string to_string() const;

 private:
  friend struct SmithWorker;
  friend struct SmithForm smith_normal_form(const IntMatrix& A, unsigned transforms);
  size_t rows_ = 0, cols_ = 0;
  std::vector<IntVector> data_;
};

struct SmithForm {
  IntMatrix D;             // U A V, diagonal with d_1 | d_2 | ... (first `rank` entries positive)
  IntMatrix U, U_inv;      // empty unless requested
  IntMatrix V, V_inv;      // empty unless requested
  std::vector<Integer> diagonal;
  size_t rank = 0;
};

enum SmithTransforms : unsigned { kSmithNone = 0, kSmithLeft = 1, kSmithRight = 2, kSmithBoth = 3 };

SmithForm smith_normal_form(const IntMatrix& A, unsigned transforms = kSmithBoth);

// Saturated basis (as columns) of {x : A x = 0}.
IntMatrix kernel_basis(const IntMatrix& A);
// Basis (as columns) of the lattice spanned by the columns of A.
IntMatrix column_lattice_basis(const IntMatrix& A);
// Integer solution of A x = b, if any.
std::optional<IntVector> solve_integer(const IntMatrix& A, const IntVector& b);
bool in_column_lattice(const IntMatrix& A, const IntVector& b);

// Z / B for lattices B <= Z <= Z^n, with explicit generators and a classification map.
class LatticeQuotient {
 public:
  // z_basis: basis of Z (columns); b_gens: generators of B (columns), assumed inside Z.
  static LatticeQuotient from_generators(const IntMatrix& z_basis, const IntMatrix& b_gens);
  // z_basis plus coordinates of B's generators in that basis, and a map from vectors of Z
  // to their coordinates (throwing if the vector is outside Z).
  LatticeQuotient(IntMatrix z_basis, const IntMatrix& b_coords, std::function<IntVector(const IntVector&)> z_coords);

  // Orders of the cyclic factors, d_1 | d_2 | ..., with 0 for a free factor (listed last).
  const std::vector<Integer>& orders() const { return orders_; }
  // Representatives in Z of the cyclic generators.
  const std::vector<IntVector>& generators() const { return generators_; }
  // Coordinates of the class of z in the cyclic decomposition, reduced mod the orders.
  IntVector classify(const IntVector& z) const;
  bool contains(const IntVector& z) const;

 private:
  std::vector<Integer> orders_;
  std::vector<IntVector> generators_;
  std::vector<size_t> kept_;
  IntMatrix Uc_;
  std::function<IntVector(const IntVector&)> z_coords_;
};

}  // namespace ellbr
