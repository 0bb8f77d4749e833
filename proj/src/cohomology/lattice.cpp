#include "ellbr/cohomology/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace ellbr {

IntMatrix IntMatrix::identity(size_t n) {
  IntMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.data_[i][i] = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("IntMatrix: ragged rows");
    for (size_t j = 0; j < m.cols_; ++j) m.data_[i][j] = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, size_t rows) {
  IntMatrix m(rows, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("IntMatrix: column of wrong length");
    for (size_t i = 0; i < rows; ++i) m.data_[i][j] = cols[j][i];
  }
  return m;
}

IntVector IntMatrix::column(size_t j) const {
  IntVector c(rows_);
  for (size_t i = 0; i < rows_; ++i) c[i] = data_[i][j];
  return c;
}

std::vector<IntVector> IntMatrix::columns() const {
  std::vector<IntVector> c;
  for (size_t j = 0; j < cols_; ++j) c.push_back(column(j));
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.data_[j][i] = data_[i][j];
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
  IntMatrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Integer& a = data_[i][k];
      if (a == 0) continue;
      const IntVector& orow = o.data_[k];
      IntVector& rrow = r.data_[i];
      for (size_t j = 0; j < o.cols_; ++j)
        if (orow[j] != 0) rrow[j] += a * orow[j];
    }
  return r;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("IntMatrix: shape mismatch in product");
  IntVector r(rows_, Integer(0));
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (data_[i][j] != 0 && v[j] != 0) r[i] += data_[i][j] * v[j];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("IntMatrix: shape mismatch");
  IntMatrix r = *this;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.data_[i][j] -= o.data_[i][j];
  return r;
}

bool IntMatrix::is_zero() const {
  for (auto& row : data_)
    for (auto& x : row)
      if (x != 0) return false;
  return true;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("IntMatrix: row mismatch in hconcat");
  IntMatrix r(rows_, cols_ + o.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    std::copy(data_[i].begin(), data_[i].end(), r.data_[i].begin());
    std::copy(o.data_[i].begin(), o.data_[i].end(), r.data_[i].begin() + cols_);
  }
  return r;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << data_[i][j].get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

// Elimination state for the Smith form; row operations are mirrored on U and U^-1,
// column operations on V and V^-1.
struct SmithWorker {
  std::vector<IntVector>& m;
  size_t rows, cols;
  bool left, right;
  IntMatrix U, Ui, V, Vi;

  SmithWorker(std::vector<IntVector>& data, size_t r, size_t c, bool l, bool rt) : m(data), rows(r), cols(c), left(l), right(rt) {
    if (left) U = Ui = IntMatrix::identity(rows);
    if (right) V = Vi = IntMatrix::identity(cols);
  }

  void swap_rows(size_t a, size_t b) {
    if (a == b) return;
    std::swap(m[a], m[b]);
    if (left) {
      std::swap(U.data_[a], U.data_[b]);
      for (size_t i = 0; i < rows; ++i) std::swap(Ui.data_[i][a], Ui.data_[i][b]);
    }
  }
  void swap_cols(size_t a, size_t b) {
    if (a == b) return;
    for (size_t i = 0; i < rows; ++i) std::swap(m[i][a], m[i][b]);
    if (right) {
      for (size_t i = 0; i < cols; ++i) std::swap(V.data_[i][a], V.data_[i][b]);
      std::swap(Vi.data_[a], Vi.data_[b]);
    }
  }
  void negate_row(size_t a) {
    for (auto& x : m[a]) x = -x;
    if (left) {
      for (auto& x : U.data_[a]) x = -x;
      for (size_t i = 0; i < rows; ++i) Ui.data_[i][a] = -Ui.data_[i][a];
    }
  }
  // row_a -= q * row_b, touching only the columns in `support` (the nonzeros of row b).
  void sub_row(size_t a, size_t b, const Integer& q, const std::vector<size_t>& support) {
    for (size_t j : support) m[a][j] -= q * m[b][j];
    if (left) {
      for (size_t j = 0; j < rows; ++j)
        if (U.data_[b][j] != 0) U.data_[a][j] -= q * U.data_[b][j];
      for (size_t i = 0; i < rows; ++i)
        if (Ui.data_[i][a] != 0) Ui.data_[i][b] += q * Ui.data_[i][a];
    }
  }
  // col_a -= q * col_b over the rows in `support` (the nonzeros of column b).
  void sub_col(size_t a, size_t b, const Integer& q, const std::vector<size_t>& support) {
    for (size_t i : support) m[i][a] -= q * m[i][b];
    if (right) {
      for (size_t i = 0; i < cols; ++i)
        if (V.data_[i][b] != 0) V.data_[i][a] -= q * V.data_[i][b];
      for (size_t j = 0; j < cols; ++j)
        if (Vi.data_[a][j] != 0) Vi.data_[b][j] += q * Vi.data_[a][j];
    }
  }
  void add_row(size_t a, size_t b, size_t from) {
    std::vector<size_t> support;
    for (size_t j = from; j < cols; ++j)
      if (m[b][j] != 0) support.push_back(j);
    sub_row(a, b, Integer(-1), support);
  }

  bool find_pivot(size_t t, size_t& pi, size_t& pj) {
    bool found = false;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j) {
        const Integer& x = m[i][j];
        if (x == 0) continue;
        if (!found || mpz_cmpabs(x.get_mpz_t(), m[pi][pj].get_mpz_t()) < 0) {
          pi = i;
          pj = j;
          found = true;
          if (x == 1 || x == -1) return true;
        }
      }
    return found;
  }

  void run() {
    size_t limit = std::min(rows, cols);
    for (size_t t = 0; t < limit; ++t) {
      size_t pi = t, pj = t;
      if (!find_pivot(t, pi, pj)) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      for (;;) {
        bool dirty = false;
        // Clear column t below the pivot.
        std::vector<size_t> rsup;
        for (size_t j = t; j < cols; ++j)
          if (m[t][j] != 0) rsup.push_back(j);
        for (size_t i = t + 1; i < rows; ++i) {
          if (m[i][t] == 0) continue;
          Integer q;
          mpz_tdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
          if (q != 0) sub_row(i, t, q, rsup);
          if (m[i][t] != 0) {
            swap_rows(t, i);
            dirty = true;
            break;
          }
        }
        if (dirty) continue;
        // Clear row t right of the pivot.
        std::vector<size_t> csup;
        for (size_t i = t; i < rows; ++i)
          if (m[i][t] != 0) csup.push_back(i);
        for (size_t j = t + 1; j < cols; ++j) {
          if (m[t][j] == 0) continue;
          Integer q;
          mpz_tdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
          if (q != 0) sub_col(j, t, q, csup);
          if (m[t][j] != 0) {
            swap_cols(t, j);
            dirty = true;
            break;
          }
        }
        if (dirty) continue;
        // Divisibility of the remaining block by the pivot.
        if (mpz_cmpabs_ui(m[t][t].get_mpz_t(), 1) != 0) {
          for (size_t i = t + 1; i < rows && !dirty; ++i)
            for (size_t j = t + 1; j < cols; ++j)
              if (m[i][j] != 0 && !mpz_divisible_p(m[i][j].get_mpz_t(), m[t][t].get_mpz_t())) {
                add_row(t, i, t);
                dirty = true;
                break;
              }
        }
        if (!dirty) break;
      }
      if (m[t][t] < 0) negate_row(t);
    }
  }
};

SmithForm smith_normal_form(const IntMatrix& A, unsigned transforms) {
  SmithForm s;
  s.D = A;
  SmithWorker w(s.D.data_, A.rows(), A.cols(), transforms & kSmithLeft, transforms & kSmithRight);
  w.run();
  size_t limit = std::min(A.rows(), A.cols());
  for (size_t t = 0; t < limit && s.D(t, t) != 0; ++t) {
    s.diagonal.push_back(s.D(t, t));
    ++s.rank;
  }
  if (transforms & kSmithLeft) {
    s.U = std::move(w.U);
    s.U_inv = std::move(w.Ui);
  }
  if (transforms & kSmithRight) {
    s.V = std::move(w.V);
    s.V_inv = std::move(w.Vi);
  }
  return s;
}

IntMatrix kernel_basis(const IntMatrix& A) {
  SmithForm s = smith_normal_form(A, kSmithRight);
  std::vector<IntVector> cols;
  for (size_t j = s.rank; j < A.cols(); ++j) cols.push_back(s.V.column(j));
  return IntMatrix::from_columns(cols, A.cols());
}

IntMatrix column_lattice_basis(const IntMatrix& A) {
  SmithForm s = smith_normal_form(A, kSmithLeft);
  std::vector<IntVector> cols;
  for (size_t j = 0; j < s.rank; ++j) {
    IntVector c = s.U_inv.column(j);
    for (auto& x : c) x *= s.diagonal[j];
    cols.push_back(std::move(c));
  }
  return IntMatrix::from_columns(cols, A.rows());
}

std::optional<IntVector> solve_integer(const IntMatrix& A, const IntVector& b) {
  if (b.size() != A.rows()) throw std::invalid_argument("solve_integer: shape mismatch");
  SmithForm s = smith_normal_form(A, kSmithBoth);
  IntVector ub = s.U * b;
  IntVector y(A.cols(), Integer(0));
  for (size_t i = 0; i < ub.size(); ++i) {
    if (i < s.rank) {
      if (!mpz_divisible_p(ub[i].get_mpz_t(), s.diagonal[i].get_mpz_t())) return std::nullopt;
      y[i] = ub[i] / s.diagonal[i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V * y;
}

bool in_column_lattice(const IntMatrix& A, const IntVector& b) { return solve_integer(A, b).has_value(); }

LatticeQuotient::LatticeQuotient(IntMatrix z_basis, const IntMatrix& b_coords, std::function<IntVector(const IntVector&)> z_coords)
    : z_coords_(std::move(z_coords)) {
  size_t z = z_basis.cols();
  if (b_coords.rows() != z) throw std::invalid_argument("LatticeQuotient: coordinate matrix has wrong height");
  SmithForm s = smith_normal_form(b_coords, kSmithLeft);
  Uc_ = s.U;
  IntMatrix gens = z_basis * s.U_inv;
  for (size_t i = 0; i < z; ++i) {
    Integer d = i < s.rank ? s.diagonal[i] : Integer(0);
    if (d == 1) continue;
    kept_.push_back(i);
    orders_.push_back(d);
    generators_.push_back(gens.column(i));
  }
}

LatticeQuotient LatticeQuotient::from_generators(const IntMatrix& z_basis, const IntMatrix& b_gens) {
  SmithForm zs = smith_normal_form(z_basis, kSmithBoth);
  if (zs.rank != z_basis.cols()) throw std::invalid_argument("LatticeQuotient: Z basis is not independent");
  auto coords = [zs](const IntVector& v) -> IntVector {
    IntVector ub = zs.U * v;
    IntVector y(zs.V.rows(), Integer(0));
    for (size_t i = 0; i < ub.size(); ++i) {
      if (i < zs.rank) {
        if (!mpz_divisible_p(ub[i].get_mpz_t(), zs.diagonal[i].get_mpz_t()))
          throw std::invalid_argument("LatticeQuotient: vector outside Z");
        y[i] = ub[i] / zs.diagonal[i];
      } else if (ub[i] != 0) {
        throw std::invalid_argument("LatticeQuotient: vector outside Z");
      }
    }
    return zs.V * y;
  };
  std::vector<IntVector> bc;
  for (size_t j = 0; j < b_gens.cols(); ++j) bc.push_back(coords(b_gens.column(j)));
  return LatticeQuotient(z_basis, IntMatrix::from_columns(bc, z_basis.cols()), coords);
}

IntVector LatticeQuotient::classify(const IntVector& z) const {
  IntVector c = Uc_ * z_coords_(z);
  IntVector out;
  for (size_t k = 0; k < kept_.size(); ++k) {
    Integer x = c[kept_[k]];
    if (orders_[k] != 0) x = mod(x, orders_[k]);
    out.push_back(x);
  }
  return out;
}

bool LatticeQuotient::contains(const IntVector& z) const {
  try {
    z_coords_(z);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace ellbr
