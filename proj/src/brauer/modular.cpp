#include "ellbr/brauer/modular.hpp"

#include <stdexcept>

#include "ellbr/arith/integer.hpp"

namespace ellbr {

namespace {

long reduce(long x, long l) { return ((x % l) + l) % l; }

long inverse(long a, long l) {
  for (long b = 1; b < l; ++b)
    if (a * b % l == 1) return b;
  throw std::invalid_argument("no inverse mod l");
}

// Row reduction in place; returns pivot columns.
std::vector<size_t> echelon(std::vector<ModVector>& m, size_t cols, long l) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (auto& row : m)
    for (auto& x : row) x = reduce(x, l);
  for (size_t c = 0; c < cols && r < m.size(); ++c) {
    size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    long inv = inverse(m[r][c], l);
    for (auto& x : m[r]) x = x * inv % l;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      long f = m[i][c];
      for (size_t k = 0; k < cols; ++k) m[i][k] = reduce(m[i][k] - f * m[r][k], l);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<ModVector> kernel_mod(const std::vector<ModVector>& rows, size_t cols, long l) {
  if (!is_prime(l)) throw std::invalid_argument("kernel_mod: modulus must be prime");
  for (auto& r : rows)
    if (r.size() != cols) throw std::invalid_argument("kernel_mod: ragged matrix");
  std::vector<ModVector> m = rows;
  std::vector<size_t> pivots = echelon(m, cols, l);
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<ModVector> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    ModVector v(cols, 0);
    v[f] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = reduce(-m[i][f], l);
    basis.push_back(v);
  }
  return basis;
}

size_t rank_mod(std::vector<ModVector> rows, long l) {
  if (rows.empty()) return 0;
  return echelon(rows, rows[0].size(), l).size();
}

std::vector<ModVector> nonzero_vectors(size_t n, long l) {
  std::vector<ModVector> out;
  ModVector v(n, 0);
  for (;;) {
    size_t i = n;
    while (i > 0 && v[i - 1] == l - 1) v[--i] = 0;
    if (i == 0) break;
    ++v[i - 1];
    out.push_back(v);
  }
  return out;
}

}  // namespace ellbr
