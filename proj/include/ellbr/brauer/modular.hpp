#pragma once

#include <vector>

namespace ellbr {

using ModVector = std::vector<long>;

// Basis of {x in F_l^cols : M x = 0}, l prime, in reduced echelon form (pivot-free coordinates
// set to unit vectors). M is given by rows.
std::vector<ModVector> kernel_mod(const std::vector<ModVector>& rows, size_t cols, long l);
size_t rank_mod(std::vector<ModVector> rows, long l);

// All nonzero vectors of F_l^n in lexicographic order (n small).
std::vector<ModVector> nonzero_vectors(size_t n, long l);

}  // namespace ellbr
