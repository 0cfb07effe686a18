#pragma once

#include "polaris/types.hpp"

namespace polaris {

// Exact rank of a rational matrix (rows x cols) by fraction-free Bareiss
// elimination after clearing row denominators. Pivot choice: for each column
// left to right, the first row with a nonzero entry.
long matrix_rank(std::vector<std::vector<Rational>> m);

long matrix_rank_int(std::vector<std::vector<BigInt>> m);

// dim ker = cols - rank for the matrix whose columns are the given chains
// expressed in the index space of `basis_index`.
std::vector<std::vector<Rational>> chains_to_matrix(const std::vector<Chain>& cols,
                                                    const std::map<Key, int>& basis_index);

}  // namespace polaris
