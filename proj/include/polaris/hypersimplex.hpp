#pragma once

#include <optional>

#include "polaris/complexes.hpp"
#include "polaris/types.hpp"

namespace polaris {

// Cells C_{a,J} of the hypersimplicial complex: Key with row = a, cols = J.
// Valid iff (|a| = d and J empty) or 1 <= d - |a| <= |J| - 1.
bool cell_valid(const Key& cell, int d);

inline int cell_dim(const Key& cell) { return cell.cols.empty() ? 0 : (int)cell.cols.size() - 1; }

// All valid cells graded by dimension, optionally restricted to multidegree
// <= u coordinatewise.
std::vector<std::vector<Key>> enumerate_cells(int n, int d, const std::optional<Exponent>& u = {});

// The five-case cellular differential.
Chain cell_boundary(const Key& cell, int d);

// Cells of positive dimension carry their own tableau; 0-cells map to the
// column-length-1 tableau of their generator monomial.
Key cell_to_tableau(const Key& cell);
Key tableau_to_cell(const Key& tableau);

// Augmented cellular chain complex as a frame: degree 0 the augmentation,
// degree k+1 the k-cells, with multidegree labels.
ComplexDesc hypersimplex_complex(int n, int d, const std::optional<Exponent>& u = {});

struct HypersimplexCensus {
    std::vector<long> cells_by_dim;
    std::vector<long> down_by_dim;    // d - |a| = |J| - 1 >= 2 (simplex pointing down)
    std::vector<long> up_by_dim;      // d - |a| = 1 <= |J| - 2 (simplex pointing up)
    std::vector<long> proper_by_dim;  // 2 <= d - |a| <= |J| - 2 (not a simplex)
    std::vector<Exponent> full_support_down_apexes;  // mdeg of down cells with J = [n]
};
HypersimplexCensus hypersimplex_census(int n, int d, const std::optional<Exponent>& u = {});

}  // namespace polaris
