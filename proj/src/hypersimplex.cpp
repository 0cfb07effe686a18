#include "polaris/hypersimplex.hpp"

#include <algorithm>

#include "polaris/lattice.hpp"

namespace polaris {

bool cell_valid(const Key& cell, int d) {
    if (!nonnegative(cell.row)) return false;
    for (size_t v = 0; v + 1 < cell.cols.size(); ++v)
        if (cell.cols[v] >= cell.cols[v + 1]) return false;
    if (!cell.cols.empty() &&
        (cell.cols.front() < 0 || cell.cols.back() >= (int)cell.row.size()))
        return false;
    int q = d - degree(cell.row);
    if (cell.cols.empty()) return q == 0;
    return 1 <= q && q <= (int)cell.cols.size() - 1;
}

std::vector<std::vector<Key>> enumerate_cells(int n, int d, const std::optional<Exponent>& u) {
    if (n < 1 || d < 1) throw std::invalid_argument("enumerate_cells: n, d must be >= 1");
    std::vector<std::vector<Key>> graded(1);
    for (const Exponent& a : enumerate_points(n, d)) {
        Key cell{{}, a};
        if (!u || divides(a, *u)) graded[0].push_back(cell);
    }
    // dimension r cells have |J| = r+1 and d - r <= |a| <= d - 1
    std::vector<int> J;
    auto rec = [&](auto&& self, int next, int size) -> void {
        if ((int)J.size() == size) {
            for (int q = 1; q <= std::min(size - 1, d); ++q) {  // q = d - |a|
                for (Exponent& a : enumerate_points(n, d - q)) {
                    Key cell{J, a};
                    if ((int)graded.size() <= size - 1) graded.resize(size);
                    if (!u || divides(key_mdeg(cell), *u)) graded[size - 1].push_back(cell);
                }
            }
            return;
        }
        for (int j = next; j < n; ++j) {
            J.push_back(j);
            self(self, j + 1, size);
            J.pop_back();
        }
    };
    for (int size = 2; size <= n; ++size) rec(rec, 0, size);
    while (!graded.empty() && graded.back().empty()) graded.pop_back();
    for (auto& level : graded) std::sort(level.begin(), level.end());
    return graded;
}

Chain cell_boundary(const Key& cell, int d) {
    if (!cell_valid(cell, d)) throw std::invalid_argument("cell_boundary: invalid cell");
    Chain out;
    const auto& J = cell.cols;
    int q = d - degree(cell.row);
    int r = (int)J.size();
    if (cell.cols.empty()) return out;  // vertices

    auto drop = [&](size_t v) {
        std::vector<int> Jv;
        for (size_t w = 0; w < J.size(); ++w)
            if (w != v) Jv.push_back(J[w]);
        return Jv;
    };

    if (q == 1 && r == 2) {
        chain_add(out, Key{{}, plus(cell.row, J[0])}, 1);
        chain_add(out, Key{{}, plus(cell.row, J[1])}, -1);
        return out;
    }
    for (size_t v = 0; v < J.size(); ++v) {
        Rational sign = (v % 2 == 0) ? 1 : -1;
        if (2 <= q && q <= r - 2) {
            // both halves enter with the same sign; the opposite relative
            // sign breaks d^2 = 0 against the other cases
            chain_add(out, Key{drop(v), cell.row}, sign);
            chain_add(out, Key{drop(v), plus(cell.row, J[v])}, sign);
        } else if (q == 1) {
            chain_add(out, Key{drop(v), cell.row}, sign);
        } else {  // 2 <= q == r - 1
            chain_add(out, Key{drop(v), plus(cell.row, J[v])}, sign);
        }
    }
    return out;
}

Key cell_to_tableau(const Key& cell) {
    if (!cell.cols.empty()) return cell;
    int m = min_support(cell.row);
    if (m == kNoSupport) throw std::invalid_argument("cell_to_tableau: zero vertex");
    return Key{{m}, plus(cell.row, m, -1)};
}

Key tableau_to_cell(const Key& tableau) {
    if (tableau.cols.size() == 1) return Key{{}, plus(tableau.row, tableau.cols[0])};
    return tableau;
}

ComplexDesc hypersimplex_complex(int n, int d, const std::optional<Exponent>& u) {
    auto cells = enumerate_cells(n, d, u);
    ComplexDesc cx;
    cx.n = n;
    Key aug = augmentation_key(n);
    cx.basis.push_back({aug});
    cx.multidegree[aug] = zero(n);
    for (size_t dim = 0; dim < cells.size(); ++dim) {
        cx.basis.push_back(cells[dim]);
        for (const Key& cell : cells[dim]) {
            cx.multidegree[cell] = key_mdeg(cell);
            if (dim == 0) {
                Chain bd;
                bd.emplace(aug, Rational(1));
                cx.boundary[cell] = std::move(bd);
            } else {
                Chain bd = cell_boundary(cell, d);
                if (u) {
                    // faces of a kept cell divide its multidegree, hence stay
                    for (const auto& [k, v] : bd)
                        if (!divides(key_mdeg(k), *u))
                            throw std::logic_error("hypersimplex_complex: restriction not closed");
                }
                if (!bd.empty()) cx.boundary[cell] = std::move(bd);
            }
        }
    }
    return cx;
}

HypersimplexCensus hypersimplex_census(int n, int d, const std::optional<Exponent>& u) {
    auto cells = enumerate_cells(n, d, u);
    HypersimplexCensus c;
    c.cells_by_dim.assign(cells.size(), 0);
    c.down_by_dim.assign(cells.size(), 0);
    c.up_by_dim.assign(cells.size(), 0);
    c.proper_by_dim.assign(cells.size(), 0);
    for (size_t dim = 0; dim < cells.size(); ++dim) {
        c.cells_by_dim[dim] = (long)cells[dim].size();
        for (const Key& cell : cells[dim]) {
            if (dim == 0) continue;
            int q = d - degree(cell.row);
            int r = (int)cell.cols.size();
            if (q >= 2 && q == r - 1) {
                c.down_by_dim[dim] += 1;
                if (r == n) c.full_support_down_apexes.push_back(key_mdeg(cell));
            } else if (q == 1 && r >= 3) {
                c.up_by_dim[dim] += 1;
            } else if (2 <= q && q <= r - 2) {
                c.proper_by_dim[dim] += 1;
            }
        }
    }
    std::sort(c.full_support_down_apexes.begin(), c.full_support_down_apexes.end());
    return c;
}

}  // namespace polaris
