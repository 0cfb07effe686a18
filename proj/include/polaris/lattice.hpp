#pragma once

#include <optional>

#include "polaris/types.hpp"

namespace polaris {

// Lattice points of the dilated simplex: all a in N^n with |a| = d,
// in lexicographically descending order.
std::vector<Exponent> enumerate_points(int n, int d);

// b >=_i a : b_i >= a_i and b_j <= a_j for all j != i.
bool leq_i(const Exponent& a, const Exponent& b, int i);

// One-skeleton edge between apex-e_i and apex-e_j, apex of degree d+1.
struct DownEdge {
    Exponent apex;
    int i = 0;  // 0-based, i < j
    int j = 0;

    auto operator<=>(const DownEdge&) const = default;
};

DownEdge make_edge(const Exponent& apex, int i, int j);

// Edge between two degree-d points differing by a single swap; nullopt if the
// points are not the endpoints of a one-skeleton edge.
std::optional<DownEdge> edge_between(const Exponent& a, const Exponent& b);

struct SyzygyGraph {
    int n = 0;
    int d = 0;
    std::set<DownEdge> edges;

    bool has(const DownEdge& e) const { return edges.count(e) > 0; }
    bool adjacent(const Exponent& a, const Exponent& b) const;
};

// Full one-skeleton of the hypersimplicial complex, optionally restricted to
// vertices <= u coordinatewise.
SyzygyGraph full_skeleton(int n, int d, const std::optional<Exponent>& u = {});

struct IndexedGraph {
    std::vector<Exponent> vertices;
    std::vector<DownEdge> edges;
};

// Complete down-graph D(c) (or D_R(c) for a subset R of Supp(c)).
IndexedGraph down_graph(const Exponent& c, const std::optional<std::vector<int>>& R = {});

// Complete up-graph U(a) for |a| = d-1.
IndexedGraph up_graph(const Exponent& a, int d);

// Chain C^p in (Delta^Z(n,d), >=_i): p has |p| = r <= d and vanishes at i and
// at the companion j (j = 2nd index if i is the 1st, else the 1st). The rank-m
// element is m*e_i + (d-m-r)*e_j + p.
struct ChainId {
    int i = 0;  // 0-based
    Exponent p;

    auto operator<=>(const ChainId&) const = default;
};

int companion_index(int i);

// Total order on chain ids: |p| first, then first differing coordinate
// descending (larger coordinate earlier).
bool chain_prec(const ChainId& a, const ChainId& b);

Exponent chain_element(const ChainId& id, int d, int rank);

struct ChainData {
    ChainId id;
    std::vector<Exponent> elements;   // ranks 0..d-|p|
    std::vector<Exponent> extension;  // ranks 0..d (maximal chain)
};

// Partition of the lattice points into chains, sorted by the total order.
std::vector<ChainData> chain_decomposition(int n, int d, int i);

}  // namespace polaris
