#pragma once

#include <random>

#include "polaris/lattice.hpp"
#include "polaris/polarization.hpp"

namespace polaris {

struct Diagnostic {
    std::string condition;  // G1 | G2 | G3 | G4 | BOUNDARY | STAR
    std::string human;
    std::vector<Exponent> witness_points;
    std::vector<DownEdge> witness_edges;
};

// Graph-side conditions for the existence of an isotone family realizing the
// graph as its linear syzygies, evaluated for one distinguished index.
std::vector<Diagnostic> check_conditions(const SyzygyGraph& g, int i);

std::vector<Diagnostic> check_conditions_all(const SyzygyGraph& g);

struct InferenceResult {
    IsotoneFamily family;
    // chain words per index, in chain order: word[k] is the k-th letter
    // (0-based letters of [d])
    std::map<int, std::vector<std::pair<ChainId, std::vector<int>>>> words;
};

// Chain-labeling inference: walks the chains in their total order, swapping
// adjacent word positions wherever the graph separates a chain element from
// its predecessor chain, and reads the sets off the word prefixes. Requires
// check_conditions_all to pass.
InferenceResult infer_family(const SyzygyGraph& g);

struct StarCheck {
    bool ok = true;
    std::optional<DownEdge> witness;
};

// Recomputes the family's linear-syzygy edges and compares with g as sets.
StarCheck verify_star(const SyzygyGraph& g, const IsotoneFamily& f);

// Random subgraph of the one-skeleton that passes the conditions (rejection
// sampling over removable edges).
SyzygyGraph random_passing_graph(int n, int d, std::mt19937_64& rng);

}  // namespace polaris
