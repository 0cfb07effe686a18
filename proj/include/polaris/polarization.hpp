#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "polaris/complexes.hpp"
#include "polaris/lattice.hpp"

namespace polaris {

// Sets X_i(a) <= [d] stored as bitmasks over 0..d-1.
using SetMask = uint32_t;

inline int mask_rank(SetMask m) { return __builtin_popcount(m); }

struct IsotoneFamily {
    int n = 0;
    int d = 0;
    std::optional<Exponent> u;  // bound for restricted powers
    std::map<Exponent, std::vector<SetMask>> tables;  // point -> X_1..X_n

    const std::vector<SetMask>& at(const Exponent& a) const { return tables.at(a); }
};

// The generator set of the (restricted) power: |a| = d, a <= u.
std::vector<Exponent> restricted_generators(int n, int d, const std::optional<Exponent>& u);

// Rank preservation, isotonicity along covers, and the bound; nullopt if ok.
std::optional<std::string> validate_family(const IsotoneFamily& f);

// X_i(a) = {1..a_i}.
IsotoneFamily standard_family(int n, int d, const std::optional<Exponent>& u = {});

struct MonomialIdealTilde {
    int n = 0, d = 0;
    // one squarefree generator per point: masks per row index i
    std::vector<std::pair<Exponent, std::vector<SetMask>>> gens;
};

MonomialIdealTilde realize_ideal(const IsotoneFamily& f);

// Substitutes x_{ij} -> x_i and compares with the restricted power.
bool depolarization_check(const IsotoneFamily& f);

// Edge (c;i,j) present iff X_p agrees on the endpoints for every p != i,j.
// Computes the isotone-table and common-factor characterizations and insists
// they agree.
SyzygyGraph ls_edges(const IsotoneFamily& f);

struct SpanCheck {
    bool ok = true;
    Exponent witness_apex;
};

// For every apex c of degree d+1 (within the bound), the graph edges inside
// D(c) must connect all of its vertices.
SpanCheck spanning_tree_check(const SyzygyGraph& g, const std::optional<Exponent>& u = {});

// R-linear-syzygy edges of D_R(c) and their spanning status.
bool r_ls_check(const IsotoneFamily& f, const Exponent& c, const std::vector<int>& R);

// Dictionary maps into the hook-tableau world.
Exponent dict_psi(const Exponent& a);
Key dict_omega(const Exponent& c, const std::vector<int>& R);
Key dict_theta(const Exponent& c, int i, int j);
Key dict_theta(const DownEdge& e);

// Straightened edge labels must span L^1_d (restricted to multidegrees <= u
// for bounded families).
bool tab_spanning_check(const IsotoneFamily& f);

struct PolarizationVerdict {
    bool spanning = false;
    std::optional<bool> tab_span;
    std::optional<bool> oracle;

    bool value() const { return spanning; }
};

// Criterion order: spanning tree is authoritative; cross checks are opt-in
// and any disagreement is an internal error.
PolarizationVerdict is_polarization(const IsotoneFamily& f, bool cross_check = false,
                                    int guard = 0);

struct RestrictedSetup {
    std::vector<Exponent> generators;
    ComplexDesc hypersimplex;   // H(<= u), homogenized frame
    ComplexDesc morse;          // restricted Morse complex
    std::vector<Key> l_basis;   // standard tableaux with multidegree <= u
    std::vector<long> l_ranks;  // per column length
    bool empty = false;
};

RestrictedSetup restricted_power_setup(int n, int d, const Exponent& u);

// Random rank-preserving isotone family, built rank by rank.
IsotoneFamily random_family(int n, int d, std::mt19937_64& rng,
                            const std::optional<Exponent>& u = {});

}  // namespace polaris
