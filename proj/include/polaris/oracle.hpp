#pragma once

#include <functional>

#include "polaris/polarization.hpp"

namespace polaris {

struct BettiTable {
    std::map<Exponent, std::vector<long>> by_multidegree;  // beta_{i,m} of the ideal
    std::vector<long> total;

    long beta(int i) const { return i < (int)total.size() ? total[i] : 0; }
};

// Multigraded Betti numbers of a monomial ideal from reduced homology of the
// subcomplexes of generator subsets whose lcm strictly divides each lattice
// multidegree. Exact arithmetic; guarded by the generator count.
BettiTable taylor_betti(const std::vector<Exponent>& gens, int guard = 0);

BettiTable taylor_betti(const MonomialIdealTilde& ideal, int guard = 0);

// True iff the polarized ideal has the Betti numbers of the restricted power
// (read off the restricted standard basis ranks) and depolarizes to it.
bool verify_polarization_bruteforce(const IsotoneFamily& f, int guard = 0);

struct EnumeratedClass {
    SyzygyGraph graph;
    IsotoneFamily family;  // first family inducing this graph
    long family_count = 0;
    bool oracle_verified = false;
};

struct Enumeration {
    int n = 0, d = 0;
    std::optional<Exponent> u;
    bool by_family = false;
    long total_families = 0;
    std::vector<EnumeratedClass> classes;              // in first-seen order
    std::vector<IsotoneFamily> families;               // all, when by_family
};

// Exhaustive depth-first search over rank-preserving isotone labelings in a
// fixed canonical order, accepting a family iff its linear-syzygy graph
// satisfies the spanning tree criterion. Deduplicates by graph unless
// by_family is set. Every emitted class is checked against the brute-force
// oracle.
Enumeration enumerate_polarizations(int n, int d, const std::optional<Exponent>& u = {},
                                    bool by_family = false, int guard = 0,
                                    bool verify = true);

}  // namespace polaris
