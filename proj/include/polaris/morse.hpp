#pragma once

#include <optional>

#include "polaris/complexes.hpp"

namespace polaris {

// Directed matching edges higher -> lower in the cell graph; dims drop by 1.
struct Matching {
    std::vector<std::pair<Key, Key>> pairs;
};

struct MatchingReport {
    bool acyclic = true;
    bool homogeneous = true;
    std::vector<Key> cycle;  // a directed cycle in the reversed graph, if any
};

// Throws on malformed pairs (unknown cell, dimension gap != 1, duplicates);
// reports acyclicity of the reversed graph and homogeneity of the labels.
MatchingReport validate_matching(const ComplexDesc& cx, const Matching& m);

// The matching C_{a,J} -> C_{a + e_minJ, J \ minJ} over cells with
// 2 <= d - |a| <= |J| - 1 and min J <= min Supp(a) (vacuous for a = 0).
Matching l_matching(int n, int d);

// Critical cells of the matching, graded like the input complex.
std::vector<std::vector<Key>> critical_cells(const ComplexDesc& cx, const Matching& m);

// Morse complex on the critical cells; the differential sums signed gradient
// paths. Requires an acyclic matching.
ComplexDesc morse_complex(const ComplexDesc& cx, const Matching& m);

struct IsoReport {
    bool ok = true;
    std::map<Key, int> signs;  // per-basis sign assignment on the Morse side
    std::string witness;
};

// Maps each critical cell of the l_matching Morse complex to its standard
// tableau and compares the differential with the one of build_l_complex, up
// to a per-basis-element sign choice.
IsoReport verify_l_isomorphism(int n, int d);

}  // namespace polaris
