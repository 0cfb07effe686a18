#pragma once

#include "polaris/complexes.hpp"
#include "polaris/linalg.hpp"

namespace polaris {

// Frame shape: U_0 is rank 1 and every degree-1 basis element maps to the
// degree-0 generator with coefficient 1.
void validate_frame(const ComplexDesc& c);

// Assigns multidegrees bottom-up by the lcm rule, keeping the given labels on
// degrees 0 and 1, and checks the divisibility of every boundary entry.
ComplexDesc homogenize(const ComplexDesc& frame);

// Homology dimensions per homological degree; checks boundary^2 = 0 first.
std::vector<long> rational_homology(const ComplexDesc& c);

// Least common multiples of nonempty subsets of gens, deduplicated and sorted
// by (total degree, lex). Guarded against generator blowup.
std::vector<Exponent> lcm_lattice(const std::vector<Exponent>& gens, int guard);

int generator_guard_default();

struct ResolutionCheck {
    bool ok = true;
    Exponent witness_multidegree;
    int homology_degree = -1;
    long dimension = 0;
};

// Exactness strand by strand: true iff the restriction to every multidegree
// in the lcm lattice of the degree-1 labels has zero homology in degrees >= 1.
ResolutionCheck is_cellular_resolution(const ComplexDesc& multigraded, int guard = 0);

}  // namespace polaris
