#pragma once

#include <optional>

#include "polaris/types.hpp"

namespace polaris {

// A based complex of Q-vector spaces with a fixed basis per homological
// degree, boundary maps one degree down, and optional multidegree labels.
// With a rank-1 degree-0 term whose incoming coefficients are all 1 this is a
// frame; the multidegree labels turn it into a multigraded complex whose
// boundary entry from u to v is (rational) * x^{mdeg(u) - mdeg(v)}.
struct ComplexDesc {
    int n = 0;
    std::vector<std::vector<Key>> basis;
    std::map<Key, Chain> boundary;
    std::map<Key, Exponent> multidegree;

    const Chain& boundary_of(const Key& k) const;
    std::optional<int> degree_of(const Key& k) const;
    std::vector<long> ranks() const;
};

inline Key augmentation_key(int n) { return Key{{}, zero(n)}; }

// The minimal free resolution shape of the d-th power of (x_1,...,x_n):
// degree 0 the augmentation, degree a+1 the standard basis of L^a_d,
// differential the Koszul map followed by straightening. Multidegree labels
// attached.
ComplexDesc build_l_complex(int n, int d);

// Subcomplex on basis elements whose multidegree divides m.
ComplexDesc restrict_leq_m(const ComplexDesc& c, const Exponent& m);

void validate_square_zero(const ComplexDesc& c);  // throws with a witness key

}  // namespace polaris
