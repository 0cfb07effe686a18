#pragma once

#include "polaris/types.hpp"

namespace polaris {

// A hook tableau f_J (x) f^alpha is a Key with cols = J (strictly increasing)
// and row = alpha. It represents an element of wedge^{|J|} F (x) S_{|alpha|}(F)
// and, when |J| = a+1 and |alpha| = b-1, a spanning element of L^a_b(F).

void check_tableau(const Key& t);

// Standard iff the column corner is <= the smallest row index (vacuous for an
// empty row).
bool is_standard(const Key& t);

// Rewrites a tableau modulo the image of the longer kappa map as a rational
// combination of standard tableaux. Standard input returns itself.
Chain straighten(const Key& t);
Chain straighten(const Chain& c);

// All standard hook tableaux with column length a+1 and row weight b-1, in a
// fixed deterministic order. Count matches
// binom(n+b-1, a+b) * binom(a+b-1, a).
std::vector<Key> standard_basis(int a, int b, int n);

BigInt l_rank(int a, int b, int n);

// kappa(f_J (x) f^alpha) = sum_t (-1)^t f_{J \ j_t} (x) f_{j_t} f^alpha.
Chain kappa(const Key& t);
Chain kappa(const Chain& c);

// One Koszul term per column entry: (position sign, removed index, remaining
// tableau). The removed index carries the psi coefficient.
struct KoszulTerm {
    int sign;      // (-1)^t for the 0-based position t
    int index;     // removed column entry (0-based)
    Key remainder; // f_{J \ j_t} (x) f^alpha
};
std::vector<KoszulTerm> koszul_terms(const Key& t);

// kos^psi (x) 1 with scalar weights psi(f_i); weights must have one entry per
// index in [n].
Chain koszul(const Chain& c, const std::vector<Rational>& weights);

}  // namespace polaris
