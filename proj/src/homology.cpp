#include "polaris/homology.hpp"

#include <algorithm>
#include <cstdlib>

namespace polaris {

void validate_frame(const ComplexDesc& c) {
    if (c.basis.empty() || c.basis[0].size() != 1)
        throw std::invalid_argument("frame: degree 0 must have rank 1");
    if (c.basis.size() > 1) {
        const Key& gen = c.basis[0][0];
        for (const Key& k : c.basis[1]) {
            const Chain& bd = c.boundary_of(k);
            if (bd.size() != 1 || bd.begin()->first != gen || bd.begin()->second != 1)
                throw std::invalid_argument("frame: degree-1 boundary must be the unit augmentation");
        }
    }
}

ComplexDesc homogenize(const ComplexDesc& frame) {
    validate_frame(frame);
    ComplexDesc out = frame;
    out.multidegree.clear();
    const Key& gen = frame.basis[0][0];
    out.multidegree[gen] = zero(frame.n);
    if (frame.basis.size() > 1)
        for (const Key& k : frame.basis[1]) {
            auto it = frame.multidegree.find(k);
            if (it == frame.multidegree.end())
                throw std::invalid_argument("homogenize: generator multidegrees required");
            out.multidegree[k] = it->second;
        }
    for (size_t h = 2; h < frame.basis.size(); ++h)
        for (const Key& k : frame.basis[h]) {
            const Chain& bd = frame.boundary_of(k);
            if (bd.empty())
                throw std::invalid_argument("homogenize: empty boundary above degree 0");
            Exponent m = zero(frame.n);
            for (const auto& [k2, v2] : bd) m = join(m, out.multidegree.at(k2));
            out.multidegree[k] = m;
        }
    // divisibility of every boundary entry
    for (const auto& [k, bd] : out.boundary)
        for (const auto& [k2, v2] : bd)
            if (!divides(out.multidegree.at(k2), out.multidegree.at(k)))
                throw std::logic_error("homogenize: boundary entry violates divisibility");
    return out;
}

std::vector<long> rational_homology(const ComplexDesc& c) {
    validate_square_zero(c);
    size_t levels = c.basis.size();
    std::vector<long> rank_d(levels + 1, 0);  // rank of boundary from degree h
    for (size_t h = 1; h < levels; ++h) {
        std::map<Key, int> idx;
        for (size_t t = 0; t < c.basis[h - 1].size(); ++t) idx[c.basis[h - 1][t]] = (int)t;
        std::vector<Chain> cols;
        for (const Key& k : c.basis[h]) cols.push_back(c.boundary_of(k));
        rank_d[h] = matrix_rank(chains_to_matrix(cols, idx));
    }
    std::vector<long> hom(levels, 0);
    for (size_t h = 0; h < levels; ++h)
        hom[h] = (long)c.basis[h].size() - rank_d[h] - (h + 1 < levels ? rank_d[h + 1] : 0);
    return hom;
}

int generator_guard_default() {
    if (const char* env = std::getenv("POLARIS_GUARD_GENERATORS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 20;
}

std::vector<Exponent> lcm_lattice(const std::vector<Exponent>& gens, int guard) {
    if (guard <= 0) guard = generator_guard_default();
    if ((int)gens.size() > guard)
        throw GuardError("lcm_lattice: generator count " + std::to_string(gens.size()) +
                         " exceeds guard " + std::to_string(guard));
    std::set<Exponent> lattice(gens.begin(), gens.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Exponent> snapshot(lattice.begin(), lattice.end());
        for (const Exponent& m : snapshot)
            for (const Exponent& g : gens) {
                Exponent j = join(m, g);
                if (lattice.insert(j).second) grew = true;
            }
    }
    std::vector<Exponent> out(lattice.begin(), lattice.end());
    std::sort(out.begin(), out.end(), [](const Exponent& a, const Exponent& b) {
        int da = degree(a), db = degree(b);
        if (da != db) return da < db;
        return a < b;
    });
    return out;
}

ResolutionCheck is_cellular_resolution(const ComplexDesc& multigraded, int guard) {
    if (multigraded.basis.size() < 2)
        throw std::invalid_argument("is_cellular_resolution: no generators");
    std::vector<Exponent> gens;
    for (const Key& k : multigraded.basis[1]) gens.push_back(multigraded.multidegree.at(k));
    ResolutionCheck res;
    for (const Exponent& m : lcm_lattice(gens, guard)) {
        ComplexDesc strand = restrict_leq_m(multigraded, m);
        std::vector<long> hom = rational_homology(strand);
        for (size_t h = 1; h < hom.size(); ++h)
            if (hom[h] != 0) {
                res.ok = false;
                res.witness_multidegree = m;
                res.homology_degree = (int)h;
                res.dimension = hom[h];
                return res;
            }
    }
    return res;
}

}  // namespace polaris
