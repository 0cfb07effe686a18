#include "polaris/complexes.hpp"

#include <algorithm>

#include "polaris/tableaux.hpp"

namespace polaris {

const Chain& ComplexDesc::boundary_of(const Key& k) const {
    static const Chain empty;
    auto it = boundary.find(k);
    return it == boundary.end() ? empty : it->second;
}

std::optional<int> ComplexDesc::degree_of(const Key& k) const {
    for (size_t h = 0; h < basis.size(); ++h)
        if (std::find(basis[h].begin(), basis[h].end(), k) != basis[h].end()) return (int)h;
    return std::nullopt;
}

std::vector<long> ComplexDesc::ranks() const {
    std::vector<long> r;
    for (const auto& b : basis) r.push_back((long)b.size());
    return r;
}

void validate_square_zero(const ComplexDesc& c) {
    for (const auto& [k, bd] : c.boundary) {
        Chain dd;
        for (const auto& [k2, v2] : bd)
            for (const auto& [k3, v3] : c.boundary_of(k2)) chain_add(dd, k3, v2 * v3);
        if (!dd.empty()) {
            throw std::runtime_error("boundary does not square to zero at a basis element of degree " +
                                     std::to_string(c.degree_of(k).value_or(-1)));
        }
    }
}

ComplexDesc build_l_complex(int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("build_l_complex: n, d must be >= 1");
    ComplexDesc cx;
    cx.n = n;
    Key aug = augmentation_key(n);
    cx.basis.push_back({aug});
    cx.multidegree[aug] = zero(n);

    for (int a = 0; a <= n - 1; ++a) {
        std::vector<Key> level = standard_basis(a, d, n);
        if (level.empty()) break;
        for (const Key& t : level) {
            cx.multidegree[t] = key_mdeg(t);
            Chain bd;
            if (a == 0) {
                bd.emplace(aug, Rational(1));
            } else {
                for (const auto& term : koszul_terms(t))
                    for (const auto& [sk, sv] : straighten(term.remainder))
                        chain_add(bd, sk, Rational(term.sign) * sv);
            }
            if (!bd.empty()) cx.boundary[t] = std::move(bd);
        }
        cx.basis.push_back(std::move(level));
    }
    return cx;
}

ComplexDesc restrict_leq_m(const ComplexDesc& c, const Exponent& m) {
    if (c.multidegree.empty())
        throw std::invalid_argument("restrict_leq_m: complex carries no multidegree labels");
    auto keep = [&](const Key& k) {
        auto it = c.multidegree.find(k);
        if (it == c.multidegree.end())
            throw std::invalid_argument("restrict_leq_m: missing multidegree label");
        return divides(it->second, m);
    };
    ComplexDesc out;
    out.n = c.n;
    for (const auto& level : c.basis) {
        std::vector<Key> kept;
        for (const Key& k : level)
            if (keep(k)) kept.push_back(k);
        out.basis.push_back(std::move(kept));
    }
    while (!out.basis.empty() && out.basis.back().empty()) out.basis.pop_back();
    for (const auto& level : out.basis)
        for (const Key& k : level) {
            out.multidegree[k] = c.multidegree.at(k);
            Chain bd;
            for (const auto& [k2, v2] : c.boundary_of(k)) {
                // a multigraded boundary only hits smaller multidegrees
                bd.emplace(k2, v2);
            }
            if (!bd.empty()) out.boundary[k] = std::move(bd);
        }
    return out;
}

}  // namespace polaris
