#include "polaris/polarization.hpp"

#include <algorithm>
#include <functional>

#include "polaris/homology.hpp"
#include "polaris/hypersimplex.hpp"
#include "polaris/linalg.hpp"
#include "polaris/morse.hpp"
#include "polaris/oracle.hpp"
#include "polaris/tableaux.hpp"

namespace polaris {

std::vector<Exponent> restricted_generators(int n, int d, const std::optional<Exponent>& u) {
    std::vector<Exponent> out;
    for (const Exponent& a : enumerate_points(n, d))
        if (!u || divides(a, *u)) out.push_back(a);
    return out;
}

std::optional<std::string> validate_family(const IsotoneFamily& f) {
    if (f.n < 1 || f.d < 1) return "family: n, d must be >= 1";
    auto points = restricted_generators(f.n, f.d, f.u);
    if (f.tables.size() != points.size()) return "family: wrong number of table rows";
    SetMask full = (f.d >= 32) ? ~SetMask(0) : ((SetMask(1) << f.d) - 1);
    for (const Exponent& a : points) {
        auto it = f.tables.find(a);
        if (it == f.tables.end()) return "family: missing table row";
        const auto& masks = it->second;
        if ((int)masks.size() != f.n) return "family: row must have one set per index";
        for (int i = 0; i < f.n; ++i) {
            if (masks[i] & ~full) return "family: set not contained in [d]";
            if (mask_rank(masks[i]) != a[i]) return "family: rank violation";
            if (f.u && a[i] > (*f.u)[i]) return "family: point exceeds bound";
        }
        // isotone along covers b = a + e_i - e_t
        for (int i = 0; i < f.n; ++i)
            for (int t = 0; t < f.n; ++t) {
                if (t == i || a[t] == 0) continue;
                Exponent b = plus(plus(a, i), t, -1);
                auto itb = f.tables.find(b);
                if (itb == f.tables.end()) continue;  // outside the bound
                if ((masks[i] & itb->second[i]) != masks[i]) return "family: not isotone";
            }
    }
    return std::nullopt;
}

IsotoneFamily standard_family(int n, int d, const std::optional<Exponent>& u) {
    IsotoneFamily f;
    f.n = n;
    f.d = d;
    f.u = u;
    for (const Exponent& a : restricted_generators(n, d, u)) {
        std::vector<SetMask> masks(n);
        for (int i = 0; i < n; ++i) masks[i] = (SetMask(1) << a[i]) - 1;
        f.tables.emplace(a, std::move(masks));
    }
    return f;
}

MonomialIdealTilde realize_ideal(const IsotoneFamily& f) {
    if (auto err = validate_family(f)) throw std::invalid_argument(*err);
    MonomialIdealTilde ideal;
    ideal.n = f.n;
    ideal.d = f.d;
    for (const auto& [a, masks] : f.tables) ideal.gens.emplace_back(a, masks);
    return ideal;
}

bool depolarization_check(const IsotoneFamily& f) {
    MonomialIdealTilde ideal = realize_ideal(f);
    std::set<Exponent> depolarized;
    for (const auto& [a, masks] : ideal.gens) {
        Exponent e(f.n, 0);
        for (int i = 0; i < f.n; ++i) e[i] = mask_rank(masks[i]);
        if (!depolarized.insert(e).second) return false;
    }
    auto gens = restricted_generators(f.n, f.d, f.u);
    return depolarized == std::set<Exponent>(gens.begin(), gens.end());
}

SyzygyGraph ls_edges(const IsotoneFamily& f) {
    if (auto err = validate_family(f)) throw std::invalid_argument(*err);
    SyzygyGraph g{f.n, f.d, {}};
    for (const Exponent& c : enumerate_points(f.n, f.d + 1)) {
        auto sup = support(c);
        for (size_t s = 0; s < sup.size(); ++s)
            for (size_t t = s + 1; t < sup.size(); ++t) {
                int i = sup[s], j = sup[t];
                Exponent va = plus(c, i, -1), vb = plus(c, j, -1);
                auto ita = f.tables.find(va);
                auto itb = f.tables.find(vb);
                if (ita == f.tables.end() || itb == f.tables.end()) continue;
                bool table_eq = true;
                for (int p = 0; p < f.n; ++p) {
                    if (p == i || p == j) continue;
                    if (ita->second[p] != itb->second[p]) {
                        table_eq = false;
                        break;
                    }
                }
                // common-factor characterization: gcd degree d-1
                int shared = 0;
                for (int p = 0; p < f.n; ++p)
                    shared += mask_rank(ita->second[p] & itb->second[p]);
                bool factor_eq = (shared == f.d - 1);
                if (table_eq != factor_eq)
                    throw std::logic_error("ls_edges: characterizations disagree");
                if (table_eq) g.edges.insert(make_edge(c, i, j));
            }
    }
    return g;
}

SpanCheck spanning_tree_check(const SyzygyGraph& g, const std::optional<Exponent>& u) {
    SpanCheck res;
    for (const Exponent& c : enumerate_points(g.n, g.d + 1)) {
        std::vector<int> verts;
        for (int r : support(c))
            if (!u || divides(plus(c, r, -1), *u)) verts.push_back(r);
        if (u && !divides(c, *u)) continue;  // at most one vertex survives
        if (verts.size() <= 1) continue;
        // union-find over the surviving vertices of D(c)
        std::map<int, int> comp;
        for (int r : verts) comp[r] = r;
        std::function<int(int)> find = [&](int x) {
            return comp[x] == x ? x : comp[x] = find(comp[x]);
        };
        for (size_t s = 0; s < verts.size(); ++s)
            for (size_t t = s + 1; t < verts.size(); ++t)
                if (g.has(make_edge(c, verts[s], verts[t])))
                    comp[find(verts[s])] = find(verts[t]);
        int root = find(verts[0]);
        for (int r : verts)
            if (find(r) != root) {
                res.ok = false;
                res.witness_apex = c;
                return res;
            }
    }
    return res;
}

bool r_ls_check(const IsotoneFamily& f, const Exponent& c, const std::vector<int>& R) {
    for (int r : R)
        if (r < 0 || r >= f.n || c[r] < 1)
            throw std::invalid_argument("r_ls_check: R not contained in Supp(c)");
    std::vector<int> verts = R;
    std::sort(verts.begin(), verts.end());
    std::map<int, int> comp;
    for (int r : verts) comp[r] = r;
    std::function<int(int)> find = [&](int x) {
        return comp[x] == x ? x : comp[x] = find(comp[x]);
    };
    for (size_t s = 0; s < verts.size(); ++s)
        for (size_t t = s + 1; t < verts.size(); ++t) {
            int i = verts[s], j = verts[t];
            const auto& ma = f.at(plus(c, i, -1));
            const auto& mb = f.at(plus(c, j, -1));
            bool eq = true;
            for (int p : verts) {
                if (p == i || p == j) continue;
                if (ma[p] != mb[p]) {
                    eq = false;
                    break;
                }
            }
            if (eq) comp[find(i)] = find(j);
        }
    for (int r : verts)
        if (find(r) != find(verts[0])) return false;
    return true;
}

Exponent dict_psi(const Exponent& a) { return a; }

Key dict_omega(const Exponent& c, const std::vector<int>& R) {
    std::vector<int> cols = R;
    std::sort(cols.begin(), cols.end());
    Exponent row = c;
    for (int r : cols) {
        if (row[r] < 1) throw std::invalid_argument("dict_omega: R not contained in Supp(c)");
        row[r] -= 1;
    }
    return Key{cols, row};
}

Key dict_theta(const Exponent& c, int i, int j) {
    if (i > j) std::swap(i, j);
    Exponent row = plus(plus(c, i, -1), j, -1);
    if (!nonnegative(row)) throw std::invalid_argument("dict_theta: indices not in support");
    return Key{{i, j}, row};
}

Key dict_theta(const DownEdge& e) { return dict_theta(e.apex, e.i, e.j); }

bool tab_spanning_check(const IsotoneFamily& f) {
    SyzygyGraph g = ls_edges(f);
    std::vector<Key> basis = standard_basis(1, f.d, f.n);
    if (f.u) {
        std::vector<Key> kept;
        for (const Key& t : basis)
            if (divides(key_mdeg(t), *f.u)) kept.push_back(t);
        basis = std::move(kept);
    }
    std::map<Key, int> idx;
    for (size_t t = 0; t < basis.size(); ++t) idx[basis[t]] = (int)t;
    std::vector<Chain> cols;
    for (const DownEdge& e : g.edges) cols.push_back(straighten(dict_theta(e)));
    return matrix_rank(chains_to_matrix(cols, idx)) == (long)basis.size();
}

PolarizationVerdict is_polarization(const IsotoneFamily& f, bool cross_check, int guard) {
    if (auto err = validate_family(f)) throw std::invalid_argument(*err);
    PolarizationVerdict v;
    v.spanning = spanning_tree_check(ls_edges(f), f.u).ok;
    if (cross_check) {
        v.tab_span = tab_spanning_check(f);
        v.oracle = verify_polarization_bruteforce(f, guard);
        if (*v.tab_span != v.spanning || *v.oracle != v.spanning)
            throw CriterionDisagreement(
                "polarization criteria disagree: spanning=" + std::to_string(v.spanning) +
                " tab=" + std::to_string(*v.tab_span) + " oracle=" + std::to_string(*v.oracle));
    }
    return v;
}

RestrictedSetup restricted_power_setup(int n, int d, const Exponent& u) {
    RestrictedSetup setup;
    setup.generators = restricted_generators(n, d, u);
    if (setup.generators.empty()) {
        setup.empty = true;
        return setup;
    }
    setup.hypersimplex = hypersimplex_complex(n, d, u);
    Matching full = l_matching(n, d);
    Matching restricted;
    for (const auto& [hi, lo] : full.pairs)
        if (divides(key_mdeg(hi), u)) restricted.pairs.emplace_back(hi, lo);
    setup.morse = morse_complex(setup.hypersimplex, restricted);
    for (int a = 0; a <= n - 1; ++a) {
        long count = 0;
        for (const Key& t : standard_basis(a, d, n))
            if (divides(key_mdeg(t), u)) {
                setup.l_basis.push_back(t);
                ++count;
            }
        setup.l_ranks.push_back(count);
    }
    while (!setup.l_ranks.empty() && setup.l_ranks.back() == 0) setup.l_ranks.pop_back();
    return setup;
}

IsotoneFamily random_family(int n, int d, std::mt19937_64& rng,
                            const std::optional<Exponent>& u) {
    auto points = restricted_generators(n, d, u);
    std::vector<std::vector<const Exponent*>> by_rank(d + 1);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        IsotoneFamily f;
        f.n = n;
        f.d = d;
        f.u = u;
        for (const Exponent& a : points) f.tables[a] = std::vector<SetMask>(n, 0);
        bool dead = false;
        for (int i = 0; i < n && !dead; ++i) {
            for (auto& level : by_rank) level.clear();
            for (const Exponent& a : points) by_rank[a[i]].push_back(&a);
            for (int k = 1; k <= d && !dead; ++k)
                for (const Exponent* ap : by_rank[k]) {
                    SetMask need = 0;
                    for (int t = 0; t < n; ++t) {
                        if (t == i) continue;
                        Exponent child = plus(plus(*ap, t), i, -1);
                        auto it = f.tables.find(child);
                        if (it != f.tables.end()) need |= it->second[i];
                    }
                    if (mask_rank(need) > k) {
                        dead = true;
                        break;
                    }
                    std::vector<int> free;
                    for (int b = 0; b < d; ++b)
                        if (!(need & (SetMask(1) << b))) free.push_back(b);
                    std::shuffle(free.begin(), free.end(), rng);
                    SetMask mask = need;
                    for (int t = 0; t < k - mask_rank(need); ++t)
                        mask |= SetMask(1) << free[t];
                    f.tables[*ap][i] = mask;
                }
        }
        if (!dead && !validate_family(f)) return f;
    }
    throw std::runtime_error("random_family: sampling failed");
}

}  // namespace polaris
