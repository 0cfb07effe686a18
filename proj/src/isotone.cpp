#include "polaris/isotone.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace polaris {

namespace {

std::string point_str(const Exponent& a) {
    std::ostringstream os;
    os << "(";
    for (size_t t = 0; t < a.size(); ++t) os << (t ? "," : "") << a[t];
    os << ")";
    return os.str();
}

// children of b in (Delta^Z, >=_i): b - e_i + e_t for t != i
std::vector<Exponent> children_of(const Exponent& b, int i) {
    std::vector<Exponent> out;
    if (b[i] == 0) return out;
    for (int t = 0; t < (int)b.size(); ++t)
        if (t != i) out.push_back(plus(plus(b, i, -1), t));
    return out;
}

// parents of a: a + e_i - e_t for t in Supp(a) \ {i}
std::vector<Exponent> parents_of(const Exponent& a, int i) {
    std::vector<Exponent> out;
    for (int t = 0; t < (int)a.size(); ++t)
        if (t != i && a[t] > 0) out.push_back(plus(plus(a, i), t, -1));
    return out;
}

std::vector<std::vector<int>> components(const SyzygyGraph& g,
                                         const std::vector<Exponent>& verts) {
    std::vector<int> comp(verts.size(), -1);
    std::vector<std::vector<int>> out;
    for (size_t s = 0; s < verts.size(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{(int)s}, members;
        comp[s] = (int)out.size();
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            members.push_back(x);
            for (size_t t = 0; t < verts.size(); ++t)
                if (comp[t] < 0 && g.adjacent(verts[x], verts[t])) {
                    comp[t] = (int)out.size();
                    stack.push_back((int)t);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

bool clique(const SyzygyGraph& g, const std::vector<Exponent>& verts,
            const std::vector<int>& members) {
    for (size_t s = 0; s < members.size(); ++s)
        for (size_t t = s + 1; t < members.size(); ++t)
            if (!g.adjacent(verts[members[s]], verts[members[t]])) return false;
    return true;
}

}  // namespace

std::vector<Diagnostic> check_conditions(const SyzygyGraph& g, int i) {
    if (g.n < 2) throw std::invalid_argument("check_conditions: n must be >= 2");
    std::vector<Diagnostic> diags;
    auto points = enumerate_points(g.n, g.d);

    // BOUNDARY: every edge on a two-index boundary line must be present
    for (int s = 0; s < g.n; ++s)
        for (int t = s + 1; t < g.n; ++t)
            for (int k = 1; k <= g.d; ++k) {
                Exponent apex = zero(g.n);
                apex[s] = k;
                apex[t] = g.d - k + 1;
                DownEdge e = make_edge(apex, s, t);
                if (!g.has(e)) {
                    Diagnostic dg;
                    dg.condition = "BOUNDARY";
                    dg.human = "boundary edge missing at apex " + point_str(apex);
                    dg.witness_edges.push_back(e);
                    diags.push_back(std::move(dg));
                }
            }

    // G1: children of b form at most rank(b) components, each a clique
    for (const Exponent& b : points) {
        if (b[i] == 0) continue;
        auto ch = children_of(b, i);
        auto comps = components(g, ch);
        if ((int)comps.size() > b[i]) {
            Diagnostic dg;
            dg.condition = "G1";
            dg.human = "children of " + point_str(b) + " split into " +
                       std::to_string(comps.size()) + " classes, rank is " +
                       std::to_string(b[i]);
            dg.witness_points.push_back(b);
            diags.push_back(std::move(dg));
        }
        for (const auto& members : comps)
            if (!clique(g, ch, members)) {
                Diagnostic dg;
                dg.condition = "G1";
                dg.human = "a syzygy class below " + point_str(b) + " is not complete";
                dg.witness_points.push_back(b);
                diags.push_back(std::move(dg));
            }
    }

    // G2: no element has three pairwise non-adjacent parents (any two parents
    // of a common element already share a parent)
    for (const Exponent& a : points) {
        auto par = parents_of(a, i);
        for (size_t x = 0; x < par.size(); ++x)
            for (size_t y = x + 1; y < par.size(); ++y)
                for (size_t z = y + 1; z < par.size(); ++z)
                    if (!g.adjacent(par[x], par[y]) && !g.adjacent(par[x], par[z]) &&
                        !g.adjacent(par[y], par[z])) {
                        Diagnostic dg;
                        dg.condition = "G2";
                        dg.human = "three pairwise separated parents above " + point_str(a);
                        dg.witness_points = {a, par[x], par[y], par[z]};
                        diags.push_back(std::move(dg));
                    }
    }

    // G3, downward: for children of q in two different classes, the common
    // children across the classes carry one forced label, so they must form a
    // clique. Dually for the parents of a common element.
    auto g3_scan = [&](const std::vector<Exponent>& verts, const Exponent& anchor,
                       bool down) {
        auto comps = components(g, verts);
        for (size_t x = 0; x < comps.size(); ++x)
            for (size_t y = x + 1; y < comps.size(); ++y) {
                std::set<Exponent> forced;
                for (int mx : comps[x])
                    for (int my : comps[y]) {
                        const Exponent& f = verts[mx];
                        const Exponent& h = verts[my];
                        // f - h = e_s - e_t with s,t != i
                        int s = -1, t = -1;
                        for (int w = 0; w < g.n; ++w) {
                            if (f[w] == h[w] + 1) s = w;
                            if (f[w] + 1 == h[w]) t = w;
                        }
                        if (s < 0 || t < 0) continue;
                        // common child f - e_i + e_t, common parent f + e_i - e_s
                        Exponent common =
                            down ? plus(plus(f, i, -1), t) : plus(plus(f, i), s, -1);
                        if (!nonnegative(common)) continue;
                        forced.insert(common);
                    }
                std::vector<Exponent> fv(forced.begin(), forced.end());
                for (size_t s = 0; s < fv.size(); ++s)
                    for (size_t t = s + 1; t < fv.size(); ++t)
                        if (!g.adjacent(fv[s], fv[t])) {
                            Diagnostic dg;
                            dg.condition = "G3";
                            dg.human = std::string(down ? "common children" : "common parents") +
                                       " across two syzygy classes at " + point_str(anchor) +
                                       " are separated";
                            dg.witness_points = {anchor, fv[s], fv[t]};
                            diags.push_back(std::move(dg));
                        }
            }
    };
    for (const Exponent& q : points) {
        if (q[i] >= 1) g3_scan(children_of(q, i), q, true);
        g3_scan(parents_of(q, i), q, false);
    }

    // G4: f ~ g with common child x; a child of f, b child of g; if x ~ a and
    // a ~ b then x ~ b
    for (const Exponent& f : points) {
        if (f[i] == 0) continue;
        for (const Exponent& gg : points) {
            if (f == gg || gg[i] == 0 || !g.adjacent(f, gg)) continue;
            int s = -1, t = -1;
            for (int w = 0; w < g.n; ++w) {
                if (f[w] == gg[w] + 1) s = w;
                if (f[w] + 1 == gg[w]) t = w;
            }
            if (s == i || t == i) continue;
            Exponent x = plus(plus(f, i, -1), t);  // common child of f and g
            for (const Exponent& a : children_of(f, i)) {
                if (a == x || !g.adjacent(x, a)) continue;
                for (const Exponent& b : children_of(gg, i)) {
                    if (b == x || b == a || !g.adjacent(a, b)) continue;
                    if (!g.adjacent(x, b)) {
                        Diagnostic dg;
                        dg.condition = "G4";
                        dg.human = "broken square below the pair " + point_str(f) + " ~ " +
                                   point_str(gg);
                        dg.witness_points = {f, gg, x, a, b};
                        diags.push_back(std::move(dg));
                    }
                }
            }
        }
    }
    return diags;
}

std::vector<Diagnostic> check_conditions_all(const SyzygyGraph& g) {
    std::vector<Diagnostic> out;
    for (int i = 0; i < g.n; ++i) {
        auto d = check_conditions(g, i);
        out.insert(out.end(), d.begin(), d.end());
    }
    // dedupe identical diagnostics (BOUNDARY repeats across indices)
    std::sort(out.begin(), out.end(), [](const Diagnostic& a, const Diagnostic& b) {
        return std::tie(a.condition, a.human) < std::tie(b.condition, b.human);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Diagnostic& a, const Diagnostic& b) {
                              return a.condition == b.condition && a.human == b.human;
                          }),
              out.end());
    return out;
}

InferenceResult infer_family(const SyzygyGraph& g) {
    auto diags = check_conditions_all(g);
    if (!diags.empty())
        throw std::invalid_argument("infer_family: graph fails condition " + diags[0].condition +
                                    " (" + diags[0].human + ")");
    InferenceResult res;
    res.family.n = g.n;
    res.family.d = g.d;
    for (const Exponent& a : enumerate_points(g.n, g.d))
        res.family.tables[a] = std::vector<SetMask>(g.n, 0);

    for (int i = 0; i < g.n; ++i) {
        auto chains = chain_decomposition(g.n, g.d, i);
        std::map<Exponent, std::vector<int>> word_of;  // p -> word
        for (const ChainData& cd : chains) {
            std::vector<int> word;
            int r = degree(cd.id.p);
            if (r == 0) {
                word.resize(g.d);
                for (int t = 0; t < g.d; ++t) word[t] = t;
            } else {
                int m = min_support(cd.id.p);
                Exponent prev_p = plus(cd.id.p, m, -1);
                word = word_of.at(prev_p);
                ChainId prev{i, prev_p};
                for (int k = 1; k <= g.d - r; ++k) {
                    Exponent here = chain_element(cd.id, g.d, k);
                    Exponent there = chain_element(prev, g.d, k);
                    if (!g.adjacent(here, there)) std::swap(word[k - 1], word[k]);
                }
            }
            word_of[cd.id.p] = word;
            res.words[i].emplace_back(cd.id, word);
            // label the proper chain by the word prefixes
            for (size_t k = 0; k < cd.elements.size(); ++k) {
                SetMask mask = 0;
                for (size_t t = 0; t < k; ++t) mask |= SetMask(1) << word[t];
                res.family.tables[cd.elements[k]][i] = mask;
            }
        }
    }
    if (auto err = validate_family(res.family))
        throw std::logic_error("infer_family: produced an invalid family: " + *err);
    return res;
}

StarCheck verify_star(const SyzygyGraph& g, const IsotoneFamily& f) {
    StarCheck res;
    SyzygyGraph recomputed = ls_edges(f);
    for (const DownEdge& e : recomputed.edges)
        if (!g.has(e)) {
            res.ok = false;
            res.witness = e;
            return res;
        }
    for (const DownEdge& e : g.edges)
        if (!recomputed.has(e)) {
            res.ok = false;
            res.witness = e;
            return res;
        }
    return res;
}

SyzygyGraph random_passing_graph(int n, int d, std::mt19937_64& rng) {
    SyzygyGraph full = full_skeleton(n, d);
    std::vector<DownEdge> removable;
    for (const DownEdge& e : full.edges)
        if ((int)support(e.apex).size() > 2) removable.push_back(e);
    std::uniform_int_distribution<int> coin(0, 3);
    for (int attempt = 0; attempt < 2000; ++attempt) {
        SyzygyGraph g = full;
        for (const DownEdge& e : removable)
            if (coin(rng) == 0) g.edges.erase(e);
        if (check_conditions_all(g).empty()) return g;
    }
    throw std::runtime_error("random_passing_graph: sampling failed");
}

}  // namespace polaris
