#include "polaris/oracle.hpp"

#include <algorithm>

#include "polaris/homology.hpp"
#include "polaris/linalg.hpp"
#include "polaris/tableaux.hpp"

namespace polaris {

namespace {

// faces of the complex {sigma <= V : lcm(sigma) strictly divides m}, grouped
// by cardinality; prunes subtrees once the running join reaches m.
void collect_faces(const std::vector<Exponent>& verts, const Exponent& m, size_t next,
                   uint32_t sigma, Exponent& cur, std::vector<std::vector<uint32_t>>& out) {
    if (out.size() <= (size_t)__builtin_popcount(sigma))
        out.resize(__builtin_popcount(sigma) + 1);
    out[__builtin_popcount(sigma)].push_back(sigma);
    for (size_t t = next; t < verts.size(); ++t) {
        Exponent joined = join(cur, verts[t]);
        if (joined == m) continue;  // supersets stay at m
        std::swap(cur, joined);
        collect_faces(verts, m, t + 1, sigma | (uint32_t(1) << t), cur, out);
        std::swap(cur, joined);
    }
}

// true if some vertex is a cone point of the complex above (which is then
// contractible): g works iff for every coordinate class A_v there is an A_w
// containing it with g in A_w.
bool has_cone_point(const std::vector<Exponent>& verts, const Exponent& m) {
    std::vector<uint32_t> avail;  // A_v as vertex masks
    for (size_t v = 0; v < m.size(); ++v) {
        if (m[v] == 0) continue;
        uint32_t mask = 0;
        for (size_t t = 0; t < verts.size(); ++t)
            if (verts[t][v] < m[v]) mask |= uint32_t(1) << t;
        avail.push_back(mask);
    }
    for (size_t g = 0; g < verts.size(); ++g) {
        uint32_t gbit = uint32_t(1) << g;
        bool cone = true;
        for (uint32_t a : avail) {
            bool covered = false;
            for (uint32_t w : avail)
                if ((w & gbit) && (a & ~w) == 0) {
                    covered = true;
                    break;
                }
            if (!covered) {
                cone = false;
                break;
            }
        }
        if (cone) return true;
    }
    return false;
}

std::vector<long> reduced_homology(const std::vector<std::vector<uint32_t>>& faces) {
    size_t levels = faces.size();  // cardinalities 0..levels-1
    std::vector<long> rank_d(levels + 1, 0);
    for (size_t c = 1; c < levels; ++c) {
        std::map<uint32_t, int> idx;
        for (size_t t = 0; t < faces[c - 1].size(); ++t) idx[faces[c - 1][t]] = (int)t;
        std::vector<std::vector<BigInt>> mat(faces[c - 1].size(),
                                             std::vector<BigInt>(faces[c].size(), 0));
        for (size_t col = 0; col < faces[c].size(); ++col) {
            uint32_t sigma = faces[c][col];
            int pos = 0;
            for (uint32_t bits = sigma; bits; bits &= bits - 1, ++pos) {
                uint32_t low = bits & -bits;
                mat[idx.at(sigma ^ low)][col] = (pos % 2 == 0) ? 1 : -1;
            }
        }
        rank_d[c] = matrix_rank_int(std::move(mat));
    }
    std::vector<long> hom(levels, 0);  // hom[c] = ~H_{c-1}
    for (size_t c = 0; c < levels; ++c)
        hom[c] = (long)faces[c].size() - rank_d[c] - (c + 1 <= levels - 1 ? rank_d[c + 1] : 0);
    return hom;
}

}  // namespace

BettiTable taylor_betti(const std::vector<Exponent>& gens, int guard) {
    if (guard <= 0) guard = generator_guard_default();
    if ((int)gens.size() > guard)
        throw GuardError("taylor_betti: generator count " + std::to_string(gens.size()) +
                         " exceeds guard " + std::to_string(guard));
    BettiTable table;
    for (const Exponent& m : lcm_lattice(gens, guard)) {
        std::vector<Exponent> verts;
        for (const Exponent& g : gens)
            if (divides(g, m)) verts.push_back(g);
        if (verts.size() > 30) throw GuardError("taylor_betti: strand too large");
        if (has_cone_point(verts, m)) continue;
        std::vector<std::vector<uint32_t>> faces;
        Exponent cur = zero((int)m.size());
        collect_faces(verts, m, 0, 0, cur, faces);
        std::vector<long> hom = reduced_homology(faces);
        std::vector<long> betti;  // beta_{i,m} = ~H_{i-1}
        bool any = false;
        for (size_t i = 0; i < hom.size(); ++i) {
            betti.push_back(hom[i]);
            if (hom[i] != 0) any = true;
        }
        if (!any) continue;
        while (!betti.empty() && betti.back() == 0) betti.pop_back();
        table.by_multidegree[m] = betti;
        for (size_t i = 0; i < betti.size(); ++i) {
            if (table.total.size() <= i) table.total.resize(i + 1, 0);
            table.total[i] += betti[i];
        }
    }
    return table;
}

BettiTable taylor_betti(const MonomialIdealTilde& ideal, int guard) {
    std::vector<Exponent> gens;
    for (const auto& [a, masks] : ideal.gens) {
        Exponent e(ideal.n * ideal.d, 0);
        for (int i = 0; i < ideal.n; ++i)
            for (int j = 0; j < ideal.d; ++j)
                if (masks[i] & (SetMask(1) << j)) e[i * ideal.d + j] = 1;
        gens.push_back(std::move(e));
    }
    return taylor_betti(gens, guard);
}

bool verify_polarization_bruteforce(const IsotoneFamily& f, int guard) {
    if (!depolarization_check(f)) return false;
    BettiTable betti = taylor_betti(realize_ideal(f), guard);
    std::vector<long> target;
    for (int a = 0; a <= f.n - 1; ++a) {
        long count = 0;
        if (f.u) {
            for (const Key& t : standard_basis(a, f.d, f.n))
                if (divides(key_mdeg(t), *f.u)) ++count;
        } else {
            count = (long)l_rank(a, f.d, f.n);
        }
        target.push_back(count);
    }
    while (!target.empty() && target.back() == 0) target.pop_back();
    std::vector<long> got = betti.total;
    while (!got.empty() && got.back() == 0) got.pop_back();
    return got == target;
}

namespace {

struct Slot {
    int i;
    Exponent point;
    std::vector<int> children;  // indices into the point list
};

void masks_of_rank(int d, int k, SetMask need, std::vector<SetMask>& out) {
    out.clear();
    for (SetMask m = 0; m < (SetMask(1) << d); ++m)
        if (mask_rank(m) == k && (m & need) == need) out.push_back(m);
    std::sort(out.begin(), out.end());
}

}  // namespace

Enumeration enumerate_polarizations(int n, int d, const std::optional<Exponent>& u,
                                    bool by_family, int guard, bool verify) {
    bool desk = (n == 2 && d <= 4) || (n == 3 && d <= 3) || (n == 4 && d == 2);
    if (!desk)
        throw GuardError("enumerate_polarizations: (n,d) outside the desk range");

    Enumeration result;
    result.n = n;
    result.d = d;
    result.u = u;
    result.by_family = by_family;

    std::vector<Exponent> points = restricted_generators(n, d, u);
    std::map<Exponent, int> point_index;
    for (size_t t = 0; t < points.size(); ++t) point_index[points[t]] = (int)t;

    // slots in canonical order: index i, then rank ascending, then point order
    std::vector<Slot> slots;
    for (int i = 0; i < n; ++i)
        for (int k = 1; k <= d; ++k)
            for (const Exponent& a : points) {
                if (a[i] != k) continue;
                Slot s;
                s.i = i;
                s.point = a;
                for (int t = 0; t < n; ++t) {
                    if (t == i) continue;
                    Exponent child = plus(plus(a, t), i, -1);
                    auto it = point_index.find(child);
                    if (it != point_index.end()) s.children.push_back(it->second);
                }
                slots.push_back(std::move(s));
            }

    IsotoneFamily fam;
    fam.n = n;
    fam.d = d;
    fam.u = u;
    for (const Exponent& a : points) fam.tables[a] = std::vector<SetMask>(n, 0);

    std::map<std::set<DownEdge>, size_t> class_of;
    std::vector<SetMask> choice_buf;

    auto emit = [&]() {
        SyzygyGraph g = ls_edges(fam);
        if (!spanning_tree_check(g, u).ok) return;
        result.total_families += 1;
        auto it = class_of.find(g.edges);
        if (it == class_of.end()) {
            EnumeratedClass cls;
            cls.graph = g;
            cls.family = fam;
            cls.family_count = 1;
            class_of.emplace(g.edges, result.classes.size());
            result.classes.push_back(std::move(cls));
        } else {
            result.classes[it->second].family_count += 1;
        }
        if (by_family) result.families.push_back(fam);
    };

    auto dfs = [&](auto&& self, size_t slot) -> void {
        if (slot == slots.size()) {
            emit();
            return;
        }
        const Slot& s = slots[slot];
        SetMask need = 0;
        for (int child : s.children) need |= fam.tables.at(points[child])[s.i];
        int k = s.point[s.i];
        if (mask_rank(need) > k) return;
        std::vector<SetMask> options;
        masks_of_rank(d, k, need, options);
        for (SetMask m : options) {
            fam.tables[s.point][s.i] = m;
            self(self, slot + 1);
        }
        fam.tables[s.point][s.i] = 0;
    };
    dfs(dfs, 0);

    if (verify)
        for (auto& cls : result.classes)
            cls.oracle_verified = verify_polarization_bruteforce(cls.family, guard);
    return result;
}

}  // namespace polaris
