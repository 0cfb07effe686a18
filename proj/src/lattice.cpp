#include "polaris/lattice.hpp"

#include <algorithm>

namespace polaris {

static void enumerate_rec(int n, int d, Exponent& cur, int pos, std::vector<Exponent>& out) {
    if (pos == n - 1) {
        cur[pos] = d;
        out.push_back(cur);
        return;
    }
    for (int v = d; v >= 0; --v) {
        cur[pos] = v;
        enumerate_rec(n, d - v, cur, pos + 1, out);
    }
    cur[pos] = 0;
}

std::vector<Exponent> enumerate_points(int n, int d) {
    if (n < 1) throw std::invalid_argument("enumerate_points: n must be >= 1");
    if (d < 0) throw std::invalid_argument("enumerate_points: d must be >= 0");
    std::vector<Exponent> out;
    Exponent cur(n, 0);
    enumerate_rec(n, d, cur, 0, out);
    return out;
}

bool leq_i(const Exponent& a, const Exponent& b, int i) {
    if (a.size() != b.size()) throw std::invalid_argument("leq_i: dimension mismatch");
    if (degree(a) != degree(b)) throw std::invalid_argument("leq_i: degree mismatch");
    if (i < 0 || i >= (int)a.size()) throw std::invalid_argument("leq_i: index out of range");
    if (b[i] < a[i]) return false;
    for (int t = 0; t < (int)a.size(); ++t)
        if (t != i && b[t] > a[t]) return false;
    return true;
}

DownEdge make_edge(const Exponent& apex, int i, int j) {
    if (i > j) std::swap(i, j);
    if (i == j) throw std::invalid_argument("make_edge: i == j");
    if (apex[i] < 1 || apex[j] < 1) throw std::invalid_argument("make_edge: indices not in support");
    return DownEdge{apex, i, j};
}

std::optional<DownEdge> edge_between(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size() || degree(a) != degree(b)) return std::nullopt;
    int up = -1, down = -1;
    for (int t = 0; t < (int)a.size(); ++t) {
        int delta = b[t] - a[t];
        if (delta == 0) continue;
        if (delta == 1 && up < 0)
            up = t;
        else if (delta == -1 && down < 0)
            down = t;
        else
            return std::nullopt;
    }
    if (up < 0 || down < 0) return std::nullopt;
    Exponent apex = plus(a, up);  // = b + e_down
    return make_edge(apex, up, down);
}

bool SyzygyGraph::adjacent(const Exponent& a, const Exponent& b) const {
    auto e = edge_between(a, b);
    return e && has(*e);
}

SyzygyGraph full_skeleton(int n, int d, const std::optional<Exponent>& u) {
    SyzygyGraph g{n, d, {}};
    for (const Exponent& c : enumerate_points(n, d + 1)) {
        auto sup = support(c);
        for (size_t s = 0; s < sup.size(); ++s)
            for (size_t t = s + 1; t < sup.size(); ++t) {
                DownEdge e = make_edge(c, sup[s], sup[t]);
                if (u) {
                    Exponent va = plus(c, e.i, -1), vb = plus(c, e.j, -1);
                    if (!divides(va, *u) || !divides(vb, *u)) continue;
                }
                g.edges.insert(e);
            }
    }
    return g;
}

IndexedGraph down_graph(const Exponent& c, const std::optional<std::vector<int>>& R) {
    std::vector<int> idx = R ? *R : support(c);
    std::sort(idx.begin(), idx.end());
    for (int r : idx)
        if (r < 0 || r >= (int)c.size() || c[r] < 1)
            throw std::invalid_argument("down_graph: R not contained in Supp(c)");
    IndexedGraph g;
    for (int r : idx) g.vertices.push_back(plus(c, r, -1));
    for (size_t s = 0; s < idx.size(); ++s)
        for (size_t t = s + 1; t < idx.size(); ++t)
            g.edges.push_back(make_edge(c, idx[s], idx[t]));
    return g;
}

IndexedGraph up_graph(const Exponent& a, int d) {
    if (degree(a) != d - 1) throw std::invalid_argument("up_graph: |a| must be d-1");
    IndexedGraph g;
    int n = (int)a.size();
    for (int i = 0; i < n; ++i) g.vertices.push_back(plus(a, i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.edges.push_back(make_edge(plus(plus(a, i), j), i, j));
    return g;
}

int companion_index(int i) { return i == 0 ? 1 : 0; }

bool chain_prec(const ChainId& a, const ChainId& b) {
    int da = degree(a.p), db = degree(b.p);
    if (da != db) return da < db;
    for (size_t t = 0; t < a.p.size(); ++t)
        if (a.p[t] != b.p[t]) return a.p[t] > b.p[t];
    return false;
}

Exponent chain_element(const ChainId& id, int d, int rank) {
    int r = degree(id.p);
    int j = companion_index(id.i);
    Exponent a = id.p;
    a[id.i] += rank;
    a[j] += d - rank - r;
    return a;
}

std::vector<ChainData> chain_decomposition(int n, int d, int i) {
    if (n < 2) throw std::invalid_argument("chain_decomposition: n must be >= 2");
    if (i < 0 || i >= n) throw std::invalid_argument("chain_decomposition: index out of range");
    int j = companion_index(i);

    std::vector<ChainId> ids;
    for (int r = 0; r <= d; ++r)
        for (const Exponent& q : enumerate_points(n, r)) {
            if (q[i] != 0 || q[j] != 0) continue;
            ids.push_back(ChainId{i, q});
        }
    std::sort(ids.begin(), ids.end(), chain_prec);

    std::vector<ChainData> out;
    std::map<Exponent, size_t> index_of;  // p -> position in out
    for (const ChainId& id : ids) {
        ChainData cd;
        cd.id = id;
        int r = degree(id.p);
        for (int k = 0; k <= d - r; ++k) cd.elements.push_back(chain_element(id, d, k));
        cd.extension = cd.elements;
        if (r > 0) {
            int m = min_support(id.p);
            Exponent parent = plus(id.p, m, -1);
            const ChainData& prev = out[index_of.at(parent)];
            for (int k = d - r + 1; k <= d; ++k) cd.extension.push_back(prev.extension[k]);
        }
        index_of[id.p] = out.size();
        out.push_back(std::move(cd));
    }
    return out;
}

}  // namespace polaris
