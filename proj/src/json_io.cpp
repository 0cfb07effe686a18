#include "polaris/json_io.hpp"

namespace polaris {

Json exponent_json(const Exponent& a) { return Json(a); }

Exponent exponent_from(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an integer array");
    Exponent a;
    for (const auto& v : j) a.push_back(v.get<int>());
    return a;
}

Json edge_json(const DownEdge& e) {
    Json j;
    j["apex"] = exponent_json(e.apex);
    j["i"] = e.i + 1;
    j["j"] = e.j + 1;
    return j;
}

DownEdge edge_from(const Json& j) {
    Exponent apex = exponent_from(j.at("apex"));
    return make_edge(apex, j.at("i").get<int>() - 1, j.at("j").get<int>() - 1);
}

Json graph_json(const SyzygyGraph& g) {
    Json j = Json::array();
    for (const DownEdge& e : g.edges) j.push_back(edge_json(e));
    return j;
}

SyzygyGraph graph_from(const Json& j) {
    const Json& edges = j.is_array() ? j : j.at("edges");
    SyzygyGraph g;
    for (const auto& je : edges) {
        DownEdge e = edge_from(je);
        if (g.edges.empty()) {
            g.n = (int)e.apex.size();
            g.d = degree(e.apex) - 1;
        } else if ((int)e.apex.size() != g.n || degree(e.apex) != g.d + 1) {
            throw std::invalid_argument("graph: inconsistent apex shape");
        }
        g.edges.insert(e);
    }
    if (g.edges.empty()) throw std::invalid_argument("graph: no edges");
    return g;
}

Json tableau_json(const Key& t) {
    Json j;
    Json col = Json::array();
    for (int c : t.cols) col.push_back(c + 1);
    j["col"] = col;
    j["row"] = exponent_json(t.row);
    return j;
}

Key tableau_from(const Json& j, int n) {
    Key t;
    for (const auto& v : j.at("col")) t.cols.push_back(v.get<int>() - 1);
    t.row = exponent_from(j.at("row"));
    if ((int)t.row.size() != n) throw std::invalid_argument("tableau: wrong row length");
    return t;
}

Json chain_json(const Chain& c) {
    Json j = Json::array();
    for (const auto& [k, v] : c) {
        Json term;
        term["key"] = tableau_json(k);
        term["coeff"] = v.str();
        j.push_back(term);
    }
    return j;
}

static Json mask_json(SetMask m, int d) {
    Json j = Json::array();
    for (int b = 0; b < d; ++b)
        if (m & (SetMask(1) << b)) j.push_back(b + 1);
    return j;
}

static SetMask mask_from(const Json& j, int d) {
    SetMask m = 0;
    for (const auto& v : j) {
        int b = v.get<int>() - 1;
        if (b < 0 || b >= d) throw std::invalid_argument("family: set element outside [d]");
        m |= SetMask(1) << b;
    }
    return m;
}

Json family_json(const IsotoneFamily& f) {
    Json j;
    j["n"] = f.n;
    j["d"] = f.d;
    if (f.u) j["u"] = exponent_json(*f.u);
    Json rows = Json::array();
    for (const auto& [a, masks] : f.tables) {
        Json row;
        row["point"] = exponent_json(a);
        Json sets = Json::array();
        for (SetMask m : masks) sets.push_back(mask_json(m, f.d));
        row["sets"] = sets;
        rows.push_back(row);
    }
    j["X"] = rows;
    return j;
}

IsotoneFamily family_from(const Json& j) {
    IsotoneFamily f;
    f.n = j.at("n").get<int>();
    f.d = j.at("d").get<int>();
    if (j.contains("u")) f.u = exponent_from(j.at("u"));
    for (const auto& row : j.at("X")) {
        Exponent a = exponent_from(row.at("point"));
        std::vector<SetMask> masks;
        for (const auto& s : row.at("sets")) masks.push_back(mask_from(s, f.d));
        if ((int)masks.size() != f.n) throw std::invalid_argument("family: wrong set count");
        f.tables.emplace(std::move(a), std::move(masks));
    }
    return f;
}

Json complex_json(const ComplexDesc& c) {
    Json j;
    j["n"] = c.n;
    Json levels = Json::array();
    for (const auto& level : c.basis) {
        Json lv = Json::array();
        for (const Key& k : level)lv.push_back(tableau_json(k));
        levels.push_back(lv);
    }
    j["basis"] = levels;
    Json bd = Json::array();
    for (const auto& [k, ch] : c.boundary) {
        Json entry;
        entry["key"] = tableau_json(k);
        entry["image"] = chain_json(ch);
        bd.push_back(entry);
    }
    j["boundary"] = bd;
    if (!c.multidegree.empty()) {
        Json md = Json::array();
        for (const auto& [k, m] : c.multidegree) {
            Json entry;
            entry["key"] = tableau_json(k);
            entry["mdeg"] = exponent_json(m);
            md.push_back(entry);
        }
        j["multidegree"] = md;
    }
    return j;
}

Json matching_json(const Matching& m) {
    Json j = Json::array();
    for (const auto& [hi, lo] : m.pairs) {
        Json pair;
        pair["higher"] = tableau_json(hi);
        pair["lower"] = tableau_json(lo);
        j.push_back(pair);
    }
    return j;
}

Json betti_json(const BettiTable& b) {
    Json j;
    j["total"] = b.total;
    Json rows = Json::array();
    for (const auto& [m, v] : b.by_multidegree) {
        Json row;
        row["multidegree"] = exponent_json(m);
        row["betti"] = v;
        rows.push_back(row);
    }
    j["by_multidegree"] = rows;
    return j;
}

Json diagnostic_json(const Diagnostic& d) {
    Json j;
    j["condition"] = d.condition;
    j["human"] = d.human;
    Json pts = Json::array();
    for (const auto& p : d.witness_points) pts.push_back(exponent_json(p));
    j["witness_points"] = pts;
    Json eds = Json::array();
    for (const auto& e : d.witness_edges) eds.push_back(edge_json(e));
    j["witness_edges"] = eds;
    return j;
}

std::string fnv1a_hex(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof(buf), "%016llx", (unsigned long long)h);
    return std::string(buf);
}

}  // namespace polaris
