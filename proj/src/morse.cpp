#include "polaris/morse.hpp"

#include <algorithm>

#include "polaris/hypersimplex.hpp"
#include "polaris/tableaux.hpp"

namespace polaris {

MatchingReport validate_matching(const ComplexDesc& cx, const Matching& m) {
    MatchingReport rep;
    std::map<Key, Key> down;  // higher -> lower
    std::map<Key, Key> up;    // lower -> higher
    std::set<Key> seen;
    for (const auto& [hi, lo] : m.pairs) {
        auto dh = cx.degree_of(hi), dl = cx.degree_of(lo);
        if (!dh || !dl) throw std::invalid_argument("matching: pair references unknown cell");
        if (*dh != *dl + 1) throw std::invalid_argument("matching: dimension gap is not 1");
        if (!seen.insert(hi).second || !seen.insert(lo).second)
            throw std::invalid_argument("matching: duplicated cell");
        down.emplace(hi, lo);
        up.emplace(lo, hi);
        if (!cx.multidegree.empty() &&
            cx.multidegree.at(hi) != cx.multidegree.at(lo))
            rep.homogeneous = false;
    }

    // reversed graph: normal edges c -> faces, matched edges lower -> higher
    auto neighbors = [&](const Key& c) {
        std::vector<Key> out;
        auto itu = up.find(c);
        if (itu != up.end()) out.push_back(itu->second);
        auto itd = down.find(c);
        for (const auto& [f, v] : cx.boundary_of(c))
            if (!(itd != down.end() && itd->second == f)) out.push_back(f);
        return out;
    };

    std::map<Key, int> color;  // 0 unseen, 1 on stack, 2 done
    std::vector<Key> stack;
    auto dfs = [&](auto&& self, const Key& c) -> bool {
        color[c] = 1;
        stack.push_back(c);
        for (const Key& nb : neighbors(c)) {
            int st = color.count(nb) ? color[nb] : 0;
            if (st == 1) {
                auto it = std::find(stack.begin(), stack.end(), nb);
                rep.cycle.assign(it, stack.end());
                return false;
            }
            if (st == 0 && !self(self, nb)) return false;
        }
        color[c] = 2;
        stack.pop_back();
        return true;
    };
    for (const auto& level : cx.basis)
        for (const Key& c : level)
            if ((color.count(c) ? color[c] : 0) == 0 && !dfs(dfs, c)) {
                rep.acyclic = false;
                return rep;
            }
    return rep;
}

Matching l_matching(int n, int d) {
    if (n < 1) throw std::invalid_argument("l_matching: n must be >= 1");
    Matching m;
    for (const auto& level : enumerate_cells(n, d))
        for (const Key& cell : level) {
            if (cell.cols.empty()) continue;
            int q = d - degree(cell.row);
            if (q < 2) continue;
            int mj = cell.cols.front();
            if (mj > min_support(cell.row)) continue;
            Key lower;
            lower.cols.assign(cell.cols.begin() + 1, cell.cols.end());
            lower.row = plus(cell.row, mj);
            m.pairs.emplace_back(cell, lower);
        }
    std::sort(m.pairs.begin(), m.pairs.end());
    return m;
}

std::vector<std::vector<Key>> critical_cells(const ComplexDesc& cx, const Matching& m) {
    std::set<Key> matched;
    for (const auto& [hi, lo] : m.pairs) {
        matched.insert(hi);
        matched.insert(lo);
    }
    std::vector<std::vector<Key>> out;
    for (const auto& level : cx.basis) {
        std::vector<Key> crit;
        for (const Key& c : level)
            if (!matched.count(c)) crit.push_back(c);
        out.push_back(std::move(crit));
    }
    return out;
}

ComplexDesc morse_complex(const ComplexDesc& cx, const Matching& m) {
    MatchingReport rep = validate_matching(cx, m);
    if (!rep.acyclic) throw std::invalid_argument("morse_complex: matching is not acyclic");

    std::map<Key, Key> up;  // lower -> higher
    std::set<Key> matched_down;
    for (const auto& [hi, lo] : m.pairs) {
        up.emplace(lo, hi);
        matched_down.insert(hi);
    }

    // P projects a cell onto a chain of critical cells along gradient paths.
    std::map<Key, Chain> memo;
    auto project = [&](auto&& self, const Key& c) -> const Chain& {
        auto it = memo.find(c);
        if (it != memo.end()) return it->second;
        Chain result;
        if (matched_down.count(c)) {
            // matched downward: contributes nothing
        } else if (up.count(c)) {
            const Key& h = up.at(c);
            const Chain& bd = cx.boundary_of(h);
            Rational inc = bd.at(c);
            for (const auto& [tau, v] : bd) {
                if (tau == c) continue;
                for (const auto& [k, w] : self(self, tau)) chain_add(result, k, -v / inc * w);
            }
        } else {
            result.emplace(c, Rational(1));
        }
        return memo.emplace(c, std::move(result)).first->second;
    };

    ComplexDesc out;
    out.n = cx.n;
    out.basis = critical_cells(cx, m);
    while (!out.basis.empty() && out.basis.back().empty()) out.basis.pop_back();
    for (const auto& level : out.basis)
        for (const Key& c : level) {
            if (!cx.multidegree.empty()) out.multidegree[c] = cx.multidegree.at(c);
            Chain bd;
            for (const auto& [sigma, v] : cx.boundary_of(c))
                for (const auto& [k, w] : project(project, sigma)) chain_add(bd, k, v * w);
            if (!bd.empty()) out.boundary[c] = std::move(bd);
        }
    return out;
}

IsoReport verify_l_isomorphism(int n, int d) {
    IsoReport rep;
    ComplexDesc hyper = hypersimplex_complex(n, d);
    ComplexDesc morse = morse_complex(hyper, l_matching(n, d));
    ComplexDesc lcx = build_l_complex(n, d);

    // critical cell -> standard tableau (vertices via their generator column)
    auto to_tab = [&](const Key& c) -> Key {
        if (c == augmentation_key(n)) return c;
        return cell_to_tableau(c);
    };

    if (morse.basis.size() != lcx.basis.size()) {
        rep.ok = false;
        rep.witness = "degree span mismatch";
        return rep;
    }
    std::map<Key, Key> cell_of;  // tableau -> cell
    for (size_t h = 0; h < morse.basis.size(); ++h) {
        if (morse.basis[h].size() != lcx.basis[h].size()) {
            rep.ok = false;
            rep.witness = "rank mismatch in degree " + std::to_string(h);
            return rep;
        }
        for (const Key& c : morse.basis[h]) {
            Key t = to_tab(c);
            if (h > 0 && !std::count(lcx.basis[h].begin(), lcx.basis[h].end(), t)) {
                rep.ok = false;
                rep.witness = "critical cell does not map to a standard tableau";
                return rep;
            }
            cell_of[t] = c;
        }
    }

    // find per-element signs with eps(b) * eps(b') = L[b',b] / Morse[b',b]
    std::map<Key, int> eps;  // on tableau keys
    eps[augmentation_key(n)] = 1;
    for (size_t h = 1; h < lcx.basis.size(); ++h)
        for (const Key& t : lcx.basis[h]) {
            const Chain& lb = lcx.boundary_of(t);
            Chain mb;  // Morse boundary pulled back to tableau keys
            for (const auto& [ck, v] : morse.boundary_of(cell_of.at(t))) mb.emplace(to_tab(ck), v);
            if (lb.size() != mb.size()) {
                rep.ok = false;
                rep.witness = "boundary support mismatch in degree " + std::to_string(h);
                return rep;
            }
            std::optional<int> forced;
            for (const auto& [t2, lv] : lb) {
                auto it = mb.find(t2);
                if (it == mb.end()) {
                    rep.ok = false;
                    rep.witness = "boundary support mismatch in degree " + std::to_string(h);
                    return rep;
                }
                Rational ratio = lv / it->second;
                if (ratio != 1 && ratio != -1) {
                    rep.ok = false;
                    rep.witness = "coefficient ratio is not a sign";
                    return rep;
                }
                auto e2 = eps.find(t2);
                if (e2 == eps.end()) continue;
                int want = (ratio == 1 ? 1 : -1) * e2->second;
                if (forced && *forced != want) {
                    rep.ok = false;
                    rep.witness = "no consistent sign assignment";
                    return rep;
                }
                forced = want;
            }
            eps[t] = forced.value_or(1);
            // re-check all entries against the chosen sign
            for (const auto& [t2, lv] : lb) {
                Rational ratio = lv / mb.at(t2);
                int want = (ratio == 1 ? 1 : -1);
                if (eps[t] * eps.at(t2) != want) {
                    rep.ok = false;
                    rep.witness = "no consistent sign assignment";
                    return rep;
                }
            }
        }
    for (const auto& [t, s] : eps) rep.signs[cell_of.count(t) ? cell_of.at(t) : t] = s;
    return rep;
}

}  // namespace polaris
