#include "polaris/tableaux.hpp"

#include <algorithm>

namespace polaris {

void check_tableau(const Key& t) {
    if (t.cols.empty()) throw std::invalid_argument("tableau: empty column");
    for (size_t v = 0; v + 1 < t.cols.size(); ++v)
        if (t.cols[v] >= t.cols[v + 1])
            throw std::invalid_argument("tableau: column not strictly increasing");
    if (t.cols.front() < 0 || t.cols.back() >= (int)t.row.size())
        throw std::invalid_argument("tableau: column index out of range");
    if (!nonnegative(t.row)) throw std::invalid_argument("tableau: negative row weight");
}

bool is_standard(const Key& t) {
    check_tableau(t);
    int v = min_support(t.row);
    return v == kNoSupport || t.cols.front() <= v;
}

Chain straighten(const Key& t) {
    Chain out;
    if (is_standard(t)) {
        out.emplace(t, Rational(1));
        return out;
    }
    // One application of the shuffle relation at the smallest row entry v.
    // All resulting tableaux have corner v <= their row minimum, hence are
    // standard; recurse anyway to keep the rewriting generic.
    int v = min_support(t.row);
    for (size_t k = 0; k < t.cols.size(); ++k) {
        Key s;
        s.cols.push_back(v);
        for (size_t w = 0; w < t.cols.size(); ++w)
            if (w != k) s.cols.push_back(t.cols[w]);
        s.row = t.row;
        s.row[v] -= 1;
        s.row[t.cols[k]] += 1;
        Rational sign = (k % 2 == 0) ? 1 : -1;
        for (auto& [key, c] : straighten(s)) chain_add(out, key, sign * c);
    }
    return out;
}

Chain straighten(const Chain& c) {
    Chain out;
    for (const auto& [k, v] : c)
        for (const auto& [sk, sv] : straighten(k)) chain_add(out, sk, v * sv);
    return out;
}

static void row_rec(int n, int minidx, Exponent& row, int pos, int left,
                    std::vector<Exponent>& out) {
    if (pos == n) {
        if (left == 0) out.push_back(row);
        return;
    }
    if (pos < minidx) {  // indices below the column corner stay 0
        row_rec(n, minidx, row, pos + 1, left, out);
        return;
    }
    for (int v = left; v >= 0; --v) {
        row[pos] = v;
        row_rec(n, minidx, row, pos + 1, left - v, out);
        row[pos] = 0;
    }
}

std::vector<Key> standard_basis(int a, int b, int n) {
    if (n < 1 || b < 1 || a < 0 || a > n - 1)
        throw std::invalid_argument("standard_basis: parameters out of range");
    std::vector<Key> out;
    // Columns in increasing lexicographic order; rows descending within.
    std::vector<int> col;
    auto emit = [&](auto&& self, int next) -> void {
        if ((int)col.size() == a + 1) {
            std::vector<Exponent> rows;
            Exponent row = zero(n);
            row_rec(n, col.front(), row, 0, b - 1, rows);
            for (auto& r : rows) out.push_back(Key{col, r});
            return;
        }
        for (int j = next; j < n; ++j) {
            col.push_back(j);
            self(self, j + 1);
            col.pop_back();
        }
    };
    emit(emit, 0);
    return out;
}

BigInt l_rank(int a, int b, int n) {
    return binomial(n + b - 1, a + b) * binomial(a + b - 1, a);
}

Chain kappa(const Key& t) {
    check_tableau(t);
    if (t.cols.size() < 2)
        throw std::invalid_argument("kappa: column length must be at least 2");
    Chain out;
    for (size_t k = 0; k < t.cols.size(); ++k) {
        Key s;
        for (size_t w = 0; w < t.cols.size(); ++w)
            if (w != k) s.cols.push_back(t.cols[w]);
        s.row = plus(t.row, t.cols[k]);
        chain_add(out, s, (k % 2 == 0) ? 1 : -1);
    }
    return out;
}

Chain kappa(const Chain& c) {
    Chain out;
    size_t shape_cols = 0;
    int shape_wt = -1;
    for (const auto& [k, v] : c) {
        if (shape_wt < 0) {
            shape_cols = k.cols.size();
            shape_wt = degree(k.row);
        } else if (k.cols.size() != shape_cols || degree(k.row) != shape_wt) {
            throw std::invalid_argument("kappa: mixed shapes in chain");
        }
        for (const auto& [sk, sv] : kappa(k)) chain_add(out, sk, v * sv);
    }
    return out;
}

std::vector<KoszulTerm> koszul_terms(const Key& t) {
    check_tableau(t);
    std::vector<KoszulTerm> out;
    for (size_t k = 0; k < t.cols.size(); ++k) {
        KoszulTerm term;
        term.sign = (k % 2 == 0) ? 1 : -1;
        term.index = t.cols[k];
        for (size_t w = 0; w < t.cols.size(); ++w)
            if (w != k) term.remainder.cols.push_back(t.cols[w]);
        term.remainder.row = t.row;
        out.push_back(std::move(term));
    }
    return out;
}

Chain koszul(const Chain& c, const std::vector<Rational>& weights) {
    Chain out;
    for (const auto& [k, v] : c) {
        if ((int)weights.size() != (int)k.row.size())
            throw std::invalid_argument("koszul: weights must have one entry per index");
        for (const auto& term : koszul_terms(k))
            chain_add(out, term.remainder, v * term.sign * weights[term.index]);
    }
    return out;
}

}  // namespace polaris
