#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace polaris {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Exponent vector in N^n. Doubles as a monomial multidegree.
using Exponent = std::vector<int>;

inline int degree(const Exponent& a) {
    int s = 0;
    for (int x : a) s += x;
    return s;
}

// 0-based indices of the nonzero coordinates.
inline std::vector<int> support(const Exponent& a) {
    std::vector<int> s;
    for (int i = 0; i < (int)a.size(); ++i)
        if (a[i] > 0) s.push_back(i);
    return s;
}

// Convention: min of the empty support is +infinity.
inline constexpr int kNoSupport = INT32_MAX;

inline int min_support(const Exponent& a) {
    for (int i = 0; i < (int)a.size(); ++i)
        if (a[i] > 0) return i;
    return kNoSupport;
}

inline bool divides(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Exponent join(const Exponent& a, const Exponent& b) {
    Exponent r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline Exponent unit(int n, int i) {
    Exponent e(n, 0);
    e[i] = 1;
    return e;
}

inline Exponent zero(int n) { return Exponent(n, 0); }

inline Exponent plus(Exponent a, int i, int delta = 1) {
    a[i] += delta;
    return a;
}

inline bool nonnegative(const Exponent& a) {
    for (int x : a)
        if (x < 0) return false;
    return true;
}

inline BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long t = 0; t < k; ++t) {
        r *= (n - t);
        r /= (t + 1);
    }
    return r;
}

// Shared basis key for cells and hook tableaux: a sorted index set plus a
// weight vector. For a cell C_{a,J}: cols = J, row = a. For a tableau
// f_J (x) f^alpha: cols = J, row = alpha. Indices are 0-based internally.
struct Key {
    std::vector<int> cols;
    Exponent row;

    auto operator<=>(const Key&) const = default;
};

using Chain = std::map<Key, Rational>;

inline void chain_add(Chain& c, const Key& k, const Rational& coeff) {
    if (coeff == 0) return;
    auto it = c.find(k);
    if (it == c.end()) {
        c.emplace(k, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) c.erase(it);
    }
}

inline Chain chain_scale(const Chain& c, const Rational& s) {
    Chain r;
    if (s == 0) return r;
    for (const auto& [k, v] : c) r.emplace(k, v * s);
    return r;
}

inline Chain chain_sum(const Chain& a, const Chain& b) {
    Chain r = a;
    for (const auto& [k, v] : b) chain_add(r, k, v);
    return r;
}

// Multidegree of a key: row + sum of unit vectors over cols.
inline Exponent key_mdeg(const Key& k) {
    Exponent m = k.row;
    for (int j : k.cols) m[j] += 1;
    return m;
}

struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CriterionDisagreement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace polaris
