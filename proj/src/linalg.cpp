#include "polaris/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace polaris {

long matrix_rank_int(std::vector<std::vector<BigInt>> m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    BigInt prev = 1;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (size_t x = r + 1; x < rows; ++x) {
            for (size_t y = c + 1; y < cols; ++y) {
                m[x][y] = (m[r][c] * m[x][y] - m[x][c] * m[r][y]) / prev;
            }
            m[x][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return (long)r;
}

long matrix_rank(std::vector<std::vector<Rational>> m) {
    std::vector<std::vector<BigInt>> im(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        BigInt scale = 1;
        for (const auto& v : m[i])
            if (v != 0) scale = boost::multiprecision::lcm(scale, denominator(v));
        im[i].reserve(m[i].size());
        for (const auto& v : m[i]) im[i].push_back(numerator(v) * (scale / denominator(v)));
    }
    return matrix_rank_int(std::move(im));
}

std::vector<std::vector<Rational>> chains_to_matrix(const std::vector<Chain>& cols,
                                                    const std::map<Key, int>& basis_index) {
    std::vector<std::vector<Rational>> m(basis_index.size(),
                                         std::vector<Rational>(cols.size(), Rational(0)));
    for (size_t j = 0; j < cols.size(); ++j)
        for (const auto& [k, v] : cols[j]) {
            auto it = basis_index.find(k);
            if (it == basis_index.end())
                throw std::invalid_argument("chains_to_matrix: chain term outside basis");
            m[it->second][j] = v;
        }
    return m;
}

}  // namespace polaris
