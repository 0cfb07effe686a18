#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polaris/complexes.hpp"
#include "polaris/homology.hpp"
#include "polaris/lattice.hpp"
#include "polaris/linalg.hpp"
#include "polaris/tableaux.hpp"

using namespace polaris;

TEST_CASE("standardness") {
    CHECK(is_standard(Key{{0, 2}, {0, 1, 1}}));        // corner 1 <= 2
    CHECK_FALSE(is_standard(Key{{1, 2}, {1, 0, 0}}));  // corner 2 > 1
    CHECK(is_standard(Key{{0, 1, 2}, {0, 0, 0}}));     // empty row is vacuous
    CHECK_THROWS_AS(is_standard(Key{{2, 1}, {0, 0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(is_standard(Key{{}, {0, 0, 0}}), std::invalid_argument);
}

TEST_CASE("straightening the basic violation") {
    Chain c = straighten(Key{{1, 2}, {1, 0, 0}});
    Chain expected;
    expected.emplace(Key{{0, 2}, {0, 1, 0}}, Rational(1));
    expected.emplace(Key{{0, 1}, {0, 0, 1}}, Rational(-1));
    CHECK(c == expected);

    Key std_tab{{0, 1}, {1, 1, 0}};
    Chain id = straighten(std_tab);
    REQUIRE(id.size() == 1);
    CHECK(id.begin()->first == std_tab);
    CHECK(id.begin()->second == 1);
}

TEST_CASE("straightening is idempotent and lands in the standard basis") {
    std::mt19937_64 rng(3);
    int n = 4;
    auto pts2 = enumerate_points(n, 2);
    std::uniform_int_distribution<size_t> pick(0, pts2.size() - 1);
    for (int it = 0; it < 50; ++it) {
        std::vector<int> col;
        for (int j = 0; j < n; ++j)
            if (rng() % 2) col.push_back(j);
        if (col.size() < 1) col.push_back(0);
        Key t{col, pts2[pick(rng)]};
        Chain s = straighten(t);
        for (const auto& [k, v] : s) CHECK(is_standard(k));
        CHECK(straighten(s) == s);
        // straightening preserves the multidegree
        for (const auto& [k, v] : s) CHECK(key_mdeg(k) == key_mdeg(t));
    }
}

TEST_CASE("straightening works modulo the image of the longer kappa") {
    // col (3,4), row f1 f2, n = 4
    Key t{{2, 3}, {1, 1, 0, 0}};
    Chain diff = straighten(t);
    chain_add(diff, t, Rational(-1));
    // express in the full monomial basis of wedge^2 F (x) S_2
    std::map<Key, int> idx;
    std::vector<Chain> cols;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            for (const Exponent& w : enumerate_points(4, 2))
                idx.emplace(Key{{a, b}, w}, (int)idx.size());
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            for (int c = b + 1; c < 4; ++c)
                for (const Exponent& w : enumerate_points(4, 1))
                    cols.push_back(kappa(Key{{a, b, c}, w}));
    long rank_image = matrix_rank(chains_to_matrix(cols, idx));
    cols.push_back(diff);
    CHECK(matrix_rank(chains_to_matrix(cols, idx)) == rank_image);
}

TEST_CASE("standard basis counts match the rank formula") {
    CHECK(standard_basis(1, 3, 3).size() == 15);
    CHECK(standard_basis(2, 3, 3).size() == 6);
    for (int b = 1; b <= 4; ++b)
        CHECK(BigInt(standard_basis(0, b, 4).size()) == binomial(4 + b - 1, b));
    for (int n = 1; n <= 5; ++n)
        for (int b = 1; b <= 4; ++b)
            for (int a = 0; a <= n - 1; ++a)
                CHECK(BigInt(standard_basis(a, b, n).size()) == l_rank(a, b, n));
    CHECK_THROWS_AS(standard_basis(3, 2, 3), std::invalid_argument);
}

TEST_CASE("kappa matches the worked image of the full column") {
    // f1^f2^f3 (x) f3 -> [col 23, f1 f3] - [col 13, f2 f3] + [col 12, f3 f3]
    Chain c = kappa(Key{{0, 1, 2}, {0, 0, 1}});
    Chain expected;
    expected.emplace(Key{{1, 2}, {1, 0, 1}}, Rational(1));
    expected.emplace(Key{{0, 2}, {0, 1, 1}}, Rational(-1));
    expected.emplace(Key{{0, 1}, {0, 0, 2}}, Rational(1));
    CHECK(c == expected);
}

TEST_CASE("kappa squares to zero; no kappa below a single column") {
    std::mt19937_64 rng(9);
    auto pts = enumerate_points(3, 2);
    std::uniform_int_distribution<size_t> pick(0, pts.size() - 1);
    for (int it = 0; it < 20; ++it) {
        Chain c;
        c.emplace(Key{{0, 1, 2}, pts[pick(rng)]}, Rational(1));
        CHECK(kappa(kappa(c)).empty());
    }
    CHECK_THROWS_AS(kappa(Key{{1}, {0, 1, 0}}), std::invalid_argument);
    Chain mixed;
    mixed.emplace(Key{{0, 1}, {1, 0, 0}}, Rational(1));
    mixed.emplace(Key{{0, 1, 2}, {0, 0, 0}}, Rational(1));
    CHECK_THROWS_AS(kappa(mixed), std::invalid_argument);
}

TEST_CASE("koszul terms match the worked image and the sign convention") {
    // f1^f2^f3 (x) f1 f3 with psi(f_i) = x_i
    auto terms = koszul_terms(Key{{0, 1, 2}, {1, 0, 1}});
    REQUIRE(terms.size() == 3);
    CHECK(terms[0].sign == 1);
    CHECK(terms[0].index == 0);
    CHECK(terms[0].remainder == Key{{1, 2}, {1, 0, 1}});
    CHECK(terms[1].sign == -1);
    CHECK(terms[1].index == 1);
    CHECK(terms[1].remainder == Key{{0, 2}, {1, 0, 1}});
    CHECK(terms[2].sign == 1);
    CHECK(terms[2].index == 2);
    CHECK(terms[2].remainder == Key{{0, 1}, {1, 0, 1}});

    // two-element column: + psi(f_1) f_2 - psi(f_2) f_1
    auto pair_terms = koszul_terms(Key{{0, 1}, {0, 0, 0}});
    CHECK(pair_terms[0].sign == 1);
    CHECK(pair_terms[0].index == 0);
    CHECK(pair_terms[0].remainder.cols == std::vector<int>{1});
    CHECK(pair_terms[1].sign == -1);
    CHECK(pair_terms[1].index == 1);
    CHECK(pair_terms[1].remainder.cols == std::vector<int>{0});
}

TEST_CASE("koszul squares to zero with scalar weights") {
    std::mt19937_64 rng(11);
    for (int n = 2; n <= 5; ++n) {
        std::vector<Rational> weights;
        for (int i = 0; i < n; ++i) weights.emplace_back((int)(rng() % 7) - 3);
        auto pts = enumerate_points(n, 2);
        std::uniform_int_distribution<size_t> pick(0, pts.size() - 1);
        std::vector<int> col;
        for (int j = 0; j < std::min(n, 3); ++j) col.push_back(j);
        Chain c;
        c.emplace(Key{col, pts[pick(rng)]}, Rational(1));
        if (col.size() >= 2) CHECK(koszul(koszul(c, weights), weights).empty());
    }
}

TEST_CASE("the L-complex has the right ranks and is exact") {
    CHECK(build_l_complex(3, 3).ranks() == std::vector<long>{1, 10, 15, 6});
    CHECK(build_l_complex(1, 4).ranks() == std::vector<long>{1, 1});
    CHECK(build_l_complex(4, 2).ranks() == std::vector<long>{1, 10, 20, 15, 4});

    ComplexDesc L = build_l_complex(4, 2);
    validate_square_zero(L);
    auto hom = rational_homology(L);
    for (size_t h = 1; h < hom.size(); ++h) CHECK(hom[h] == 0);
    CHECK(is_cellular_resolution(homogenize(L)).ok);
}

TEST_CASE("homogenization reproduces the intrinsic multidegree labels") {
    ComplexDesc L = build_l_complex(3, 3);
    ComplexDesc relabeled = homogenize(L);
    for (const auto& [k, m] : L.multidegree) CHECK(relabeled.multidegree.at(k) == m);
}
