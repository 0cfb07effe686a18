#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polaris/homology.hpp"
#include "polaris/isotone.hpp"
#include "polaris/linalg.hpp"
#include "polaris/oracle.hpp"
#include "polaris/polarization.hpp"
#include "polaris/tableaux.hpp"

using namespace polaris;

TEST_CASE("the standard family") {
    IsotoneFamily f = standard_family(3, 2);
    CHECK(f.at({2, 0, 0})[0] == 0b11u);  // X_1((2,0,0)) = {1,2}
    CHECK_FALSE(validate_family(f).has_value());
    CHECK(ls_edges(f).edges == full_skeleton(3, 2).edges);

    for (auto [n, d] : {std::pair{3, 2}, {3, 3}, {4, 2}}) {
        PolarizationVerdict v = is_polarization(standard_family(n, d), true);
        CHECK(v.spanning);
        CHECK(*v.tab_span);
        CHECK(*v.oracle);
    }
}

TEST_CASE("family validation catches violations") {
    IsotoneFamily f = standard_family(3, 2);
    f.tables[{2, 0, 0}][0] = 0b1u;  // rank 2 point with a singleton
    CHECK(validate_family(f).has_value());

    IsotoneFamily g = standard_family(3, 2);
    g.tables[{2, 0, 0}][0] = 0b110u;  // {2,3} does not contain X_1((1,1,0)) = {1}
    auto err = validate_family(g);
    REQUIRE(err.has_value());
    CHECK(err->find("not isotone") != std::string::npos);
    CHECK_THROWS_AS(is_polarization(g, false), std::invalid_argument);
}

TEST_CASE("realized ideals are squarefree and depolarize") {
    IsotoneFamily f = standard_family(2, 2);
    MonomialIdealTilde ideal = realize_ideal(f);
    REQUIRE(ideal.gens.size() == 3);
    // generators x11 x12, x11 x21, x21 x22
    std::set<std::vector<SetMask>> masks;
    for (const auto& [a, m] : ideal.gens) masks.insert(m);
    CHECK(masks.count({0b11u, 0b0u}));
    CHECK(masks.count({0b1u, 0b1u}));
    CHECK(masks.count({0b0u, 0b11u}));
    CHECK(depolarization_check(f));

    for (auto [n, d] : {std::pair{3, 3}, {4, 2}}) {
        IsotoneFamily fam = standard_family(n, d);
        MonomialIdealTilde id2 = realize_ideal(fam);
        CHECK(BigInt(id2.gens.size()) == binomial(n + d - 1, d));
        for (const auto& [a, m] : id2.gens) {
            int deg = 0;
            for (SetMask mask : m) deg += mask_rank(mask);
            CHECK(deg == d);
        }
        CHECK(depolarization_check(fam));
    }
}

TEST_CASE("ls edges and boundary edges") {
    std::mt19937_64 rng(41);
    for (auto [n, d] : {std::pair{3, 3}, {4, 2}}) {
        for (int it = 0; it < 25; ++it) {
            IsotoneFamily f = random_family(n, d, rng);
            SyzygyGraph g = ls_edges(f);  // asserts both characterizations agree
            // boundary edges are linear syzygies for every valid family
            for (int s = 0; s < n; ++s)
                for (int t = s + 1; t < n; ++t)
                    for (int k = 1; k <= d; ++k) {
                        Exponent apex = zero(n);
                        apex[s] = k;
                        apex[t] = d - k + 1;
                        CHECK(g.has(make_edge(apex, s, t)));
                    }
        }
    }
}

TEST_CASE("spanning tree check") {
    SyzygyGraph full = full_skeleton(3, 3);
    CHECK(spanning_tree_check(full).ok);

    SyzygyGraph broken = full;
    broken.edges.erase(make_edge({2, 1, 1}, 0, 1));
    broken.edges.erase(make_edge({2, 1, 1}, 0, 2));
    auto res = spanning_tree_check(broken);
    CHECK_FALSE(res.ok);
    CHECK(res.witness_apex == Exponent{2, 1, 1});

    // one edge removed per full-support down-triangle still spans
    SyzygyGraph pol = full;
    pol.edges.erase(make_edge({2, 1, 1}, 1, 2));
    pol.edges.erase(make_edge({1, 2, 1}, 1, 2));
    pol.edges.erase(make_edge({1, 1, 2}, 1, 2));
    CHECK(spanning_tree_check(pol).ok);
}

TEST_CASE("r-subset syzygies") {
    IsotoneFamily f = standard_family(3, 3);
    // all edges present: every subset spans
    CHECK(r_ls_check(f, {2, 1, 1}, {0, 1, 2}));
    CHECK(r_ls_check(f, {2, 1, 1}, {0, 1}));
    CHECK_THROWS_AS(r_ls_check(f, {2, 1, 1}, {0, 3}), std::invalid_argument);

    // |R| = 2: the subset spans iff the pair is an R-syzygy by definition
    std::mt19937_64 rng(43);
    for (int it = 0; it < 20; ++it) {
        IsotoneFamily g = random_family(3, 3, rng);
        for (const Exponent& c : enumerate_points(3, 4)) {
            auto sup = support(c);
            for (size_t s = 0; s < sup.size(); ++s)
                for (size_t t = s + 1; t < sup.size(); ++t) {
                    // with only two indices the subset condition is vacuous
                    CHECK(r_ls_check(g, c, {sup[s], sup[t]}));
                }
        }
    }

    // whenever LS(c) spans D(c), every R spans D_R(c)
    for (int it = 0; it < 50; ++it) {
        IsotoneFamily g = random_family(3, 3, rng);
        SyzygyGraph lse = ls_edges(g);
        for (const Exponent& c : enumerate_points(3, 4)) {
            auto sup = support(c);
            // spanning status of the full down-graph within the ls graph
            std::vector<int> all(sup.begin(), sup.end());
            bool full_spans = true;
            {
                SyzygyGraph sub{3, 3, {}};
                for (const DownEdge& e : lse.edges)
                    if (e.apex == c) sub.edges.insert(e);
                // reuse the family-level subset check for the full set
                full_spans = r_ls_check(g, c, all);
                (void)sub;
            }
            if (!full_spans) continue;
            // enumerate subsets of the support
            for (uint32_t m = 1; m < (1u << sup.size()); ++m) {
                std::vector<int> R;
                for (size_t t = 0; t < sup.size(); ++t)
                    if (m & (1u << t)) R.push_back(sup[t]);
                if (R.size() < 2) continue;
                CHECK(r_ls_check(g, c, R));
            }
        }
    }
}

TEST_CASE("dictionary") {
    CHECK(dict_theta({2, 1, 1}, 0, 1) == Key{{0, 1}, {1, 0, 1}});
    CHECK(dict_psi({1, 2, 0}) == Exponent{1, 2, 0});

    // psi is a bijection onto the degree-d points (identity on exponents)
    auto pts = enumerate_points(3, 3);
    std::set<Exponent> images;
    for (const auto& a : pts) images.insert(dict_psi(a));
    CHECK(images.size() == pts.size());

    // theta is injective over all edges
    std::set<Key> labels;
    for (const DownEdge& e : full_skeleton(3, 3).edges) CHECK(labels.insert(dict_theta(e)).second);

    // kappa of omega over a full-support apex is the signed sum of the
    // triangle's three edge labels
    for (const Exponent& c : {Exponent{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}) {
        Key w = dict_omega(c, {0, 1, 2});
        CHECK(w.cols.size() == 3);
        Chain img = kappa(w);
        Chain expected;
        chain_add(expected, dict_theta(c, 1, 2), 1);
        chain_add(expected, dict_theta(c, 0, 2), -1);
        chain_add(expected, dict_theta(c, 0, 1), 1);
        CHECK(img == expected);
    }
    CHECK_THROWS_AS(dict_omega({2, 0, 1}, {0, 1}), std::invalid_argument);
}

TEST_CASE("tableau spanning matches the graph criterion") {
    CHECK(tab_spanning_check(standard_family(3, 3)));

    // disconnecting one down-triangle breaks the spanning rank in that strand
    SyzygyGraph g = full_skeleton(3, 3);
    g.edges.erase(make_edge({2, 1, 1}, 0, 1));
    g.edges.erase(make_edge({2, 1, 1}, 0, 2));
    std::map<Key, int> idx;
    for (const Key& t : standard_basis(1, 3, 3)) idx.emplace(t, (int)idx.size());
    std::vector<Chain> cols;
    for (const DownEdge& e : g.edges) cols.push_back(straighten(dict_theta(e)));
    CHECK(matrix_rank(chains_to_matrix(cols, idx)) == (long)idx.size() - 1);

    std::mt19937_64 rng(47);
    for (auto [n, d] : {std::pair{3, 3}, {4, 2}})
        for (int it = 0; it < 40; ++it) {
            IsotoneFamily f = random_family(n, d, rng);
            CHECK(tab_spanning_check(f) == spanning_tree_check(ls_edges(f)).ok);
        }
}

TEST_CASE("restricted power setup") {
    // u = (d,..,d) is a no-op bound
    RestrictedSetup plain = restricted_power_setup(3, 2, {2, 2, 2});
    CHECK(plain.generators.size() == 6);
    CHECK(plain.l_ranks == std::vector<long>{6, 8, 3});

    RestrictedSetup sq = restricted_power_setup(4, 2, {1, 1, 1, 1});
    CHECK(sq.generators.size() == 6);
    CHECK(sq.l_ranks == std::vector<long>{6, 8, 3});
    CHECK(sq.morse.ranks() == std::vector<long>{1, 6, 8, 3});
    CHECK(is_cellular_resolution(sq.hypersimplex).ok);
    CHECK(is_cellular_resolution(sq.morse).ok);

    RestrictedSetup mixed = restricted_power_setup(3, 2, {1, 2, 1});
    std::set<Exponent> gens(mixed.generators.begin(), mixed.generators.end());
    CHECK(gens == std::set<Exponent>{{1, 1, 0}, {0, 2, 0}, {0, 1, 1}, {1, 0, 1}});

    RestrictedSetup none = restricted_power_setup(3, 3, {0, 0, 0});
    CHECK(none.empty);
    CHECK(none.generators.empty());
}

TEST_CASE("bounded families and the generalized criteria") {
    Exponent u{1, 1, 1, 1};
    IsotoneFamily f = standard_family(4, 2, u);
    CHECK_FALSE(validate_family(f).has_value());
    CHECK(depolarization_check(f));
    PolarizationVerdict v = is_polarization(f, true);
    CHECK(v.spanning);
    CHECK(*v.tab_span);
    CHECK(*v.oracle);

    std::mt19937_64 rng(53);
    for (int it = 0; it < 25; ++it) {
        IsotoneFamily g = random_family(4, 2, rng, u);
        bool sp = spanning_tree_check(ls_edges(g), u).ok;
        CHECK(tab_spanning_check(g) == sp);
        CHECK(verify_polarization_bruteforce(g, 0) == sp);
    }
}
