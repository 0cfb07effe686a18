#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polaris/isotone.hpp"
#include "polaris/tableaux.hpp"

using namespace polaris;

namespace {

SyzygyGraph word_fixture_graph() {
    SyzygyGraph g = full_skeleton(3, 3);
    g.edges.erase(make_edge({2, 1, 1}, 1, 2));
    g.edges.erase(make_edge({1, 2, 1}, 1, 2));
    g.edges.erase(make_edge({1, 1, 2}, 1, 2));
    return g;
}

SyzygyGraph l_complex_graph(int n, int d) {
    SyzygyGraph g{n, d, {}};
    for (const Exponent& c : enumerate_points(n, d + 1)) {
        auto sup = support(c);
        for (size_t s = 0; s < sup.size(); ++s)
            for (size_t t = s + 1; t < sup.size(); ++t)
                if (is_standard(dict_theta(c, sup[s], sup[t])))
                    g.edges.insert(make_edge(c, sup[s], sup[t]));
    }
    return g;
}

}  // namespace

TEST_CASE("the full skeleton passes every condition") {
    for (auto [n, d] : {std::pair{3, 3}, {4, 2}, {3, 4}}) {
        SyzygyGraph g = full_skeleton(n, d);
        for (int i = 0; i < n; ++i) CHECK(check_conditions(g, i).empty());
    }
    CHECK_THROWS_AS(check_conditions(full_skeleton(1, 2), 0), std::invalid_argument);
}

TEST_CASE("the linear-syzygy graph of the minimal resolution at (4,2) fails") {
    SyzygyGraph g = l_complex_graph(4, 2);
    auto diags = check_conditions_all(g);
    REQUIRE_FALSE(diags.empty());
    bool has_g1 = false;
    for (const auto& d : diags) has_g1 = has_g1 || d.condition == "G1";
    CHECK(has_g1);
    CHECK_THROWS_AS(infer_family(g), std::invalid_argument);
}

TEST_CASE("interior-only removals pass at n = 3") {
    // removing edges only from full-support down-triangles keeps all
    // conditions intact in three variables
    SyzygyGraph full = full_skeleton(3, 3);
    std::vector<DownEdge> interior;
    for (const DownEdge& e : full.edges)
        if ((int)support(e.apex).size() == 3) interior.push_back(e);
    REQUIRE(interior.size() == 9);
    for (uint32_t mask = 0; mask < (1u << 9); ++mask) {
        SyzygyGraph g = full;
        for (size_t t = 0; t < interior.size(); ++t)
            if (mask & (1u << t)) g.edges.erase(interior[t]);
        CHECK(check_conditions_all(g).empty());
    }
}

TEST_CASE("a missing boundary edge is diagnosed") {
    SyzygyGraph g = full_skeleton(3, 3);
    g.edges.erase(make_edge({1, 3, 0}, 0, 1));
    auto diags = check_conditions_all(g);
    REQUIRE_FALSE(diags.empty());
    bool has_boundary = false;
    for (const auto& d : diags) has_boundary = has_boundary || d.condition == "BOUNDARY";
    CHECK(has_boundary);
}

TEST_CASE("inference reproduces the worked word algebra") {
    SyzygyGraph g = word_fixture_graph();
    CHECK(check_conditions_all(g).empty());
    InferenceResult inf = infer_family(g);

    std::map<Exponent, std::vector<int>> words;
    for (const auto& [id, w] : inf.words.at(0)) words[id.p] = w;
    CHECK(words.at({0, 0, 0}) == std::vector<int>{0, 1, 2});  // (123)
    CHECK(words.at({0, 0, 1}) == std::vector<int>{1, 2, 0});  // (231)
    CHECK(words.at({0, 0, 2}) == std::vector<int>{2, 1, 0});  // (321)

    CHECK(verify_star(g, inf.family).ok);
    CHECK_FALSE(validate_family(inf.family).has_value());
}

TEST_CASE("the full skeleton infers the standard family") {
    for (auto [n, d] : {std::pair{3, 3}, {4, 2}, {2, 4}}) {
        SyzygyGraph g = full_skeleton(n, d);
        InferenceResult inf = infer_family(g);
        IsotoneFamily expected = standard_family(n, d);
        CHECK(inf.family.tables == expected.tables);
        // every word is the identity
        for (const auto& [i, words] : inf.words)
            for (const auto& [id, w] : words)
                for (size_t t = 0; t < w.size(); ++t) CHECK(w[t] == (int)t);
    }
}

TEST_CASE("rank-zero labels never trigger a swap") {
    std::mt19937_64 rng(61);
    for (int it = 0; it < 20; ++it) {
        SyzygyGraph g = random_passing_graph(3, 3, rng);
        InferenceResult inf = infer_family(g);
        for (const auto& [i, words] : inf.words)
            for (const auto& [id, w] : words)
                for (const Exponent& a : enumerate_points(3, 3))
                    if (a[i] == 0) CHECK(inf.family.at(a)[i] == 0u);
    }
}

TEST_CASE("round trip B: inference realizes every passing graph") {
    // exhaustive over interior subsets at (3,2) and (3,3)
    for (auto [n, d] : {std::pair{3, 2}, {3, 3}}) {
        SyzygyGraph full = full_skeleton(n, d);
        std::vector<DownEdge> interior;
        for (const DownEdge& e : full.edges)
            if ((int)support(e.apex).size() > 2) interior.push_back(e);
        REQUIRE(interior.size() <= 12);
        for (uint32_t mask = 0; mask < (1u << interior.size()); ++mask) {
            SyzygyGraph g = full;
            for (size_t t = 0; t < interior.size(); ++t)
                if (mask & (1u << t)) g.edges.erase(interior[t]);
            if (!check_conditions_all(g).empty()) continue;
            InferenceResult inf = infer_family(g);
            CHECK(verify_star(g, inf.family).ok);
        }
    }
    // sampled at (3,4) and (4,2)
    std::mt19937_64 rng(67);
    for (auto [n, d] : {std::pair{3, 4}, {4, 2}})
        for (int it = 0; it < 60; ++it) {
            SyzygyGraph g = random_passing_graph(n, d, rng);
            InferenceResult inf = infer_family(g);
            CHECK(verify_star(g, inf.family).ok);
        }
}

TEST_CASE("round trip A: family -> graph -> family keeps the graph") {
    std::mt19937_64 rng(71);
    for (auto [n, d] : {std::pair{3, 2}, {3, 3}, {3, 4}}) {
        for (int it = 0; it < 40; ++it) {
            IsotoneFamily f = random_family(n, d, rng);
            SyzygyGraph g = ls_edges(f);
            CHECK(check_conditions_all(g).empty());
            InferenceResult inf = infer_family(g);
            CHECK(ls_edges(inf.family).edges == g.edges);
        }
    }
    // standard families round-trip at every desk size
    for (auto [n, d] : {std::pair{3, 3}, {4, 2}, {4, 3}}) {
        IsotoneFamily f = standard_family(n, d);
        SyzygyGraph g = ls_edges(f);
        CHECK(check_conditions_all(g).empty());
        CHECK(ls_edges(infer_family(g).family).edges == g.edges);
    }
}

TEST_CASE("verify star rejects a perturbed family") {
    SyzygyGraph g = word_fixture_graph();
    InferenceResult inf = infer_family(g);
    StarCheck ok = verify_star(g, inf.family);
    CHECK(ok.ok);
    SyzygyGraph full = full_skeleton(3, 3);
    StarCheck bad = verify_star(full, inf.family);
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.witness.has_value());
    CHECK(full.has(*bad.witness));
}
