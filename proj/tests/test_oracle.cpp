#include <doctest.h>

#include <cstdlib>

#include "lcol/fixtures.hpp"
#include "lcol/oracle.hpp"

using namespace lcol;

TEST_CASE("k-colourability search") {
    CHECK_FALSE(brute_k_colourable(complete_graph(4), 3).has_value());
    auto w = brute_k_colourable(complete_graph(4), 4);
    REQUIRE(w);
    CHECK(verify_colouring(complete_graph(4), *w));
    Graph w5 = wheel_graph(5);
    for (auto [a, b] : w5.edges()) {
        Graph h = w5.without_edge(a, b);
        auto c = brute_k_colourable(h, 3);
        REQUIRE(c);
        CHECK(verify_colouring(h, *c));
    }
    // Lowest colour first: the witness is the same every time.
    CHECK(brute_k_colourable(petersen_graph(), 3)->colour == brute_k_colourable(petersen_graph(), 3)->colour);
}

TEST_CASE("chromatic numbers") {
    CHECK(brute_chromatic(petersen_graph()) == 3);
    CHECK(brute_chromatic(wheel_graph(7)) == 4);
    CHECK(brute_chromatic(empty_graph(5)) == 1);
    CHECK(brute_chromatic(Graph()) == 0);
    CHECK(brute_chromatic(cycle_graph(8)) == 2);
    CHECK(brute_chromatic(complete_graph(6)) == 6);
}

TEST_CASE("list colourability search") {
    CHECK_FALSE(brute_list_colourable(cycle_graph(5), ListAssignment::uniform(5, 2)).has_value());
    CHECK_FALSE(brute_list_colourable(empty_graph(1), ListAssignment(1)).has_value());
    auto c4 = brute_list_colourable(cycle_graph(4), ListAssignment::uniform(4, 2));
    REQUIRE(c4);
    CHECK(respects_lists(*c4, ListAssignment::uniform(4, 2)));
    // K_{2,4} is not 2-choosable for these lists.
    Graph k24 = complete_bipartite(2, 4);
    ListAssignment bad({{1, 2}, {3, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK_FALSE(brute_list_colourable(k24, bad).has_value());
}

TEST_CASE("counting colourings") {
    long long count = 0;
    for_each_k_colouring(cycle_graph(5), 3, [&](const Colouring&) {
        ++count;
        return true;
    });
    // Chromatic polynomial of C5 at 3: 2^5 - 2.
    CHECK(count == 30);
    long long first = 0;
    for_each_k_colouring(complete_graph(3), 3, [&](const Colouring&) {
        ++first;
        return false;
    });
    CHECK(first == 1);
}

TEST_CASE("minimum cuts by enumeration") {
    Graph k4 = complete_graph(4);
    CHECK(brute_min_cut(k4, 0, 1, CutMode::Edge) == 3);
    CHECK(brute_min_cut(k4, 0, 1, CutMode::Vertex) == 3);
    CHECK(brute_min_cut(path_graph(3), 0, 2, CutMode::Vertex) == 1);
    CHECK(brute_min_cut(lambda_gap_graph(), lambda_gap_x, lambda_gap_y, CutMode::Edge) == 5);
    CHECK(brute_min_cut(empty_graph(2), 0, 1, CutMode::Edge) == 0);
    CHECK_THROWS_AS(brute_min_cut(complete_graph(8), 0, 1, CutMode::Edge), SizeLimitError);
    CHECK_THROWS_AS(brute_min_cut(cycle_graph(12), 0, 6, CutMode::Vertex), SizeLimitError);
}

TEST_CASE("criticality") {
    CHECK(is_k_critical(complete_graph(4), 4));
    CHECK(is_k_critical(wheel_graph(5), 4));
    CHECK_FALSE(is_k_critical(cycle_graph(4), 3));
    CHECK(is_k_critical(cycle_graph(5), 3));
    CHECK_FALSE(is_k_critical(wheel_graph(4), 4));
}

TEST_CASE("hypergraph colourability") {
    Hypergraph h;
    h.n = 3;
    h.add_edge({0, 1, 2});
    CHECK(brute_hypergraph_colourable(h, 3).has_value());
    CHECK(count_hypergraph_colourings(h, 3) == 27 - 3);
    Hypergraph pair;
    pair.n = 2;
    pair.add_edge({0, 1});
    CHECK_FALSE(brute_hypergraph_colourable(pair, 1).has_value());
}

TEST_CASE("size caps are explicit") {
    OracleLimits tight;
    tight.max_vertices = 5;
    CHECK_THROWS_AS(brute_k_colourable(cycle_graph(6), 2, tight), SizeLimitError);
    CHECK_THROWS_AS(brute_chromatic(cycle_graph(6), tight), SizeLimitError);
    setenv("LCOL_ORACLE_MAX_VERTICES", "7", 1);
    CHECK(OracleLimits::from_env().max_vertices == 7);
    unsetenv("LCOL_ORACLE_MAX_VERTICES");
    CHECK(OracleLimits::from_env().max_vertices == 48);
}
