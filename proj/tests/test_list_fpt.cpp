#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "lcol/fixtures.hpp"
#include "lcol/list_fpt.hpp"
#include "lcol/oracle.hpp"

using namespace lcol;

namespace {

bool proper_list_colouring(const Graph& g, const ListAssignment& l, const Colouring& c) {
    if (!respects_lists(c, l)) return false;
    for (auto [a, b] : g.edges())
        if (c[a] == c[b]) return false;
    for (int v = 0; v < g.n(); ++v)
        if (c[v] == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("gallai tree recognition") {
    CHECK(is_gallai_tree(path_graph(5)));
    CHECK(is_gallai_tree(star_graph(4)));
    CHECK_FALSE(is_gallai_tree(cycle_graph(4)));
    CHECK(is_gallai_tree(glue_at_vertex(complete_graph(4), 0, complete_graph(4), 0)));
    CHECK(is_gallai_tree(cycle_graph(7)));
    CHECK_FALSE(is_gallai_tree(wheel_graph(5)));
    CHECK_THROWS_AS(is_gallai_tree(empty_graph(2)), PreconditionError);
}

TEST_CASE("long list colouring examples") {
    Colouring one = long_list_colour(empty_graph(1), ListAssignment(std::vector<std::vector<int>>{{1}}));
    CHECK(one[0] == 1);

    ListAssignment c4({{1, 2}, {1, 2}, {1, 2, 3}, {1, 2}});
    Colouring c = long_list_colour(cycle_graph(4), c4);
    CHECK(proper_list_colouring(cycle_graph(4), c4, c));
    CHECK(brute_list_colourable(cycle_graph(4), c4).has_value());

    ListAssignment k4({{1, 2, 3}, {1, 2, 3}, {1, 2, 3}, {1, 2, 3, 4}});
    Colouring d = long_list_colour(complete_graph(4), k4);
    CHECK(proper_list_colouring(complete_graph(4), k4, d));

    CHECK_THROWS_AS(long_list_colour(cycle_graph(4), ListAssignment::uniform(4, 2)), PreconditionError);
    CHECK_THROWS_AS(long_list_colour(cycle_graph(4), ListAssignment::uniform(4, 1)), PreconditionError);
}

TEST_CASE("gallai tree colouring examples") {
    ColourOutcome c5 = gallai_tree_colour(cycle_graph(5), ListAssignment::uniform(5, 2));
    REQUIRE(c5.kind == OutcomeKind::Infeasible);
    REQUIRE(c5.list_certificate);
    CHECK(c5.list_certificate->peels.empty());
    CHECK(c5.list_certificate->terminal_block.size() == 5);
    CHECK(c5.list_certificate->terminal_list == std::vector<int>{1, 2});

    ListAssignment mixed({{1, 2}, {1, 2}, {1, 2}, {1, 2}, {2, 3}});
    ColourOutcome m = gallai_tree_colour(cycle_graph(5), mixed);
    REQUIRE(m.coloured());
    CHECK(proper_list_colouring(cycle_graph(5), mixed, m.colouring));

    ListAssignment tri({{1, 2}, {1, 2}, {1, 3}});
    ColourOutcome t = gallai_tree_colour(complete_graph(3), tri);
    REQUIRE(t.coloured());
    CHECK(proper_list_colouring(complete_graph(3), tri, t.colouring));

    ColourOutcome empty = gallai_tree_colour(empty_graph(1), ListAssignment(1));
    CHECK(empty.kind == OutcomeKind::Infeasible);

    CHECK_THROWS_AS(gallai_tree_colour(cycle_graph(4), ListAssignment::uniform(4, 2)), PreconditionError);
}

TEST_CASE("bad assignments peel down to a uniform block") {
    // Triangle with a pendant edge: the edge takes palette {3}, the triangle {1,2}.
    Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    ListAssignment l({{1, 2}, {1, 2}, {1, 2, 3}, {3}});
    CHECK_FALSE(brute_list_colourable(g, l).has_value());
    ColourOutcome r = gallai_tree_colour(g, l);
    REQUIRE(r.kind == OutcomeKind::Infeasible);
    REQUIRE(r.list_certificate);
    const auto& cert = *r.list_certificate;
    REQUIRE(cert.peels.size() == 1);
    CHECK(cert.peels[0].attachment == 2);
    CHECK(cert.terminal_list == std::vector<int>{1, 2});
}

TEST_CASE("gallai tree colouring agrees with the oracle") {
    Rng rng(61);
    int bad = 0;
    for (int t = 0; t < 300; ++t) {
        Graph g = testgen::random_gallai_tree(12, rng);
        ListAssignment l = testgen::random_degree_lists(g, rng);
        ColourOutcome r = gallai_tree_colour(g, l);
        bool oracle = brute_list_colourable(g, l).has_value();
        CHECK(r.coloured() == oracle);
        if (r.coloured())
            CHECK(proper_list_colouring(g, l, r.colouring));
        else
            ++bad;
    }
    CHECK(bad > 50);
}

TEST_CASE("degree choosable colouring examples") {
    ListAssignment same = ListAssignment::uniform(4, 2);
    Colouring c = degree_choosable_colour(cycle_graph(4), same);
    CHECK(proper_list_colouring(cycle_graph(4), same, c));

    ListAssignment shifted({{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    Colouring d = degree_choosable_colour(cycle_graph(4), shifted);
    CHECK(proper_list_colouring(cycle_graph(4), shifted, d));

    CHECK_THROWS_AS(degree_choosable_colour(cycle_graph(5), ListAssignment::uniform(5, 2)), PreconditionError);

    // K4 minus an edge with a pendant path.
    Graph g = complete_graph(4).without_edge(0, 1);
    g.add_vertex();
    g.add_vertex();
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    Rng rng(3);
    for (int t = 0; t < 100; ++t) {
        ListAssignment l = testgen::random_degree_lists(g, rng, false);
        for (int v = 0; v < g.n(); ++v) l.set(v, std::vector<int>(l[v].begin(), l[v].begin() + g.degree(v)));
        Colouring e = degree_choosable_colour(g, l);
        CHECK(proper_list_colouring(g, l, e));
        CHECK(brute_list_colourable(g, l).has_value());
    }
}

TEST_CASE("degree choosable colouring on regular cores") {
    // Uniform 3-lists on the cube and the Petersen graph go through the Brooks branch.
    for (const Graph& g : {cube_graph(), petersen_graph(), complete_bipartite(3, 3)}) {
        ListAssignment l(g.n());
        for (int v = 0; v < g.n(); ++v) l.set(v, {2, 5, 7});
        Colouring c = degree_choosable_colour(g, l);
        CHECK(proper_list_colouring(g, l, c));
    }
}

TEST_CASE("degree choosable colouring agrees with the oracle") {
    Rng rng(72);
    for (int t = 0; t < 300; ++t) {
        Graph g = testgen::random_non_gallai(12, rng);
        ListAssignment l = testgen::random_degree_lists(g, rng, false);
        Colouring c = degree_choosable_colour(g, l);
        CHECK(proper_list_colouring(g, l, c));
        CHECK(brute_list_colourable(g, l).has_value());
    }
}

TEST_CASE("peeling a uniform leaf block preserves colourability") {
    Rng rng(1234);
    for (int t = 0; t < 100; ++t) {
        testgen::LeafFixture fx = testgen::uniform_leaf_fixture(rng);
        std::vector<int> kept;
        Graph rest = fx.graph.without_vertices(fx.leaf, &kept);
        ListAssignment lr = fx.lists.restrict_to(kept);
        int att = static_cast<int>(std::find(kept.begin(), kept.end(), fx.attachment) - kept.begin());
        for (int c : fx.leaf_list) lr.remove(att, c);
        bool whole = brute_list_colourable(fx.graph, fx.lists).has_value();
        bool peeled = brute_list_colourable(rest, lr).has_value();
        CHECK(whole == peeled);
        if (fx.lists.is_degree_list(fx.graph)) CHECK(gallai_tree_colour(fx.graph, fx.lists).coloured() == whole);
    }
}

TEST_CASE("fpt colouring examples") {
    FptOutcome star = fpt_colour(star_graph(6), 3);
    REQUIRE(star.outcome.coloured());
    CHECK(star.p == 1);
    CHECK(star.outcome.colouring.distinct_colours() == 2);

    FptOutcome k5 = fpt_colour(complete_graph(5), 4);
    CHECK(k5.outcome.kind == OutcomeKind::Infeasible);
    CHECK(k5.p == 0);

    FptOutcome w5 = fpt_colour(wheel_graph(5), 3);
    CHECK(w5.outcome.kind == OutcomeKind::Infeasible);
    CHECK(w5.p == 1);
    CHECK(w5.branches == 1);
}

TEST_CASE("fpt branch counts are restricted growth strings") {
    // p independent high vertices and a K4 that fails every branch: all partitions into at most 3 classes.
    const long long expected[] = {0, 1, 2, 5, 14, 41, 122, 365, 1094};
    for (int p = 1; p <= 8; ++p) {
        Graph g = complete_graph(4);
        for (int i = 0; i < p; ++i) {
            int h = g.add_vertex();
            for (int j = 0; j < 4; ++j) g.add_edge(h, g.add_vertex());
        }
        FptOutcome r = fpt_colour(g, 3);
        CHECK(r.outcome.kind == OutcomeKind::Infeasible);
        CHECK(r.p == p);
        CHECK(r.branches == expected[p]);
    }
}

TEST_CASE("fpt colouring agrees with the oracle") {
    Rng rng(900);
    for (int t = 0; t < 300; ++t) {
        int k = 3 + t % 2;
        Graph g = testgen::fpt_instance(14, 5, k, rng);
        FptOutcome r = fpt_colour(g, k);
        bool oracle = brute_k_colourable(g, k).has_value();
        CHECK(r.outcome.coloured() == oracle);
        if (r.outcome.coloured()) CHECK(verify_colouring(g, r.outcome.colouring));
        long long bound = 1;
        for (int i = 0; i < r.p; ++i) bound *= std::min(k, r.p);
        CHECK(r.branches <= bound);
    }
}
