#pragma once

#include <vector>

#include "lcol/fixtures.hpp"
#include "lcol/graph.hpp"
#include "lcol/lists.hpp"

namespace lcol::testgen {

/// Graphs that are k-connected with every local edge-connectivity at most k (k = 3 or 4), n <= max_n.
std::vector<Graph> mlec_instances(int k, int count, int max_n, Rng& rng);

/// Graphs with local edge-connectivity at most 3 whose blocks mix wheel morasses and other blocks.
std::vector<Graph> mlec3_instances(int count, int max_n, Rng& rng);

/// Random connected graph whose blocks are cliques (up to K4) and odd cycles.
Graph random_gallai_tree(int max_n, Rng& rng);

/**
 * Degree lists on a Gallai tree: with probability one half, an uncolourable
 * assignment built from disjoint per-block palettes, otherwise random lists
 * of size d(v) drawn from a small palette.
 */
ListAssignment random_degree_lists(const Graph& g, Rng& rng, bool allow_bad = true);

/// Connected graph that is not a Gallai tree.
Graph random_non_gallai(int max_n, Rng& rng);

struct LeafFixture {
    Graph graph;
    ListAssignment lists;
    std::vector<int> leaf;  // vertices of the uniform leaf block other than the attachment
    int attachment = -1;
    std::vector<int> leaf_list;
};

/// Gallai tree with a leaf block whose non-attachment vertices share one list of size equal to their degree.
LeafFixture uniform_leaf_fixture(Rng& rng);

/// One representative per isomorphism class of graphs on n <= 6 vertices.
std::vector<Graph> nonisomorphic_graphs(int n);

/// Random graph with at most max_p vertices of degree above k.
Graph fpt_instance(int max_n, int max_p, int k, Rng& rng);

}  // namespace lcol::testgen
