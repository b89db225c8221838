#pragma once

#include "lcol/graph.hpp"
#include "lcol/lists.hpp"
#include "lcol/outcome.hpp"

namespace lcol {

/// Connected graph whose blocks are all cliques or odd cycles.
bool is_gallai_tree(const Graph& g);

/// Greedy L-colouring along a reversed search ordering rooted at a vertex with |L(v)| > d(v).
Colouring long_list_colour(const Graph& g, const ListAssignment& l);

/**
 * L-colouring of a Gallai tree under a degree-list-assignment, or Infeasible
 * with a ListCertificate: the uniform leaf blocks peeled off, then a final
 * clique or odd cycle on which every list is the same.
 */
ColourOutcome gallai_tree_colour(const Graph& g, const ListAssignment& l);

/// L-colouring of a connected graph that is not a Gallai tree; always exists.
Colouring degree_choosable_colour(const Graph& g, const ListAssignment& l);

struct FptOutcome {
    ColourOutcome outcome;
    long long branches = 0;  // colourings of the high-degree vertices tried
    int p = 0;               // number of vertices of degree above k
};

/// k-colouring by guessing the colours of the p vertices of degree above k.
FptOutcome fpt_colour(const Graph& g, int k);

}  // namespace lcol
