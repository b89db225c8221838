#pragma once

#include <optional>
#include <vector>

#include "lcol/connectivity.hpp"
#include "lcol/graph.hpp"
#include "lcol/outcome.hpp"

namespace lcol {

struct IsolatingCut {
    EdgeCut cut;       // x_side holds the isolated vertex and no other vertex of degree > k
    int isolated = -1;
};

/**
 * k-edge cut with pairwise vertex-disjoint edges such that one side holds
 * exactly one vertex of degree above k.  One flow between two high-degree
 * vertices, followed by shrinking the small side with further flows.
 */
IsolatingCut find_isolating_edge_cut(const Graph& g, int k, bool check = true);

enum class CutSide { X, Y };

/**
 * The kept side plus the far endpoints of the cut, with the far endpoints
 * completed to a clique.  Vertices appear in increasing original id;
 * `map` receives local id -> original id.
 */
Graph cap_side(const Graph& g, const EdgeCut& cut, CutSide keep, std::vector<int>* map = nullptr);

/**
 * c1 is read on cut.x_side and c2 on cut.y_side (both indexed by g's vertices).
 * Returns c1 on the x side and sigma(c2) on the y side for a colour
 * permutation sigma making the result proper, or Infeasible when the cut
 * endpoint images have sizes {1, k}.
 */
ColourOutcome merge_colourings(const Graph& g, const EdgeCut& cut, const Colouring& c1, const Colouring& c2);

struct MlecOptions {
    bool check_preconditions = true;  // all-pairs class test before running
    bool audit = false;               // classify every capped graph along the way
};

/// k-connected g with local edge-connectivity at most k everywhere, k >= 3.
ColourOutcome colour_kconn_mleck(const Graph& g, int k, const MlecOptions& opt = {});

}  // namespace lcol
