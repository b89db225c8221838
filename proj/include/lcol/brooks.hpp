#pragma once

#include <optional>
#include <vector>

#include "lcol/graph.hpp"
#include "lcol/outcome.hpp"

namespace lcol {

/**
 * Colours the vertices in `order`, each with the lowest colour in 1..k not
 * used by an already coloured neighbour.  Vertices coloured in `preset`
 * keep their colour and are skipped.  `order` together with the preset
 * vertices must cover V(g).  On failure the outcome is Infeasible with the
 * stuck vertex and keeps the partial colouring.
 */
ColourOutcome greedy_colour(const Graph& g, const std::vector<int>& order, int k,
                            const Colouring* preset = nullptr);

/// Connected g with max degree at most k.  Returns Complete for K_{k+1} and OddCycle for k = 2.
ColourOutcome brooks_colour(const Graph& g, int k);

/**
 * k-colouring of a 3-connected graph with at most one vertex of degree above k
 * and no dominating vertex.  The max-degree vertex h and a vertex y at
 * distance two always share colour 1.  Preconditions are verified unless
 * check is false.
 */
Colouring lovasz_colour(const Graph& g, int k, bool check = true);

/**
 * Combines independent colourings of the blocks of g (block i coloured in
 * the local ids of blocks[i]) into one colouring of g by swapping colours
 * along the block-cut tree.
 */
Colouring glue_blocks(const Graph& g, const BlockForest& forest, const std::vector<Colouring>& per_block, int k);

/// v with non-adjacent neighbours a, b such that g - {a, b} is connected.
struct BrooksTriple {
    int v = -1, a = -1, b = -1;
};

/// Looks for such a triple in a 2-connected graph of minimum degree at least 3 that is not complete.
std::optional<BrooksTriple> find_brooks_triple(const Graph& g);

}  // namespace lcol
