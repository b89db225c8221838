#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lcol/graph.hpp"
#include "lcol/hypergraph.hpp"
#include "lcol/lists.hpp"

namespace lcol {

/**
 * Exhaustive ground truth for small instances.
 *
 * Every routine refuses inputs above its cap with SizeLimitError.  Defaults
 * can be raised through the LCOL_ORACLE_MAX_VERTICES environment variable.
 */
struct OracleLimits {
    int max_vertices = 48;       // colouring searches
    int max_cut_vertices = 10;   // vertex-cut enumeration
    int max_cut_edges = 20;      // edge-cut enumeration

    static OracleLimits from_env();
};

std::optional<Colouring> brute_k_colourable(const Graph& g, int k, const OracleLimits& lim = OracleLimits::from_env());
int brute_chromatic(const Graph& g, const OracleLimits& lim = OracleLimits::from_env());
std::optional<Colouring> brute_list_colourable(const Graph& g, const ListAssignment& l,
                                               const OracleLimits& lim = OracleLimits::from_env());

/// Visits every proper k-colouring (no symmetry reduction); stop early by returning false.
void for_each_k_colouring(const Graph& g, int k, const std::function<bool(const Colouring&)>& visit,
                          const OracleLimits& lim = OracleLimits::from_env());

enum class CutMode { Edge, Vertex };

/// Smallest set of edges (or of other vertices) whose removal separates x from y.
/// For adjacent x, y in vertex mode the count is taken in g - xy, plus one.
int brute_min_cut(const Graph& g, int x, int y, CutMode mode, const OracleLimits& lim = OracleLimits::from_env());

bool is_k_critical(const Graph& g, int k, const OracleLimits& lim = OracleLimits::from_env());

std::optional<std::vector<int>> brute_hypergraph_colourable(const Hypergraph& h, int k,
                                                            const OracleLimits& lim = OracleLimits::from_env());
long long count_hypergraph_colourings(const Hypergraph& h, int k, const OracleLimits& lim = OracleLimits::from_env());

}  // namespace lcol
