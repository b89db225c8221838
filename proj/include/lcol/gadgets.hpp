#pragma once

#include <vector>

#include <json.hpp>

#include "lcol/graph.hpp"
#include "lcol/hypergraph.hpp"

namespace lcol {

/// A gadget graph; its outlets are vertices 0..l-1 in order.
struct Gadget {
    Graph graph;
    std::vector<int> outlets;
    std::vector<int> chain;  // degree gadgets: the l values of each recursion level
};

/**
 * Caterpillar cubic tree with l leaves: pendant edges become diamonds and
 * internal edges serial diamond pairs.  Outlets are the former leaves.
 */
Gadget hub_gadget(int l);

/**
 * G_{l,k}: outlets are the former neighbours of a vertex of degree l > k.
 * Only the outlets' incident gadget edges are included; an outlet has degree 1.
 */
Gadget degree_gadget(int l, int k);

struct ReductionOutput {
    Graph graph;
    std::vector<int> forward_map;  // original vertex -> output vertex, -1 when replaced
    nlohmann::json notes = nlohmann::json::array();
};

nlohmann::json to_json(const ReductionOutput& r, const Graph& original);

/// Replaces each vertex of degree at least 4 of a 2-connected graph by a hub gadget.
ReductionOutput reduce_to_mlc3(const Graph& g);
/// Attaches G_{d(v),k} at every vertex of degree above k of a (k-1)-connected graph.
ReductionOutput reduce_to_mleck(const Graph& g, int k);

/// Adds non-adjacent twins of separator vertices until g becomes (j+1)-connected.
Graph boost_connectivity(const Graph& g, int j);

/// H_0: k blocks of k vertices, hyperedges are the k-subsets other than the blocks.
Hypergraph rigid_hypergraph(int k);
/// Vertices of g keep their ids; H_0 follows at offset n.
Hypergraph graph_to_hypergraph(const Graph& g, int k);
/// Hypergraph vertices keep their ids, then each P_e interior, then each Q_l interior.
Graph hypergraph_to_min_kconn(const Hypergraph& h, int k);

/// 3 x x grid (row-major) plus the edges (0,0)-(2,0) and (0,x-1)-(2,x-1).
Graph grid_family(int x);

}  // namespace lcol
