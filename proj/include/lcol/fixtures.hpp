#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lcol/graph.hpp"

namespace lcol {

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
/// Hub is vertex 0, rim is the cycle 1..rim.
Graph wheel_graph(int rim);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();
Graph cube_graph();
Graph prism_graph();
/// Square of the cycle C_n: i adjacent to i±1 and i±2.
Graph cycle_square(int n);
/// Adds a new vertex adjacent to every vertex; it gets the highest identifier.
Graph cone(const Graph& g);

/**
 * Eight-vertex example that is 4-connected with every local connectivity
 * at most 4, while the pair (x, y) has local edge-connectivity 5.
 * Vertices carry labels x, q, z1..z4, p, y.
 */
Graph lambda_gap_graph();
inline constexpr int lambda_gap_x = 0;
inline constexpr int lambda_gap_y = 7;

Graph disjoint_union(const Graph& a, const Graph& b);
/// Union of a and b with vertex vb of b identified with va of a.
Graph glue_at_vertex(const Graph& a, int va, const Graph& b, int vb);

/**
 * Deletes a vertex of degree d from each graph and joins the two neighbourhoods
 * by a perfect matching: the i-th neighbour of v1 meets perm[i]-th neighbour of v2.
 */
Graph splice(const Graph& g1, int v1, const Graph& g2, int v2, const std::vector<int>& perm);

using Rng = std::mt19937_64;

Graph random_gnp(int n, double p, Rng& rng);
/// Random spanning tree plus `extra` random extra edges.
Graph random_connected(int n, int extra, Rng& rng);
/// Random d-regular simple graph by repeated pairing; throws after many failures.
Graph random_regular(int n, int d, Rng& rng);

}  // namespace lcol
