#pragma once

#include <climits>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "lcol/graph.hpp"

namespace lcol {

/// Edges are stored as (x-side endpoint, y-side endpoint).
struct EdgeCut {
    std::vector<Edge> edges;
    std::vector<int> x_side;
    std::vector<int> y_side;

    std::vector<int> x_endpoints() const;
    std::vector<int> y_endpoints() const;
    bool vertex_disjoint() const;
};

struct Separation {
    std::vector<int> x_side;
    std::vector<int> separator;
    std::vector<int> y_side;
};

/**
 * Unit-capacity augmenting-path flow between two vertices of an undirected
 * graph.  Flow is kept in a hash map and the search buffers persist between
 * calls, so repeated flows whose augmenting paths stay local cost time
 * proportional to the explored region rather than to n.
 *
 * The graph is held by reference and may be edited between calls to run().
 */
class EdgeFlow {
public:
    explicit EdgeFlow(const Graph& g) : g_(g) {}

    /// Augments from s to t until no path remains or the value reaches limit.
    int run(int s, int t, int limit = INT_MAX);
    int value() const { return value_; }

    /// Vertices reachable from s in the residual graph, or nullopt if more than cap.
    std::optional<std::vector<int>> source_side(std::size_t cap = SIZE_MAX) const;
    /// Vertices that can reach t in the residual graph, or nullopt if more than cap.
    std::optional<std::vector<int>> sink_side(std::size_t cap = SIZE_MAX) const;

private:
    int flow(int u, int v) const;
    void push(int u, int v);
    bool augment();
    std::optional<std::vector<int>> reach(int root, bool forward, std::size_t cap) const;
    void prepare() const;

    const Graph& g_;
    int s_ = -1, t_ = -1, value_ = 0;
    std::unordered_map<std::uint64_t, int> f_;
    mutable std::vector<int> stamp_, parent_;
    mutable int epoch_ = 0;
};

struct EdgeConnectivity {
    int value = 0;
    EdgeCut cut;
};

struct VertexConnectivity {
    int value = 0;
    std::optional<Separation> separation;  // non-adjacent pairs; adjacent pairs report the cut in g - xy
};

EdgeConnectivity local_edge_connectivity(const Graph& g, int x, int y);
int local_edge_connectivity_value(const Graph& g, int x, int y, int limit = INT_MAX);

VertexConnectivity local_vertex_connectivity(const Graph& g, int x, int y);
int local_vertex_connectivity_value(const Graph& g, int x, int y, int limit = INT_MAX);

int global_connectivity(const Graph& g);
/// A minimum vertex cut with the pair it separates; nullopt for complete graphs.
std::optional<Separation> minimum_vertex_separation(const Graph& g);
bool is_k_connected(const Graph& g, int k);

struct ClassReport {
    int k = 0;
    int n = 0;
    long long m = 0;
    bool c0 = false, c1 = false, c2 = false, c3 = false;
    bool c0_hat = false, c1_hat = false, c2_hat = false, c3_hat = false;
    bool minimally_k_connected = false;
    int max_degree = 0;
    int global_connectivity = 0;
    int max_lambda = 0;
    int max_kappa = 0;
    int max_edge_kappa = 0;
    std::optional<Edge> max_lambda_pair;
    std::optional<Edge> max_kappa_pair;
};

ClassReport classify(const Graph& g, int k);
/// Pairwise local edge-connectivity bounded by k, stopping at the first violation.
std::optional<Edge> find_lambda_violation(const Graph& g, int k);

nlohmann::json to_json(const ClassReport& r, const Graph& g);

}  // namespace lcol
