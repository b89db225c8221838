#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lcol {

using Edge = std::pair<int, int>;

/// Raised when an operation's input violates a documented precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by exhaustive routines when an instance exceeds the configured cap.
class SizeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a guarantee that should hold by construction is observed to fail.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/**
 * Simple undirected graph on vertices 0..n-1.
 *
 * Neighbour lists are kept sorted, so has_edge is a binary search and
 * iteration order is deterministic.  Labels are optional and only matter
 * for IO.
 */
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int n() const { return static_cast<int>(adj_.size()); }
    long long m() const { return m_; }

    int add_vertex();
    bool add_edge(int u, int v);
    bool remove_edge(int u, int v);
    bool has_edge(int u, int v) const;
    void isolate(int v);

    const std::vector<int>& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    int min_degree() const;

    std::vector<Edge> edges() const;

    /// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
    Graph induced(const std::vector<int>& vertices) const;
    Graph without_edge(int u, int v) const;
    Graph with_edge(int u, int v) const;
    /// Deletes the listed vertices; survivors keep their relative order.
    Graph without_vertices(const std::vector<int>& removed, std::vector<int>* kept = nullptr) const;

    bool same_structure(const Graph& other) const { return adj_ == other.adj_; }

    std::string label(int v) const;
    void set_label(int v, std::string name);
    bool has_labels() const { return !labels_.empty(); }
    std::optional<int> find_label(const std::string& name) const;

private:
    void check_vertex(int v) const;

    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
    long long m_ = 0;
};

/// A total assignment of colours 1..k; 0 marks an uncoloured vertex.
struct Colouring {
    int k = 0;
    std::vector<int> colour;

    Colouring() = default;
    Colouring(int n, int k_) : k(k_), colour(n, 0) {}

    int operator[](int v) const { return colour[v]; }
    int& operator[](int v) { return colour[v]; }
    int size() const { return static_cast<int>(colour.size()); }
    int distinct_colours() const;
    bool total() const;
};

struct VerifyResult {
    bool ok = true;
    std::optional<Edge> bad_edge;
    std::optional<int> bad_vertex;
    std::string message;

    explicit operator bool() const { return ok; }
};

VerifyResult verify_colouring(const Graph& g, const Colouring& c);

struct BlockForest {
    std::vector<std::vector<int>> blocks;      // sorted vertex sets
    std::vector<int> cut_vertices;             // sorted
    std::vector<std::vector<int>> blocks_of;   // vertex -> indices into blocks

    bool is_cut(int v) const { return blocks_of[v].size() > 1; }
};

BlockForest blocks(const Graph& g);

/// Depth-first search ordering from `start`, lowest identifier first.
std::vector<int> search_ordering(const Graph& g, int start);
/// Same, on the subgraph avoiding vertices with excluded[v] != 0.
std::vector<int> search_ordering(const Graph& g, int start, const std::vector<char>& excluded);

struct StructureFlags {
    bool is_complete = false;
    bool is_odd_cycle = false;
    bool is_odd_wheel = false;
    std::optional<int> dominating_vertex;
};

StructureFlags structural_predicates(const Graph& g);

bool is_complete(const Graph& g);
bool is_odd_cycle(const Graph& g);
bool is_connected(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);
std::vector<int> bfs_distances(const Graph& g, int source);
/// Proper 2-colouring if g is bipartite.
std::optional<Colouring> two_colouring(const Graph& g);

}  // namespace lcol
