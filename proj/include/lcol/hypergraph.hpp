#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lcol {

struct Hypergraph {
    int n = 0;
    std::vector<std::vector<int>> edges;  // each sorted
    std::vector<std::string> labels;

    bool is_uniform(int k) const;
    std::string label(int v) const;
    void add_edge(std::vector<int> e);
};

/// True iff no hyperedge is monochromatic under `colour` (indexed by vertex).
bool hypergraph_colouring_ok(const Hypergraph& h, const std::vector<int>& colour);

// One hyperedge per line as whitespace-separated labels; "v <label>" declares a lone vertex.
Hypergraph read_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

}  // namespace lcol
