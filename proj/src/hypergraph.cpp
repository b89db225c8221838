#include "lcol/hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>

#include "lcol/io.hpp"

namespace lcol {

bool Hypergraph::is_uniform(int k) const {
    return std::all_of(edges.begin(), edges.end(), [k](const auto& e) { return static_cast<int>(e.size()) == k; });
}

std::string Hypergraph::label(int v) const {
    if (v < static_cast<int>(labels.size()) && !labels[v].empty()) return labels[v];
    return std::to_string(v);
}

void Hypergraph::add_edge(std::vector<int> e) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    edges.push_back(std::move(e));
}

bool hypergraph_colouring_ok(const Hypergraph& h, const std::vector<int>& colour) {
    for (const auto& e : h.edges) {
        if (e.empty()) continue;
        bool mono = std::all_of(e.begin(), e.end(), [&](int v) { return colour[v] == colour[e.front()]; });
        if (mono) return false;
    }
    return true;
}

Hypergraph read_hypergraph(std::istream& in) {
    Hypergraph h;
    std::map<std::string, int> ids;
    auto id = [&](const std::string& name) {
        auto [it, inserted] = ids.emplace(name, h.n);
        if (inserted) {
            ++h.n;
            h.labels.push_back(name);
        }
        return it->second;
    };
    std::string line;
    while (std::getline(in, line)) {
        auto tok = tokenize_line(line);
        if (tok.empty()) continue;
        if (tok.size() == 2 && tok[0] == "v") {
            id(tok[1]);
            continue;
        }
        std::vector<int> e;
        for (const auto& t : tok) e.push_back(id(t));
        std::vector<int> sorted = e;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ParseError("hyperedge repeats a vertex: " + line);
        h.add_edge(std::move(e));
    }
    return h;
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
    int next = 0;
    bool in_order = true;
    std::vector<char> seen(h.n, 0);
    for (const auto& e : h.edges)
        for (int v : e)
            if (!seen[v]) {
                seen[v] = 1;
                in_order = in_order && v == next++;
            }
    if (!in_order || next < h.n)
        for (int v = 0; v < h.n; ++v) out << "v " << h.label(v) << '\n';
    for (const auto& e : h.edges) {
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << h.label(e[i]);
        out << '\n';
    }
}

}  // namespace lcol
