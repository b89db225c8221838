#include "lcol/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace lcol {

GraphFormat parse_format_name(const std::string& name) {
    if (name == "edges") return GraphFormat::Edges;
    if (name == "dimacs") return GraphFormat::Dimacs;
    throw ParseError("unknown graph format '" + name + "'");
}

std::vector<std::string> tokenize_line(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream ss(body);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

namespace {

struct Builder {
    std::map<std::string, int> ids;
    std::vector<std::string> names;
    std::vector<Edge> edges;

    int id(const std::string& name) {
        auto [it, inserted] = ids.emplace(name, static_cast<int>(names.size()));
        if (inserted) names.push_back(name);
        return it->second;
    }
};

Graph finish(const std::vector<std::string>& names, const std::vector<Edge>& edges, bool keep_labels,
             std::vector<std::string>* warnings) {
    Graph g(static_cast<int>(names.size()));
    for (auto [u, v] : edges) {
        if (!g.add_edge(u, v) && warnings)
            warnings->push_back("duplicate edge " + names[u] + " " + names[v] + " ignored");
    }
    if (keep_labels)
        for (int v = 0; v < g.n(); ++v) g.set_label(v, names[v]);
    return g;
}

}  // namespace

Graph read_edge_list(std::istream& in, std::vector<std::string>* warnings) {
    Builder b;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tok = tokenize_line(line);
        if (tok.empty()) continue;
        if (tok.size() == 2 && tok[0] == "v") {
            b.id(tok[1]);
            continue;
        }
        if (tok.size() != 2) throw ParseError("line " + std::to_string(lineno) + ": expected two labels");
        if (tok[0] == tok[1]) throw ParseError("line " + std::to_string(lineno) + ": self-loop at " + tok[0]);
        int u = b.id(tok[0]);
        int v = b.id(tok[1]);
        b.edges.emplace_back(u, v);
    }
    return finish(b.names, b.edges, true, warnings);
}

Graph read_dimacs(std::istream& in, std::vector<std::string>* warnings) {
    std::string line;
    int n = -1;
    int lineno = 0;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string kind;
        if (!(ss >> kind) || kind == "c") continue;
        if (kind == "p") {
            std::string fmt;
            long long m = 0;
            if (!(ss >> fmt >> n >> m) || n < 0) throw ParseError("line " + std::to_string(lineno) + ": bad header");
        } else if (kind == "e") {
            int u = 0, v = 0;
            if (n < 0) throw ParseError("edge before 'p' header");
            if (!(ss >> u >> v) || u < 1 || v < 1 || u > n || v > n)
                throw ParseError("line " + std::to_string(lineno) + ": bad edge");
            if (u == v) throw ParseError("line " + std::to_string(lineno) + ": self-loop at " + std::to_string(u));
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown record '" + kind + "'");
        }
    }
    if (n < 0) throw ParseError("missing 'p edge n m' header");
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) names[i] = std::to_string(i + 1);
    return finish(names, edges, true, warnings);
}

Graph read_graph_file(const std::string& path, GraphFormat format, std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return format == GraphFormat::Dimacs ? read_dimacs(in, warnings) : read_edge_list(in, warnings);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    // Readers number vertices by first appearance; declare them all when the edges alone would renumber.
    int next = 0;
    bool in_order = true;
    std::vector<char> seen(g.n(), 0);
    for (auto [u, v] : g.edges())
        for (int w : {u, v})
            if (!seen[w]) {
                seen[w] = 1;
                in_order = in_order && w == next++;
            }
    if (!in_order || next < g.n())
        for (int v = 0; v < g.n(); ++v) out << "v " << g.label(v) << '\n';
    for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

void write_dimacs(std::ostream& out, const Graph& g) {
    out << "p edge " << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

void write_colouring(std::ostream& out, const Graph& g, const Colouring& c) {
    for (int v = 0; v < g.n(); ++v) out << g.label(v) << ' ' << c[v] << '\n';
}

Colouring read_colouring(std::istream& in, const Graph& g) {
    std::map<std::string, int> ids;
    for (int v = 0; v < g.n(); ++v) ids[g.label(v)] = v;
    Colouring c(g.n(), 0);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tok = tokenize_line(line);
        if (tok.empty()) continue;
        if (tok.size() != 2) throw ParseError("line " + std::to_string(lineno) + ": expected 'label colour'");
        auto it = ids.find(tok[0]);
        if (it == ids.end()) throw ParseError("line " + std::to_string(lineno) + ": unknown vertex " + tok[0]);
        int col = 0;
        try {
            col = std::stoi(tok[1]);
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(lineno) + ": bad colour " + tok[1]);
        }
        c[it->second] = col;
        c.k = std::max(c.k, col);
    }
    for (int v = 0; v < g.n(); ++v)
        if (c[v] == 0) throw ParseError("vertex " + g.label(v) + " has no colour");
    return c;
}

}  // namespace lcol
