#include "lcol/lists.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "lcol/io.hpp"

namespace lcol {

namespace {
void normalise(std::vector<int>& l) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
}
}  // namespace

ListAssignment::ListAssignment(std::vector<std::vector<int>> l) : lists(std::move(l)) {
    for (auto& x : lists) normalise(x);
}

ListAssignment ListAssignment::uniform(int n, int k) {
    ListAssignment l(n);
    std::vector<int> all(k);
    for (int c = 0; c < k; ++c) all[c] = c + 1;
    for (auto& x : l.lists) x = all;
    return l;
}

bool ListAssignment::contains(int v, int c) const {
    return std::binary_search(lists[v].begin(), lists[v].end(), c);
}

void ListAssignment::set(int v, std::vector<int> colours) {
    normalise(colours);
    lists[v] = std::move(colours);
}

void ListAssignment::remove(int v, int c) {
    auto& l = lists[v];
    auto it = std::lower_bound(l.begin(), l.end(), c);
    if (it != l.end() && *it == c) l.erase(it);
}

bool ListAssignment::is_degree_list(const Graph& g) const {
    if (n() != g.n()) return false;
    for (int v = 0; v < g.n(); ++v)
        if (static_cast<int>(lists[v].size()) < g.degree(v)) return false;
    return true;
}

ListAssignment ListAssignment::restrict_to(const std::vector<int>& vertices) const {
    ListAssignment out(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i) out.lists[i] = lists[vertices[i]];
    return out;
}

bool respects_lists(const Colouring& c, const ListAssignment& l) {
    if (c.size() != l.n()) return false;
    for (int v = 0; v < c.size(); ++v)
        if (!l.contains(v, c[v])) return false;
    return true;
}

ListAssignment read_lists(std::istream& in, const Graph& g) {
    std::map<std::string, int> ids;
    for (int v = 0; v < g.n(); ++v) ids[g.label(v)] = v;
    ListAssignment l(g.n());
    std::vector<char> seen(g.n(), 0);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string body = line.substr(0, line.find('#'));
        auto colon = body.find(':');
        if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (colon == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": expected 'label: colours'");
        auto head = tokenize_line(body.substr(0, colon));
        if (head.size() != 1) throw ParseError("line " + std::to_string(lineno) + ": bad vertex label");
        auto it = ids.find(head[0]);
        if (it == ids.end()) throw ParseError("line " + std::to_string(lineno) + ": unknown vertex " + head[0]);
        std::vector<int> colours;
        for (const auto& tok : tokenize_line(body.substr(colon + 1))) {
            try {
                colours.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw ParseError("line " + std::to_string(lineno) + ": bad colour " + tok);
            }
            if (colours.back() < 1) throw ParseError("line " + std::to_string(lineno) + ": colours must be positive");
        }
        l.set(it->second, std::move(colours));
        seen[it->second] = 1;
    }
    for (int v = 0; v < g.n(); ++v)
        if (!seen[v]) throw ParseError("vertex " + g.label(v) + " has no list");
    return l;
}

void write_lists(std::ostream& out, const Graph& g, const ListAssignment& l) {
    for (int v = 0; v < g.n(); ++v) {
        out << g.label(v) << ':';
        for (int c : l[v]) out << ' ' << c;
        out << '\n';
    }
}

}  // namespace lcol
