#include "lcol/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_map>

namespace lcol {

Graph::Graph(int n) : adj_(n) {
    if (n < 0) throw PreconditionError("negative vertex count");
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
}

int Graph::add_vertex() {
    adj_.emplace_back();
    if (!labels_.empty()) labels_.emplace_back();
    return n() - 1;
}

bool Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return false;
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++m_;
    return true;
}

bool Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it == au.end() || *it != v) return false;
    au.erase(it);
    auto& av = adj_[v];
    av.erase(std::lower_bound(av.begin(), av.end(), u));
    --m_;
    return true;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n() || v >= n()) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int target = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), target);
}

void Graph::isolate(int v) {
    check_vertex(v);
    for (int w : adj_[v]) {
        auto& aw = adj_[w];
        aw.erase(std::lower_bound(aw.begin(), aw.end(), v));
    }
    m_ -= static_cast<long long>(adj_[v].size());
    adj_[v].clear();
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

int Graph::min_degree() const {
    if (adj_.empty()) return 0;
    int d = n();
    for (const auto& a : adj_) d = std::min(d, static_cast<int>(a.size()));
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
    // Small subsets of large graphs use a hash map so the cost stays proportional to the subset.
    const bool sparse = vertices.size() * 8 < adj_.size();
    std::vector<int> pos(sparse ? 0 : n(), -1);
    std::unordered_map<int, int> hpos;
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
        check_vertex(vertices[i]);
        bool fresh = sparse ? hpos.emplace(vertices[i], i).second : pos[vertices[i]] == -1;
        if (!fresh) throw PreconditionError("repeated vertex in induced()");
        if (!sparse) pos[vertices[i]] = i;
    }
    auto where = [&](int w) {
        if (!sparse) return pos[w];
        auto it = hpos.find(w);
        return it == hpos.end() ? -1 : it->second;
    };
    Graph h(static_cast<int>(vertices.size()));
    for (int i = 0; i < h.n(); ++i) {
        for (int w : adj_[vertices[i]]) {
            int j = where(w);
            if (j > i) h.add_edge(i, j);
        }
    }
    if (has_labels())
        for (int i = 0; i < h.n(); ++i) h.set_label(i, label(vertices[i]));
    return h;
}

Graph Graph::without_edge(int u, int v) const {
    Graph h = *this;
    if (!h.remove_edge(u, v)) throw PreconditionError("edge not present");
    return h;
}

Graph Graph::with_edge(int u, int v) const {
    Graph h = *this;
    h.add_edge(u, v);
    return h;
}

Graph Graph::without_vertices(const std::vector<int>& removed, std::vector<int>* kept) const {
    std::vector<char> gone(n(), 0);
    for (int v : removed) {
        check_vertex(v);
        gone[v] = 1;
    }
    std::vector<int> keep;
    for (int v = 0; v < n(); ++v)
        if (!gone[v]) keep.push_back(v);
    if (kept) *kept = keep;
    return induced(keep);
}

std::string Graph::label(int v) const {
    if (v >= 0 && v < static_cast<int>(labels_.size()) && !labels_[v].empty()) return labels_[v];
    return std::to_string(v);
}

void Graph::set_label(int v, std::string name) {
    check_vertex(v);
    if (labels_.size() < adj_.size()) labels_.resize(adj_.size());
    labels_[v] = std::move(name);
}

std::optional<int> Graph::find_label(const std::string& name) const {
    for (int v = 0; v < n(); ++v)
        if (label(v) == name) return v;
    return std::nullopt;
}

int Colouring::distinct_colours() const {
    std::set<int> s;
    for (int c : colour)
        if (c != 0) s.insert(c);
    return static_cast<int>(s.size());
}

bool Colouring::total() const {
    return std::all_of(colour.begin(), colour.end(), [](int c) { return c != 0; });
}

VerifyResult verify_colouring(const Graph& g, const Colouring& c) {
    VerifyResult r;
    if (c.size() != g.n()) {
        r.ok = false;
        r.message = "colouring has " + std::to_string(c.size()) + " entries for " + std::to_string(g.n()) +
                    " vertices";
        return r;
    }
    for (int v = 0; v < g.n(); ++v) {
        if (c[v] < 1 || c[v] > c.k) {
            r.ok = false;
            r.bad_vertex = v;
            r.message = "vertex " + g.label(v) + " has colour " + std::to_string(c[v]) + " outside 1.." +
                        std::to_string(c.k);
            return r;
        }
    }
    for (auto [u, v] : g.edges()) {
        if (c[u] == c[v]) {
            r.ok = false;
            r.bad_edge = Edge{u, v};
            r.message = "edge " + g.label(u) + " " + g.label(v) + " is monochromatic";
            return r;
        }
    }
    return r;
}

BlockForest blocks(const Graph& g) {
    const int n = g.n();
    BlockForest bf;
    bf.blocks_of.assign(n, {});
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> estack;
    struct Frame {
        int v, parent;
        std::size_t next;
    };
    std::vector<Frame> frames;
    int timer = 0;

    auto emit = [&](std::vector<int> verts) {
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        int id = static_cast<int>(bf.blocks.size());
        for (int v : verts) bf.blocks_of[v].push_back(id);
        bf.blocks.push_back(std::move(verts));
    };

    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        if (g.degree(root) == 0) {
            disc[root] = timer++;
            emit({root});
            continue;
        }
        disc[root] = low[root] = timer++;
        frames.push_back({root, -1, 0});
        while (!frames.empty()) {
            Frame& f = frames.back();
            int v = f.v;
            const auto& nb = g.neighbours(v);
            if (f.next < nb.size()) {
                int w = nb[f.next++];
                if (w == f.parent) continue;
                if (disc[w] == -1) {
                    estack.emplace_back(v, w);
                    disc[w] = low[w] = timer++;
                    frames.push_back({w, v, 0});
                } else if (disc[w] < disc[v]) {
                    estack.emplace_back(v, w);
                    low[v] = std::min(low[v], disc[w]);
                }
                continue;
            }
            int p = f.parent;
            frames.pop_back();
            if (p < 0) continue;
            low[p] = std::min(low[p], low[v]);
            if (low[v] >= disc[p]) {
                std::vector<int> verts;
                while (true) {
                    Edge e = estack.back();
                    estack.pop_back();
                    verts.push_back(e.first);
                    verts.push_back(e.second);
                    if (e.first == p && e.second == v) break;
                }
                emit(std::move(verts));
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (bf.blocks_of[v].size() > 1) bf.cut_vertices.push_back(v);
    return bf;
}

std::vector<int> search_ordering(const Graph& g, int start, const std::vector<char>& excluded) {
    if (start < 0 || start >= g.n() || excluded[start])
        throw PreconditionError("search ordering start vertex is not in the graph");
    std::vector<char> seen(excluded.begin(), excluded.end());
    std::vector<int> order;
    std::vector<std::pair<int, std::size_t>> stack;
    seen[start] = 1;
    order.push_back(start);
    stack.emplace_back(start, 0);
    while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        const auto& nb = g.neighbours(v);
        while (idx < nb.size() && seen[nb[idx]]) ++idx;
        if (idx == nb.size()) {
            stack.pop_back();
            continue;
        }
        int w = nb[idx++];
        seen[w] = 1;
        order.push_back(w);
        stack.emplace_back(w, 0);
    }
    std::size_t expected = 0;
    for (char e : excluded)
        if (!e) ++expected;
    if (order.size() != expected) throw PreconditionError("search ordering requires a connected graph");
    return order;
}

std::vector<int> search_ordering(const Graph& g, int start) {
    return search_ordering(g, start, std::vector<char>(g.n(), 0));
}

bool is_complete(const Graph& g) {
    long long n = g.n();
    return g.m() == n * (n - 1) / 2;
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    auto d = bfs_distances(g, 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

bool is_odd_cycle(const Graph& g) {
    if (g.n() < 3 || g.n() % 2 == 0) return false;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) != 2) return false;
    return is_connected(g);
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<int> comp(g.n(), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<int> q;
        q.push(s);
        comp[s] = id;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            out[id].push_back(v);
            for (int w : g.neighbours(v))
                if (comp[w] == -1) {
                    comp[w] = id;
                    q.push(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.n(), -1);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbours(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

std::optional<Colouring> two_colouring(const Graph& g) {
    Colouring c(g.n(), 2);
    for (int s = 0; s < g.n(); ++s) {
        if (c[s]) continue;
        c[s] = 1;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbours(v)) {
                if (!c[w]) {
                    c[w] = 3 - c[v];
                    q.push(w);
                } else if (c[w] == c[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return c;
}

StructureFlags structural_predicates(const Graph& g) {
    StructureFlags f;
    const int n = g.n();
    f.is_complete = is_complete(g);
    f.is_odd_cycle = is_odd_cycle(g);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == n - 1) {
            f.dominating_vertex = v;
            break;
        }
    if (n >= 4 && (n - 1) % 2 == 1 && g.m() == 2LL * (n - 1)) {
        for (int h = 0; h < n && !f.is_odd_wheel; ++h) {
            if (g.degree(h) != n - 1) continue;
            Graph rim = g.without_vertices({h});
            f.is_odd_wheel = is_odd_cycle(rim);
        }
    }
    return f;
}

}  // namespace lcol
