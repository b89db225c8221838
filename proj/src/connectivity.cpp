#include "lcol/connectivity.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace lcol {

std::vector<int> EdgeCut::x_endpoints() const {
    std::vector<int> v;
    for (auto [a, b] : edges) v.push_back(a);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<int> EdgeCut::y_endpoints() const {
    std::vector<int> v;
    for (auto [a, b] : edges) v.push_back(b);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool EdgeCut::vertex_disjoint() const {
    return x_endpoints().size() == edges.size() && y_endpoints().size() == edges.size();
}

// ---------------------------------------------------------------------------
// EdgeFlow

namespace {
std::uint64_t key(int u, int v) { return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v); }
}  // namespace

int EdgeFlow::flow(int u, int v) const {
    if (u < v) {
        auto it = f_.find(key(u, v));
        return it == f_.end() ? 0 : it->second;
    }
    auto it = f_.find(key(v, u));
    return it == f_.end() ? 0 : -it->second;
}

void EdgeFlow::push(int u, int v) {
    if (u < v) {
        if (++f_[key(u, v)] == 0) f_.erase(key(u, v));
    } else {
        if (--f_[key(v, u)] == 0) f_.erase(key(v, u));
    }
}

void EdgeFlow::prepare() const {
    if (static_cast<int>(stamp_.size()) < g_.n()) {
        stamp_.assign(g_.n(), 0);
        parent_.assign(g_.n(), -1);
        epoch_ = 0;
    }
    if (++epoch_ == INT_MAX) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        epoch_ = 1;
    }
}

bool EdgeFlow::augment() {
    prepare();
    std::queue<int> q;
    q.push(s_);
    stamp_[s_] = epoch_;
    parent_[s_] = -1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g_.neighbours(u)) {
            if (stamp_[w] == epoch_ || flow(u, w) >= 1) continue;
            stamp_[w] = epoch_;
            parent_[w] = u;
            if (w == t_) {
                for (int v = t_; v != s_; v = parent_[v]) push(parent_[v], v);
                return true;
            }
            q.push(w);
        }
    }
    return false;
}

int EdgeFlow::run(int s, int t, int limit) {
    if (s == t) throw PreconditionError("flow endpoints must differ");
    s_ = s;
    t_ = t;
    value_ = 0;
    f_.clear();
    while (value_ < limit && augment()) ++value_;
    return value_;
}

std::optional<std::vector<int>> EdgeFlow::reach(int root, bool forward, std::size_t cap) const {
    prepare();
    std::vector<int> out{root};
    stamp_[root] = epoch_;
    for (std::size_t i = 0; i < out.size(); ++i) {
        int u = out[i];
        for (int w : g_.neighbours(u)) {
            if (stamp_[w] == epoch_) continue;
            bool open = forward ? flow(u, w) < 1 : flow(w, u) < 1;
            if (!open) continue;
            stamp_[w] = epoch_;
            out.push_back(w);
            if (out.size() > cap) return std::nullopt;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::vector<int>> EdgeFlow::source_side(std::size_t cap) const { return reach(s_, true, cap); }
std::optional<std::vector<int>> EdgeFlow::sink_side(std::size_t cap) const { return reach(t_, false, cap); }

// ---------------------------------------------------------------------------
// Vertex connectivity through the split-vertex network.

namespace {

struct Network {
    struct Arc {
        int to, cap;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out;

    explicit Network(int nodes) : out(nodes) {}

    void add(int u, int v, int cap) {
        out[u].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({v, cap});
        out[v].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({u, 0});
    }

    int maxflow(int s, int t, int limit) {
        int total = 0;
        std::vector<int> via(out.size());
        while (total < limit) {
            std::fill(via.begin(), via.end(), -1);
            std::queue<int> q;
            q.push(s);
            via[s] = -2;
            while (!q.empty() && via[t] == -1) {
                int u = q.front();
                q.pop();
                for (int a : out[u]) {
                    if (arcs[a].cap > 0 && via[arcs[a].to] == -1) {
                        via[arcs[a].to] = a;
                        q.push(arcs[a].to);
                    }
                }
            }
            if (via[t] == -1) break;
            for (int v = t; v != s; v = arcs[via[v] ^ 1].to) {
                arcs[via[v]].cap -= 1;
                arcs[via[v] ^ 1].cap += 1;
            }
            ++total;
        }
        return total;
    }

    std::vector<char> reachable(int s) const {
        std::vector<char> seen(out.size(), 0);
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int a : out[u])
                if (arcs[a].cap > 0 && !seen[arcs[a].to]) {
                    seen[arcs[a].to] = 1;
                    q.push(arcs[a].to);
                }
        }
        return seen;
    }
};

// Non-adjacent x, y only.
int split_flow(const Graph& g, int x, int y, int limit, Separation* sep) {
    const int n = g.n();
    const int big = n + 1;
    Network net(2 * n);
    for (int v = 0; v < n; ++v) net.add(2 * v, 2 * v + 1, (v == x || v == y) ? big : 1);
    for (auto [u, v] : g.edges()) {
        net.add(2 * u + 1, 2 * v, big);
        net.add(2 * v + 1, 2 * u, big);
    }
    int value = net.maxflow(2 * x + 1, 2 * y, limit);
    if (sep) {
        auto seen = net.reachable(2 * x + 1);
        sep->x_side.clear();
        sep->separator.clear();
        sep->y_side.clear();
        for (int v = 0; v < n; ++v) {
            if (v == x || (seen[2 * v] && seen[2 * v + 1]))
                sep->x_side.push_back(v);
            else if (seen[2 * v])
                sep->separator.push_back(v);
            else
                sep->y_side.push_back(v);
        }
    }
    return value;
}

void check_pair(const Graph& g, int x, int y) {
    if (x < 0 || y < 0 || x >= g.n() || y >= g.n()) throw PreconditionError("vertex out of range");
    if (x == y) throw PreconditionError("local connectivity needs two distinct vertices");
}

}  // namespace

EdgeConnectivity local_edge_connectivity(const Graph& g, int x, int y) {
    check_pair(g, x, y);
    EdgeFlow flow(g);
    EdgeConnectivity r;
    r.value = flow.run(x, y);
    r.cut.x_side = *flow.source_side();
    std::vector<char> in_x(g.n(), 0);
    for (int v : r.cut.x_side) in_x[v] = 1;
    for (int v = 0; v < g.n(); ++v)
        if (!in_x[v]) r.cut.y_side.push_back(v);
    for (int u : r.cut.x_side)
        for (int w : g.neighbours(u))
            if (!in_x[w]) r.cut.edges.emplace_back(u, w);
    return r;
}

int local_edge_connectivity_value(const Graph& g, int x, int y, int limit) {
    check_pair(g, x, y);
    EdgeFlow flow(g);
    return flow.run(x, y, limit);
}

VertexConnectivity local_vertex_connectivity(const Graph& g, int x, int y) {
    check_pair(g, x, y);
    VertexConnectivity r;
    Separation sep;
    if (g.has_edge(x, y)) {
        Graph h = g.without_edge(x, y);
        r.value = split_flow(h, x, y, INT_MAX, &sep) + 1;
    } else {
        r.value = split_flow(g, x, y, INT_MAX, &sep);
    }
    r.separation = std::move(sep);
    return r;
}

int local_vertex_connectivity_value(const Graph& g, int x, int y, int limit) {
    check_pair(g, x, y);
    if (g.has_edge(x, y)) {
        Graph h = g.without_edge(x, y);
        return split_flow(h, x, y, limit == INT_MAX ? INT_MAX : limit - 1, nullptr) + 1;
    }
    return split_flow(g, x, y, limit, nullptr);
}

namespace {

// Even's scan: only pairs whose first vertex is among the first kappa+1 identifiers.
std::optional<Separation> scan_min_separation(const Graph& g, int* value) {
    const int n = g.n();
    if (n < 2) throw PreconditionError("global connectivity needs at least two vertices");
    int best = n - 1;
    std::optional<Separation> arg;
    if (is_complete(g)) {
        *value = best;
        return arg;
    }
    for (int i = 0; i < n && i <= best; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (g.has_edge(i, j)) continue;
            int v = split_flow(g, i, j, best, nullptr);
            if (v < best || !arg) {
                Separation s;
                best = split_flow(g, i, j, INT_MAX, &s);
                arg = std::move(s);
            }
        }
    }
    *value = best;
    return arg;
}

}  // namespace

int global_connectivity(const Graph& g) {
    int value = 0;
    scan_min_separation(g, &value);
    return value;
}

std::optional<Separation> minimum_vertex_separation(const Graph& g) {
    int value = 0;
    return scan_min_separation(g, &value);
}

bool is_k_connected(const Graph& g, int k) {
    if (g.n() < 2) return k <= 0;
    return global_connectivity(g) >= k;
}

std::optional<Edge> find_lambda_violation(const Graph& g, int k) {
    std::vector<int> hi;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > k) hi.push_back(v);
    // lambda(x,y) <= min degree, so only pairs of high-degree vertices can exceed k
    EdgeFlow flow(g);
    for (std::size_t a = 0; a < hi.size(); ++a)
        for (std::size_t b = a + 1; b < hi.size(); ++b)
            if (flow.run(hi[a], hi[b], k + 1) > k) return Edge{hi[a], hi[b]};
    return std::nullopt;
}

ClassReport classify(const Graph& g, int k) {
    if (k < 1) throw PreconditionError("classify needs k >= 1");
    ClassReport r;
    r.k = k;
    r.n = g.n();
    r.m = g.m();
    r.max_degree = g.max_degree();
    const int n = g.n();
    EdgeFlow flow(g);
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            int cap = std::min(g.degree(x), g.degree(y));
            int lam = cap > r.max_lambda ? flow.run(x, y, cap) : 0;
            if (lam > r.max_lambda) {
                r.max_lambda = lam;
                r.max_lambda_pair = Edge{x, y};
            }
            bool adjacent = g.has_edge(x, y);
            if (cap <= r.max_kappa && (!adjacent || cap <= r.max_edge_kappa)) continue;
            int kap = local_vertex_connectivity_value(g, x, y);
            if (kap > r.max_kappa) {
                r.max_kappa = kap;
                r.max_kappa_pair = Edge{x, y};
            }
            if (adjacent) r.max_edge_kappa = std::max(r.max_edge_kappa, kap);
        }
    }
    r.global_connectivity = n >= 2 ? global_connectivity(g) : 0;
    bool kconn = n >= 2 && r.global_connectivity >= k;
    r.c0 = r.max_degree <= k;
    r.c1 = r.max_lambda <= k;
    r.c2 = r.max_kappa <= k;
    r.c3 = r.max_edge_kappa <= k;
    r.c0_hat = r.c0 && kconn;
    r.c1_hat = r.c1 && kconn;
    r.c2_hat = r.c2 && kconn;
    r.c3_hat = r.c3 && kconn;
    if (kconn) {
        // In a k-connected graph every cut of size < k in g - uv separates u from v.
        bool minimal = true;
        for (auto [u, v] : g.edges()) {
            Graph h = g.without_edge(u, v);
            if (local_vertex_connectivity_value(h, u, v, k) >= k) {
                minimal = false;
                break;
            }
        }
        r.minimally_k_connected = minimal;
    }
    return r;
}

nlohmann::json to_json(const ClassReport& r, const Graph& g) {
    auto pair = [&](const std::optional<Edge>& e) {
        if (!e) return nlohmann::json(nullptr);
        return nlohmann::json::array({g.label(e->first), g.label(e->second)});
    };
    nlohmann::json j;
    j["k"] = r.k;
    j["n"] = r.n;
    j["m"] = r.m;
    j["flags"] = {
        {"C0", r.c0},         {"C1", r.c1},         {"C2", r.c2},         {"C3", r.c3},
        {"C0_hat", r.c0_hat}, {"C1_hat", r.c1_hat}, {"C2_hat", r.c2_hat}, {"C3_hat", r.c3_hat},
        {"minimally_k_connected", r.minimally_k_connected},
    };
    j["max_degree"] = r.max_degree;
    j["global_connectivity"] = r.global_connectivity;
    j["max_lambda"] = r.max_lambda;
    j["max_lambda_pair"] = pair(r.max_lambda_pair);
    j["max_kappa"] = r.max_kappa;
    j["max_kappa_pair"] = pair(r.max_kappa_pair);
    j["max_edge_kappa"] = r.max_edge_kappa;
    return j;
}

}  // namespace lcol
