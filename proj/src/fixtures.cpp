#include "lcol/fixtures.hpp"

#include <algorithm>
#include <numeric>

namespace lcol {

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph wheel_graph(int rim) {
    if (rim < 3) throw PreconditionError("wheel rim needs at least 3 vertices");
    Graph g(rim + 1);
    for (int i = 1; i <= rim; ++i) {
        g.add_edge(0, i);
        g.add_edge(i, i % rim + 1);
    }
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

Graph cube_graph() {
    Graph g(8);
    for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b) g.add_edge(v, v ^ (1 << b));
    return g;
}

Graph prism_graph() {
    Graph g(6);
    for (int i = 0; i < 3; ++i) {
        g.add_edge(i, (i + 1) % 3);
        g.add_edge(3 + i, 3 + (i + 1) % 3);
        g.add_edge(i, i + 3);
    }
    return g;
}

Graph cycle_square(int n) {
    if (n < 5) throw PreconditionError("cycle square needs at least 5 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(i, (i + 2) % n);
    }
    return g;
}

Graph cone(const Graph& g) {
    Graph h = g;
    int apex = h.add_vertex();
    for (int v = 0; v < apex; ++v) h.add_edge(apex, v);
    return h;
}

Graph lambda_gap_graph() {
    // x q z1 z2 z3 z4 p y
    Graph g(8);
    const char* names[] = {"x", "q", "z1", "z2", "z3", "z4", "p", "y"};
    for (int v = 0; v < 8; ++v) g.set_label(v, names[v]);
    const int x = 0, q = 1, z1 = 2, z2 = 3, z3 = 4, z4 = 5, p = 6, y = 7;
    for (int z : {q, z1, z2, z3, z4}) g.add_edge(x, z);
    for (int z : {z1, z2, z4}) g.add_edge(q, z);
    g.add_edge(z2, z3);
    for (int z : {z1, z3, z4}) g.add_edge(p, z);
    for (int z : {p, z1, z2, z3, z4}) g.add_edge(y, z);
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.n() + b.n());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.n() + u, a.n() + v);
    return g;
}

Graph glue_at_vertex(const Graph& a, int va, const Graph& b, int vb) {
    Graph g(a.n() + b.n() - 1);
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    auto map = [&](int w) {
        if (w == vb) return va;
        return a.n() + (w < vb ? w : w - 1);
    };
    for (auto [u, v] : b.edges()) g.add_edge(map(u), map(v));
    return g;
}

Graph splice(const Graph& g1, int v1, const Graph& g2, int v2, const std::vector<int>& perm) {
    const auto& n1 = g1.neighbours(v1);
    const auto& n2 = g2.neighbours(v2);
    if (n1.size() != n2.size() || perm.size() != n1.size())
        throw PreconditionError("splice needs equal degrees and a matching permutation");
    Graph a = g1.without_vertices({v1});
    Graph b = g2.without_vertices({v2});
    Graph g = disjoint_union(a, b);
    auto idx1 = [&](int w) { return w < v1 ? w : w - 1; };
    auto idx2 = [&](int w) { return a.n() + (w < v2 ? w : w - 1); };
    for (std::size_t i = 0; i < n1.size(); ++i) g.add_edge(idx1(n1[i]), idx2(n2[perm[i]]));
    return g;
}

Graph random_gnp(int n, double p, Rng& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

Graph random_connected(int n, int extra, Rng& rng) {
    Graph g(n);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        g.add_edge(v, pick(rng));
    }
    long long max_m = 1LL * n * (n - 1) / 2;
    std::uniform_int_distribution<int> any(0, std::max(0, n - 1));
    for (int added = 0; added < extra && g.m() < max_m;) {
        int u = any(rng), v = any(rng);
        if (u != v && g.add_edge(u, v)) ++added;
    }
    return g;
}

Graph random_regular(int n, int d, Rng& rng) {
    if (d >= n || (1LL * n * d) % 2 != 0) throw PreconditionError("no d-regular graph on n vertices");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<int> stubs;
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < d; ++i) stubs.push_back(v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        Graph g(n);
        bool ok = true;
        for (std::size_t i = 0; ok && i < stubs.size(); i += 2)
            ok = stubs[i] != stubs[i + 1] && g.add_edge(stubs[i], stubs[i + 1]);
        if (ok) return g;
    }
    throw InvariantError("random_regular failed to produce a simple graph");
}

}  // namespace lcol
