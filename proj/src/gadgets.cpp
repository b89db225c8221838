#include "lcol/gadgets.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "lcol/connectivity.hpp"

namespace lcol {

namespace {

// Diamond with pick vertices p and q; returns the two new interior vertices.
std::pair<int, int> add_diamond(Graph& g, int p, int q) {
    int a = g.add_vertex(), b = g.add_vertex();
    g.add_edge(a, b);
    for (int x : {a, b}) {
        g.add_edge(x, p);
        g.add_edge(x, q);
    }
    return {a, b};
}

void build_degree_gadget(Graph& g, const std::vector<int>& outlets, int k, std::vector<int>& chain) {
    const int l = static_cast<int>(outlets.size());
    chain.push_back(l);
    std::vector<int> b(k - 1);
    for (auto& x : b) x = g.add_vertex();
    if (l <= (k - 2) * (k - 1)) {
        const int a = (l + k - 2) / (k - 1);
        std::vector<int> u(k - a);
        for (auto& x : u) x = g.add_vertex();
        for (int bi : b)
            for (int uj : u) g.add_edge(bi, uj);
        g.add_edge(u[0], u[1]);
        // Cells of size a come first, then cells of size a - 1.
        const int big = l - (k - 1) * (a - 1);
        int next = 0;
        for (int i = 0; i < k - 1; ++i) {
            int size = i < big ? a : a - 1;
            for (int s = 0; s < size; ++s) g.add_edge(b[i], outlets[next++]);
        }
        return;
    }
    int u1 = g.add_vertex(), u2 = g.add_vertex();
    g.add_edge(u1, u2);
    for (int i = 0; i < k - 2; ++i) {
        g.add_edge(b[i], u1);
        g.add_edge(b[i], u2);
    }
    int next = 0;
    for (int i = 0; i < k - 2; ++i)
        for (int s = 0; s < k - 2; ++s) g.add_edge(b[i], outlets[next++]);
    // b_{k-1} is replaced by the next gadget, so its slot stays isolated and is dropped later.
    std::vector<int> rest(outlets.begin() + next, outlets.end());
    rest.push_back(u1);
    rest.push_back(u2);
    build_degree_gadget(g, rest, k, chain);
}

Graph drop_isolated_placeholders(const Graph& g, const std::vector<int>& placeholders) {
    return g.without_vertices(placeholders);
}

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = i;
    while (true) {
        visit(s);
        int i = k - 1;
        while (i >= 0 && s[i] == n - k + i) --i;
        if (i < 0) return;
        ++s[i];
        for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    }
}

nlohmann::json label_list(const Graph& g, const std::vector<int>& vs) {
    auto a = nlohmann::json::array();
    for (int v : vs) a.push_back(g.label(v));
    return a;
}

}  // namespace

Gadget hub_gadget(int l) {
    if (l < 4) throw PreconditionError("hub_gadget needs at least 4 outlets");
    Gadget r;
    Graph& g = r.graph;
    g = Graph(l);
    for (int i = 0; i < l; ++i) r.outlets.push_back(i);
    std::vector<int> spine(l - 2);
    for (auto& s : spine) s = g.add_vertex();
    // Caterpillar: the two spine ends carry two leaves each, inner spine vertices one.
    std::vector<std::pair<int, int>> pendant;
    int leaf = 0;
    for (int i = 0; i < l - 2; ++i) {
        int count = (i == 0 || i == l - 3) ? 2 : 1;
        for (int c = 0; c < count; ++c) pendant.emplace_back(spine[i], leaf++);
    }
    for (auto [s, o] : pendant) add_diamond(g, s, o);
    for (int i = 0; i + 1 < l - 2; ++i) {
        int mid = g.add_vertex();
        add_diamond(g, spine[i], mid);
        add_diamond(g, mid, spine[i + 1]);
    }
    return r;
}

Gadget degree_gadget(int l, int k) {
    if (k < 4) throw PreconditionError("degree_gadget needs k >= 4");
    if (l <= k) throw PreconditionError("degree_gadget needs l > k");
    Gadget r;
    Graph g(l);
    std::vector<int> outlets(l);
    for (int i = 0; i < l; ++i) outlets[i] = i;
    build_degree_gadget(g, outlets, k, r.chain);
    std::vector<int> placeholders;
    for (int v = l; v < g.n(); ++v)
        if (g.degree(v) == 0) placeholders.push_back(v);
    r.graph = drop_isolated_placeholders(g, placeholders);
    r.outlets = outlets;
    return r;
}

nlohmann::json to_json(const ReductionOutput& r, const Graph& original) {
    nlohmann::json fm = nlohmann::json::object();
    for (int v = 0; v < original.n(); ++v)
        fm[original.label(v)] = r.forward_map[v] < 0 ? nlohmann::json(nullptr) : nlohmann::json(r.graph.label(r.forward_map[v]));
    return {{"n", r.graph.n()}, {"m", r.graph.m()}, {"forward_map", fm}, {"notes", r.notes}};
}

ReductionOutput reduce_to_mlc3(const Graph& g) {
    if (!is_k_connected(g, 2)) throw PreconditionError("reduce_to_mlc3 needs a 2-connected graph");
    ReductionOutput r;
    r.forward_map.assign(g.n(), -1);
    Graph& out = r.graph;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) < 4) {
            r.forward_map[v] = out.add_vertex();
            out.set_label(r.forward_map[v], g.label(v));
        }
    // port[v][i]: output vertex standing in for v on its edge to its i-th neighbour.
    std::vector<std::vector<int>> port(g.n());
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) < 4) {
            port[v].assign(g.degree(v), r.forward_map[v]);
            continue;
        }
        Gadget h = hub_gadget(g.degree(v));
        const int base = out.n();
        std::vector<int> members;
        for (int i = 0; i < h.graph.n(); ++i) {
            int w = out.add_vertex();
            out.set_label(w, g.label(v) + "." + std::to_string(i));
            members.push_back(w);
        }
        for (auto [a, b] : h.graph.edges()) out.add_edge(base + a, base + b);
        std::vector<int> outs;
        for (int o : h.outlets) outs.push_back(base + o);
        port[v] = outs;
        r.notes.push_back({{"vertex", g.label(v)},
                           {"gadget", "hub"},
                           {"vertices", label_list(out, members)},
                           {"outlets", label_list(out, outs)}});
    }
    for (auto [u, v] : g.edges()) {
        const auto& nu = g.neighbours(u);
        const auto& nv = g.neighbours(v);
        int iu = static_cast<int>(std::lower_bound(nu.begin(), nu.end(), v) - nu.begin());
        int iv = static_cast<int>(std::lower_bound(nv.begin(), nv.end(), u) - nv.begin());
        out.add_edge(port[u][iu], port[v][iv]);
    }
    return r;
}

ReductionOutput reduce_to_mleck(const Graph& g, int k) {
    if (k < 4) throw PreconditionError("reduce_to_mleck needs k >= 4");
    if (!is_k_connected(g, k - 1)) throw PreconditionError("reduce_to_mleck needs a (k-1)-connected graph");
    Graph w = g;
    for (int v = 0; v < g.n(); ++v) w.set_label(v, g.label(v));
    nlohmann::json notes = nlohmann::json::array();
    std::vector<int> replaced;
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) <= k) continue;
        // Neighbourhoods change as earlier gadgets are attached; degrees do not.
        std::vector<int> nbrs = w.neighbours(v);
        Gadget d = degree_gadget(static_cast<int>(nbrs.size()), k);
        const int l = static_cast<int>(nbrs.size());
        std::vector<int> id(d.graph.n());
        std::vector<int> members;
        for (int i = 0; i < d.graph.n(); ++i) {
            if (i < l) {
                id[i] = nbrs[i];
            } else {
                id[i] = w.add_vertex();
                w.set_label(id[i], g.label(v) + "." + std::to_string(i - l));
                members.push_back(id[i]);
            }
        }
        w.isolate(v);
        for (auto [a, b] : d.graph.edges()) w.add_edge(id[a], id[b]);
        replaced.push_back(v);
        nlohmann::json chain = d.chain;
        notes.push_back({{"vertex", g.label(v)},
                         {"gadget", "degree"},
                         {"k", k},
                         {"chain", chain},
                         {"vertices", label_list(w, members)},
                         {"outlets", label_list(w, nbrs)}});
    }
    ReductionOutput r;
    std::vector<int> kept;
    r.graph = w.without_vertices(replaced, &kept);
    r.forward_map.assign(g.n(), -1);
    for (std::size_t i = 0; i < kept.size(); ++i)
        if (kept[i] < g.n()) r.forward_map[kept[i]] = static_cast<int>(i);
    r.notes = std::move(notes);
    return r;
}

Graph boost_connectivity(const Graph& g, int j) {
    if (j < 1) throw PreconditionError("boost_connectivity needs j >= 1");
    if (g.n() < j + 2) throw PreconditionError("boost_connectivity needs at least j + 2 vertices");
    if (!is_k_connected(g, j)) throw PreconditionError("boost_connectivity needs a j-connected graph");
    Graph w = g;
    if (g.has_labels())
        for (int v = 0; v < g.n(); ++v) w.set_label(v, g.label(v));
    int clones = 0;
    while (!is_k_connected(w, j + 1)) {
        std::optional<std::vector<int>> sep;
        for (int x = 0; x < w.n() && !sep; ++x)
            for (int y = x + 1; y < w.n() && !sep; ++y) {
                if (w.has_edge(x, y)) continue;
                if (local_vertex_connectivity_value(w, x, y, j + 1) != j) continue;
                sep = local_vertex_connectivity(w, x, y).separation->separator;
            }
        if (!sep) throw InvariantError("no j-vertex cut found in a graph that is not (j+1)-connected");
        int s = *std::min_element(sep->begin(), sep->end());
        std::vector<int> nbrs = w.neighbours(s);
        int t = w.add_vertex();
        for (int u : nbrs) w.add_edge(t, u);
        w.set_label(t, w.label(s) + "'" + std::to_string(clones++));
    }
    return w;
}

Hypergraph rigid_hypergraph(int k) {
    if (k < 3) throw PreconditionError("rigid_hypergraph needs k >= 3");
    Hypergraph h;
    h.n = k * k;
    for_each_subset(k * k, k, [&](const std::vector<int>& s) {
        bool block = s.back() - s.front() == k - 1 && s.front() % k == 0;
        if (!block) h.add_edge(s);
    });
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) h.labels.push_back("V" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
    return h;
}

Hypergraph graph_to_hypergraph(const Graph& g, int k) {
    Hypergraph h0 = rigid_hypergraph(k);
    Hypergraph h;
    const int n = g.n();
    h.n = n + h0.n;
    for (int v = 0; v < n; ++v) h.labels.push_back(g.label(v));
    for (const auto& l : h0.labels) h.labels.push_back(l);
    for (const auto& e : h0.edges) {
        std::vector<int> s;
        for (int v : e) s.push_back(v + n);
        h.add_edge(s);
    }
    for (auto [u, v] : g.edges())
        for (int i = 0; i < k; ++i) {
            std::vector<int> s{u, v};
            for (int j = 0; j < k - 2; ++j) s.push_back(n + i * k + j);
            h.add_edge(s);
        }
    return h;
}

Graph hypergraph_to_min_kconn(const Hypergraph& h, int k) {
    if (k < 3) throw PreconditionError("hypergraph_to_min_kconn needs k >= 3");
    if (!h.is_uniform(k)) throw PreconditionError("hypergraph_to_min_kconn needs a k-uniform hypergraph");
    if (h.n < k) throw PreconditionError("hypergraph_to_min_kconn needs at least k vertices");
    Graph g(h.n);
    for (int v = 0; v < h.n; ++v) g.set_label(v, h.label(v));
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
        std::vector<int> core(k);
        for (int i = 0; i < k; ++i) {
            core[i] = g.add_vertex();
            g.set_label(core[i], "P" + std::to_string(e + 1) + "_" + std::to_string(i + 1));
            g.add_edge(core[i], h.edges[e][i]);
        }
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) g.add_edge(core[i], core[j]);
    }
    for (int l = 1; l <= h.n; ++l) {
        std::vector<int> b(k), c(k - 1);
        for (int i = 0; i < k; ++i) {
            b[i] = g.add_vertex();
            g.set_label(b[i], "Q" + std::to_string(l) + "_b" + std::to_string(i + 1));
        }
        for (int i = 0; i < k - 1; ++i) {
            c[i] = g.add_vertex();
            g.set_label(c[i], "Q" + std::to_string(l) + "_c" + std::to_string(i + 1));
        }
        for (int x : b)
            for (int y : c) g.add_edge(x, y);
        // b_i meets v_j with j = i + l (mod h), written 0-based.
        for (int i = 0; i < k; ++i) g.add_edge(b[i], (i + l) % h.n);
    }
    return g;
}

Graph grid_family(int x) {
    if (x < 3) throw PreconditionError("grid_family needs x >= 3");
    Graph g(3 * x);
    auto id = [x](int r, int c) { return r * x + c; };
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < x; ++c) {
            if (c + 1 < x) g.add_edge(id(r, c), id(r, c + 1));
            if (r + 1 < 3) g.add_edge(id(r, c), id(r + 1, c));
        }
    g.add_edge(id(0, 0), id(2, 0));
    g.add_edge(id(0, x - 1), id(2, x - 1));
    return g;
}

}  // namespace lcol
