#include "generators.hpp"

#include <algorithm>
#include <numeric>

#include "lcol/connectivity.hpp"
#include "lcol/gadgets.hpp"
#include "lcol/list_fpt.hpp"
#include "lcol/morass.hpp"

namespace lcol::testgen {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Graph relabel(const Graph& g, Rng& rng) {
    std::vector<int> p(g.n());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    Graph h(g.n());
    for (auto [u, v] : g.edges()) h.add_edge(p[u], p[v]);
    return h;
}

// Random k-regular k-connected graph on n vertices, or an empty graph after repeated failures.
Graph regular_connected(int n, int k, Rng& rng) {
    for (int attempt = 0; attempt < 50; ++attempt) {
        try {
            Graph g = random_regular(n, k, rng);
            if (is_k_connected(g, k)) return g;
        } catch (const PreconditionError&) {
        }
    }
    return Graph();
}

Graph splice_random(const Graph& a, const Graph& b, int d, Rng& rng) {
    std::vector<int> va, vb;
    for (int v = 0; v < a.n(); ++v)
        if (a.degree(v) == d) va.push_back(v);
    for (int v = 0; v < b.n(); ++v)
        if (b.degree(v) == d) vb.push_back(v);
    if (va.empty() || vb.empty()) return Graph();
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return splice(a, va[uniform(rng, 0, static_cast<int>(va.size()) - 1)], b,
                  vb[uniform(rng, 0, static_cast<int>(vb.size()) - 1)], perm);
}

Graph candidate_k3(int max_n, Rng& rng) {
    switch (uniform(rng, 0, 5)) {
    case 0:
        return grid_family(uniform(rng, 3, std::max(3, max_n / 3)));
    case 1:
        return wheel_graph(uniform(rng, 3, max_n - 1));
    case 2: {
        int n = 2 * uniform(rng, 2, max_n / 2);
        return regular_connected(n, 3, rng);
    }
    case 3: {
        Graph a = uniform(rng, 0, 1) ? wheel_graph(uniform(rng, 3, 7)) : regular_connected(2 * uniform(rng, 2, 4), 3, rng);
        Graph b = uniform(rng, 0, 1) ? wheel_graph(uniform(rng, 3, 7)) : regular_connected(2 * uniform(rng, 2, 4), 3, rng);
        return splice_random(a, b, 3, rng);
    }
    case 4: {
        const Graph fixed[] = {petersen_graph(), cube_graph(), prism_graph(), complete_graph(4), complete_bipartite(3, 3)};
        return fixed[uniform(rng, 0, 4)];
    }
    default: {
        Graph a = grid_family(uniform(rng, 3, 4));
        Graph b = uniform(rng, 0, 1) ? complete_graph(4) : prism_graph();
        return splice_random(a, b, 3, rng);
    }
    }
}

Graph candidate_k4(int max_n, Rng& rng) {
    switch (uniform(rng, 0, 4)) {
    case 0:
        return cycle_square(uniform(rng, 5, max_n));
    case 1: {
        int n = uniform(rng, 6, max_n);
        return regular_connected(n, 4, rng);
    }
    case 2: {
        Graph base = uniform(rng, 0, 2) == 0 ? complete_graph(4) : regular_connected(2 * uniform(rng, 3, (max_n - 1) / 2), 3, rng);
        if (base.n() == 0) return base;
        return cone(base);
    }
    case 3: {
        Graph a = cycle_square(uniform(rng, 6, 8));
        Graph b = uniform(rng, 0, 1) ? complete_graph(5) : cycle_square(uniform(rng, 6, 8));
        return splice_random(a, b, 4, rng);
    }
    default:
        return complete_graph(5);
    }
}

Graph non_morass_block(Rng& rng) {
    switch (uniform(rng, 0, 7)) {
    case 0:
        return wheel_graph(2 * uniform(rng, 2, 3));
    case 1:
        return cube_graph();
    case 2:
        return prism_graph();
    case 3:
        return complete_bipartite(3, 3);
    case 4:
        return cycle_graph(uniform(rng, 3, 7));
    case 5:
        return complete_graph(2);
    case 6: {
        // Join of an odd wheel and an even wheel: 2-connected, not a morass.
        Graph a = odd_wheel(3), b = wheel_graph(4);
        return hajos_join(a, 1, 2, b, 1, 2);
    }
    default:
        return complete_graph(3);
    }
}

Graph morass_block(int max_n, Rng& rng) {
    int joins = uniform(rng, 0, 2);
    std::vector<int> rims;
    for (int i = 0; i <= joins; ++i) rims.push_back(uniform(rng, 0, 1) ? 3 : 5);
    Graph g = random_morass(joins, rims, rng()).graph;
    if (g.n() > max_n) return odd_wheel(3);
    return g;
}

}  // namespace

std::vector<Graph> mlec_instances(int k, int count, int max_n, Rng& rng) {
    std::vector<Graph> out;
    while (static_cast<int>(out.size()) < count) {
        Graph g = k == 3 ? candidate_k3(max_n, rng) : candidate_k4(max_n, rng);
        if (g.n() == 0 || g.n() > max_n) continue;
        if (!classify(g, k).c1_hat) continue;
        out.push_back(relabel(g, rng));
    }
    return out;
}

std::vector<Graph> mlec3_instances(int count, int max_n, Rng& rng) {
    std::vector<Graph> out;
    while (static_cast<int>(out.size()) < count) {
        Graph g;
        int kind = uniform(rng, 0, 4);
        if (kind <= 1) {
            Graph a = morass_block(max_n - 2, rng);
            Graph b = kind == 0 ? non_morass_block(rng) : morass_block(max_n - a.n() + 1, rng);
            g = glue_at_vertex(a, uniform(rng, 0, a.n() - 1), b, uniform(rng, 0, b.n() - 1));
        } else if (kind == 2) {
            g = morass_block(max_n, rng);
        } else if (kind == 3) {
            Graph a = non_morass_block(rng);
            Graph b = uniform(rng, 0, 1) ? non_morass_block(rng) : morass_block(max_n - a.n() + 1, rng);
            g = glue_at_vertex(a, uniform(rng, 0, a.n() - 1), b, uniform(rng, 0, b.n() - 1));
            if (uniform(rng, 0, 1) && g.n() + 2 <= max_n) {
                Graph c = non_morass_block(rng);
                g = glue_at_vertex(g, uniform(rng, 0, g.n() - 1), c, uniform(rng, 0, c.n() - 1));
            }
        } else {
            int n = uniform(rng, 4, std::min(12, max_n));
            g = random_connected(n, uniform(rng, 0, n), rng);
        }
        if (g.n() > max_n) continue;
        if (find_lambda_violation(g, 3)) continue;
        out.push_back(relabel(g, rng));
    }
    return out;
}

Graph random_gallai_tree(int max_n, Rng& rng) {
    int target = uniform(rng, 1, max_n);
    Graph g(1);
    while (g.n() < target) {
        Graph b;
        switch (uniform(rng, 0, 5)) {
        case 0:
        case 1:
            b = complete_graph(2);
            break;
        case 2:
            b = complete_graph(3);
            break;
        case 3:
            b = complete_graph(4);
            break;
        case 4:
            b = cycle_graph(5);
            break;
        default:
            b = cycle_graph(7);
            break;
        }
        if (g.n() + b.n() - 1 > max_n) {
            if (g.n() + 1 > max_n) break;
            b = complete_graph(2);
        }
        g = glue_at_vertex(g, uniform(rng, 0, g.n() - 1), b, 0);
    }
    return relabel(g, rng);
}

ListAssignment random_degree_lists(const Graph& g, Rng& rng, bool allow_bad) {
    const int palette = std::max(2, 2 * g.max_degree() + 2);
    ListAssignment l(g.n());
    if (allow_bad && uniform(rng, 0, 1) == 0) {
        // Each block takes its own palette of size equal to the block degree, disjoint at shared vertices.
        BlockForest f = blocks(g);
        std::vector<std::vector<int>> used(g.n());
        bool ok = true;
        for (const auto& b : f.blocks) {
            if (b.size() < 2) continue;
            Graph hb = g.induced(b);
            int need = hb.degree(0);
            std::vector<int> free;
            for (int c = 1; c <= palette; ++c) {
                bool clash = false;
                for (int v : b) clash = clash || std::find(used[v].begin(), used[v].end(), c) != used[v].end();
                if (!clash) free.push_back(c);
            }
            if (static_cast<int>(free.size()) < need) {
                ok = false;
                break;
            }
            std::shuffle(free.begin(), free.end(), rng);
            for (int v : b) used[v].insert(used[v].end(), free.begin(), free.begin() + need);
        }
        if (ok) {
            for (int v = 0; v < g.n(); ++v) l.set(v, used[v]);
            return l;
        }
    }
    for (int v = 0; v < g.n(); ++v) {
        int size = g.degree(v) + (uniform(rng, 0, 6) == 0 ? 1 : 0);
        std::vector<int> all(std::max(palette, size));
        std::iota(all.begin(), all.end(), 1);
        std::shuffle(all.begin(), all.end(), rng);
        // A narrow palette makes clashes, and so uncolourable cases, more likely.
        int width = std::min(static_cast<int>(all.size()), std::max(size, g.max_degree() + 1));
        std::sort(all.begin(), all.begin() + width);
        std::shuffle(all.begin(), all.begin() + width, rng);
        l.set(v, std::vector<int>(all.begin(), all.begin() + size));
    }
    return l;
}

Graph random_non_gallai(int max_n, Rng& rng) {
    while (true) {
        int n = uniform(rng, 4, max_n);
        Graph g = random_connected(n, uniform(rng, 1, n), rng);
        if (!is_gallai_tree(g)) return g;
    }
}

LeafFixture uniform_leaf_fixture(Rng& rng) {
    LeafFixture fx;
    Graph t = random_gallai_tree(8, rng);
    Graph b;
    switch (uniform(rng, 0, 3)) {
    case 0:
        b = complete_graph(2);
        break;
    case 1:
        b = complete_graph(3);
        break;
    case 2:
        b = complete_graph(4);
        break;
    default:
        b = cycle_graph(5);
        break;
    }
    int v = uniform(rng, 0, t.n() - 1);
    fx.graph = glue_at_vertex(t, v, b, 0);
    fx.attachment = v;
    for (int i = t.n(); i < fx.graph.n(); ++i) fx.leaf.push_back(i);
    ListAssignment base = random_degree_lists(fx.graph, rng);
    const int need = fx.graph.degree(fx.leaf[0]);
    std::vector<int> palette(need + 3);
    std::iota(palette.begin(), palette.end(), 1);
    std::shuffle(palette.begin(), palette.end(), rng);
    fx.leaf_list.assign(palette.begin(), palette.begin() + need);
    std::sort(fx.leaf_list.begin(), fx.leaf_list.end());
    for (int u : fx.leaf) base.set(u, fx.leaf_list);
    fx.lists = base;
    return fx;
}

std::vector<Graph> nonisomorphic_graphs(int n) {
    if (n > 6) throw PreconditionError("nonisomorphic_graphs enumerates n <= 6 only");
    std::vector<Edge> pairs;
    std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            index[a][b] = index[b][a] = static_cast<int>(pairs.size());
            pairs.emplace_back(a, b);
        }
    const int np = static_cast<int>(pairs.size());
    // Pair index image under every vertex permutation.
    std::vector<std::vector<int>> images;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> img(np);
        for (int i = 0; i < np; ++i) img[i] = index[perm[pairs[i].first]][perm[pairs[i].second]];
        images.push_back(std::move(img));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Graph> out;
    const long long total = 1LL << np;
    for (long long mask = 0; mask < total; ++mask) {
        bool canonical = true;
        for (const auto& img : images) {
            long long other = 0;
            for (int i = 0; i < np; ++i)
                if (mask >> i & 1) other |= 1LL << img[i];
            if (other < mask) {
                canonical = false;
                break;
            }
        }
        if (!canonical) continue;
        Graph g(n);
        for (int i = 0; i < np; ++i)
            if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
        out.push_back(std::move(g));
    }
    return out;
}

Graph fpt_instance(int max_n, int max_p, int k, Rng& rng) {
    while (true) {
        int n = uniform(rng, k + 2, max_n);
        int hubs = uniform(rng, 0, std::min(max_p, n - 1));
        Graph g(n);
        for (int h = 0; h < hubs; ++h) {
            std::vector<int> others;
            for (int v = 0; v < n; ++v)
                if (v != h) others.push_back(v);
            std::shuffle(others.begin(), others.end(), rng);
            int d = uniform(rng, std::min(k + 1, n - 1), n - 1);
            for (int i = 0; i < d; ++i) g.add_edge(h, others[i]);
        }
        int extra = uniform(rng, 0, 2 * n);
        for (int i = 0; i < extra; ++i) {
            int a = uniform(rng, hubs, n - 1), b = uniform(rng, hubs, n - 1);
            if (a != b && g.degree(a) < k && g.degree(b) < k) g.add_edge(a, b);
        }
        int p = 0;
        for (int v = 0; v < n; ++v) p += g.degree(v) > k;
        if (p <= max_p) return relabel(g, rng);
    }
}

}  // namespace lcol::testgen
