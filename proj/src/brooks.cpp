#include "lcol/brooks.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "lcol/connectivity.hpp"

namespace lcol {

ColourOutcome greedy_colour(const Graph& g, const std::vector<int>& order, int k, const Colouring* preset) {
    Colouring c = preset ? *preset : Colouring(g.n(), k);
    c.k = k;
    if (c.size() != g.n()) throw PreconditionError("preset colouring has the wrong size");
    std::vector<char> covered(g.n(), 0);
    for (int v = 0; v < g.n(); ++v) covered[v] = c[v] != 0;
    for (int v : order) {
        if (v < 0 || v >= g.n()) throw PreconditionError("greedy order names a vertex outside the graph");
        if (covered[v] && c[v] == 0) throw PreconditionError("greedy order repeats a vertex");
        covered[v] = 1;
    }
    if (std::find(covered.begin(), covered.end(), 0) != covered.end())
        throw PreconditionError("greedy order does not cover every vertex");

    std::vector<int> seen(k + 2, -1);
    for (int v : order) {
        if (c[v] != 0) continue;
        for (int w : g.neighbours(v))
            if (c[w] >= 1 && c[w] <= k) seen[c[w]] = v;
        int pick = 1;
        while (pick <= k && seen[pick] == v) ++pick;
        if (pick > k) {
            ColourOutcome out = ColourOutcome::obstruction(OutcomeKind::Infeasible, {v}, "no colour left");
            out.stuck_vertex = v;
            out.colouring = c;
            return out;
        }
        c[v] = pick;
    }
    return ColourOutcome::success(std::move(c));
}

namespace {

std::vector<int> reversed(std::vector<int> v) {
    std::reverse(v.begin(), v.end());
    return v;
}

std::vector<int> all_vertices(const Graph& g) {
    std::vector<int> v(g.n());
    std::iota(v.begin(), v.end(), 0);
    return v;
}

Colouring expect_success(ColourOutcome r, const char* where) {
    if (!r.coloured()) throw InvariantError(std::string(where) + ": greedy colouring got stuck");
    return std::move(r.colouring);
}

// Whether g - {a, b} is connected.
bool connected_without(const Graph& g, int a, int b) {
    std::vector<char> ex(g.n(), 0);
    ex[a] = ex[b] = 1;
    int start = -1;
    for (int v = 0; v < g.n() && start < 0; ++v)
        if (!ex[v]) start = v;
    if (start < 0) return true;
    try {
        search_ordering(g, start, ex);
        return true;
    } catch (const PreconditionError&) {
        return false;
    }
}

}  // namespace

Colouring glue_blocks(const Graph& g, const BlockForest& forest, const std::vector<Colouring>& per_block, int k) {
    Colouring out(g.n(), k);
    std::vector<char> done_block(forest.blocks.size(), 0);
    for (std::size_t root = 0; root < forest.blocks.size(); ++root) {
        if (done_block[root]) continue;
        std::queue<int> q;
        q.push(static_cast<int>(root));
        done_block[root] = 1;
        while (!q.empty()) {
            int b = q.front();
            q.pop();
            const auto& vs = forest.blocks[b];
            const auto& cb = per_block[b];
            std::vector<int> perm(k + 1);
            std::iota(perm.begin(), perm.end(), 0);
            for (std::size_t i = 0; i < vs.size(); ++i) {
                if (out[vs[i]] == 0) continue;
                int have = cb[static_cast<int>(i)], want = out[vs[i]];
                if (have != want) {
                    std::swap(perm[have], perm[want]);
                }
                break;
            }
            for (std::size_t i = 0; i < vs.size(); ++i)
                if (out[vs[i]] == 0) out[vs[i]] = perm[cb[static_cast<int>(i)]];
            for (int v : vs)
                for (int nb : forest.blocks_of[v])
                    if (!done_block[nb]) {
                        done_block[nb] = 1;
                        q.push(nb);
                    }
        }
    }
    return out;
}

std::optional<BrooksTriple> find_brooks_triple(const Graph& g) {
    for (int x = 0; x < g.n(); ++x) {
        std::vector<int> kept;
        Graph h = g.without_vertices({x}, &kept);
        BlockForest f = blocks(h);
        if (f.blocks.size() == 1) {
            auto d = bfs_distances(g, x);
            for (int b = 0; b < g.n(); ++b) {
                if (d[b] != 2) continue;
                for (int v : g.neighbours(x))
                    if (g.has_edge(v, b)) return BrooksTriple{v, x, b};
            }
            continue;
        }
        // Neighbours of x lying in the interior of a leaf block of g - x.
        std::vector<int> picks;
        for (std::size_t i = 0; i < f.blocks.size(); ++i) {
            const auto& blk = f.blocks[i];
            int cuts = static_cast<int>(std::count_if(blk.begin(), blk.end(), [&](int v) { return f.is_cut(v); }));
            if (cuts != 1) continue;
            for (int v : blk)
                if (!f.is_cut(v) && g.has_edge(x, kept[v])) {
                    picks.push_back(kept[v]);
                    break;
                }
        }
        for (std::size_t i = 0; i < picks.size(); ++i)
            for (std::size_t j = i + 1; j < picks.size(); ++j)
                if (!g.has_edge(picks[i], picks[j]) && connected_without(g, picks[i], picks[j]))
                    return BrooksTriple{x, std::min(picks[i], picks[j]), std::max(picks[i], picks[j])};
    }
    return std::nullopt;
}

ColourOutcome brooks_colour(const Graph& g, int k) {
    if (k < 1) throw PreconditionError("brooks_colour needs k >= 1");
    if (!is_connected(g)) throw PreconditionError("brooks_colour needs a connected graph");
    if (g.n() == 0) return ColourOutcome::success(Colouring(0, k));
    if (g.max_degree() > k) throw PreconditionError("brooks_colour: max degree exceeds k");

    if (is_complete(g) && g.n() == k + 1) return ColourOutcome::obstruction(OutcomeKind::Complete, all_vertices(g));
    if (k == 1) return ColourOutcome::success(expect_success(greedy_colour(g, {0}, 1), "brooks"));
    if (k == 2) {
        if (auto c = two_colouring(g)) {
            c->k = 2;
            return ColourOutcome::success(*c);
        }
        return ColourOutcome::obstruction(OutcomeKind::OddCycle, all_vertices(g));
    }

    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) < k)
            return ColourOutcome::success(expect_success(greedy_colour(g, reversed(search_ordering(g, v)), k), "brooks"));

    // k-regular from here on.
    BlockForest f = blocks(g);
    if (f.blocks.size() > 1) {
        std::vector<Colouring> per;
        for (const auto& blk : f.blocks) {
            Graph b = g.induced(blk);
            int root = 0;
            for (std::size_t i = 0; i < blk.size(); ++i)
                if (f.is_cut(blk[i])) {
                    root = static_cast<int>(i);
                    break;
                }
            per.push_back(expect_success(greedy_colour(b, reversed(search_ordering(b, root)), k), "brooks block"));
        }
        return ColourOutcome::success(glue_blocks(g, f, per, k));
    }

    auto t = find_brooks_triple(g);
    if (!t) throw InvariantError("brooks_colour: no colouring triple in a 2-connected regular graph");
    Colouring pre(g.n(), k);
    pre[t->a] = pre[t->b] = 1;
    std::vector<char> ex(g.n(), 0);
    ex[t->a] = ex[t->b] = 1;
    auto order = reversed(search_ordering(g, t->v, ex));
    return ColourOutcome::success(expect_success(greedy_colour(g, order, k, &pre), "brooks triple"));
}

Colouring lovasz_colour(const Graph& g, int k, bool check) {
    if (k < 3) throw PreconditionError("lovasz_colour needs k >= 3");
    if (g.n() < 4) throw PreconditionError("lovasz_colour: graph is not 3-connected");
    int h = 0;
    for (int v = 1; v < g.n(); ++v)
        if (g.degree(v) > g.degree(h)) h = v;
    if (check) {
        int high = 0;
        for (int v = 0; v < g.n(); ++v)
            if (g.degree(v) > k) ++high;
        if (high > 1) throw PreconditionError("lovasz_colour: more than one vertex of degree above k");
        if (structural_predicates(g).dominating_vertex)
            throw PreconditionError("lovasz_colour: graph has a dominating vertex");
        if (!is_k_connected(g, 3)) throw PreconditionError("lovasz_colour: graph is not 3-connected");
    }
    auto d = bfs_distances(g, h);
    int y = -1;
    for (int v = 0; v < g.n() && y < 0; ++v)
        if (d[v] == 2) y = v;
    if (y < 0) throw PreconditionError("lovasz_colour: no vertex at distance two from the max-degree vertex");
    int z1 = -1;
    for (int w : g.neighbours(h))
        if (g.has_edge(w, y)) {
            z1 = w;
            break;
        }
    Colouring pre(g.n(), k);
    pre[h] = pre[y] = 1;
    std::vector<char> ex(g.n(), 0);
    ex[h] = ex[y] = 1;
    auto order = reversed(search_ordering(g, z1, ex));
    return expect_success(greedy_colour(g, order, k, &pre), "lovasz_colour");
}

}  // namespace lcol
