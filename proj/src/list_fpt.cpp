#include "lcol/list_fpt.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "lcol/brooks.hpp"

namespace lcol {

namespace {

int max_colour(const ListAssignment& l) {
    int m = 0;
    for (const auto& x : l.lists)
        if (!x.empty()) m = std::max(m, x.back());
    return m;
}

bool is_block_gallai(const Graph& b) { return is_complete(b) || is_odd_cycle(b); }

// Lowest colour of L(v) unused by coloured neighbours, or 0.
int first_free(const Graph& g, const ListAssignment& l, const Colouring& c, int v) {
    std::vector<int> taken;
    for (int w : g.neighbours(v))
        if (c[w]) taken.push_back(c[w]);
    std::sort(taken.begin(), taken.end());
    for (int col : l[v])
        if (!std::binary_search(taken.begin(), taken.end(), col)) return col;
    return 0;
}

void require_degree_list(const Graph& g, const ListAssignment& l) {
    if (l.n() != g.n()) throw PreconditionError("list assignment size does not match the graph");
    for (int v = 0; v < g.n(); ++v)
        if (static_cast<int>(l[v].size()) < g.degree(v))
            throw PreconditionError("list of vertex " + g.label(v) + " is shorter than its degree");
}

// Colours u with c, then finishes the rest (connected, with a long list next to u) greedily.
Colouring colour_then_long(const Graph& g, const ListAssignment& l, int u, int c) {
    std::vector<int> kept;
    Graph rest = g.without_vertices({u}, &kept);
    ListAssignment lr = l.restrict_to(kept);
    for (std::size_t i = 0; i < kept.size(); ++i)
        if (g.has_edge(u, kept[i])) lr.remove(static_cast<int>(i), c);
    Colouring out(g.n(), std::max(max_colour(l), c));
    out[u] = c;
    if (rest.n() > 0) {
        Colouring cr = long_list_colour(rest, lr);
        for (std::size_t i = 0; i < kept.size(); ++i) out[kept[i]] = cr[static_cast<int>(i)];
    }
    return out;
}

// For adjacent a, b with different lists of equal size: (vertex, colour) with colour missing from the other list.
std::pair<int, int> distinguishing(const ListAssignment& l, int a, int b) {
    for (int c : l[a])
        if (!l.contains(b, c)) return {a, c};
    for (int c : l[b])
        if (!l.contains(a, c)) return {b, c};
    throw InvariantError("lists expected to differ");
}

struct Peel {
    std::vector<int> removed;  // ids in the input graph
    int attachment = -1;
    std::vector<int> colours;
    bool clique = true;
};

void extend_peel(const Graph& g, const Peel& p, Colouring& c) {
    if (p.clique) {
        for (std::size_t i = 0; i < p.removed.size(); ++i) c[p.removed[i]] = p.colours[i];
        return;
    }
    // B - v is a path whose two ends touch v.
    std::vector<char> in(g.n(), 0);
    for (int v : p.removed) in[v] = 1;
    int start = -1;
    for (int v : p.removed) {
        int inner = 0;
        for (int w : g.neighbours(v)) inner += in[w];
        if (inner <= 1) {
            start = v;
            break;
        }
    }
    int prev = -1, cur = start;
    for (std::size_t i = 0; i < p.removed.size(); ++i) {
        c[cur] = p.colours[i % 2];
        int nxt = -1;
        for (int w : g.neighbours(cur))
            if (in[w] && w != prev) nxt = w;
        prev = cur;
        cur = nxt;
    }
}

}  // namespace

bool is_gallai_tree(const Graph& g) {
    if (!is_connected(g)) throw PreconditionError("is_gallai_tree needs a connected graph");
    for (const auto& b : blocks(g).blocks)
        if (!is_block_gallai(g.induced(b))) return false;
    return true;
}

Colouring long_list_colour(const Graph& g, const ListAssignment& l) {
    require_degree_list(g, l);
    if (!is_connected(g)) throw PreconditionError("long_list_colour needs a connected graph");
    int root = -1;
    for (int v = 0; v < g.n() && root < 0; ++v)
        if (static_cast<int>(l[v].size()) > g.degree(v)) root = v;
    if (root < 0) throw PreconditionError("long_list_colour needs a vertex whose list is longer than its degree");
    auto order = search_ordering(g, root);
    std::reverse(order.begin(), order.end());
    Colouring c(g.n(), max_colour(l));
    for (int v : order) {
        c[v] = first_free(g, l, c, v);
        if (!c[v]) throw InvariantError("long_list_colour ran out of colours");
    }
    return c;
}

ColourOutcome gallai_tree_colour(const Graph& g, const ListAssignment& l) {
    require_degree_list(g, l);
    if (!is_gallai_tree(g)) throw PreconditionError("gallai_tree_colour needs a Gallai tree");
    const int n = g.n();
    ListAssignment lists = l;
    std::vector<char> alive(n, 1);
    std::vector<Peel> peels;
    Colouring out(n, max_colour(l));

    while (true) {
        std::vector<int> live;
        for (int v = 0; v < n; ++v)
            if (alive[v]) live.push_back(v);
        Graph cur = g.induced(live);
        ListAssignment lc = lists.restrict_to(live);

        std::optional<Colouring> done;
        for (int i = 0; i < cur.n() && !done; ++i)
            if (static_cast<int>(lc[i].size()) > cur.degree(i)) done = long_list_colour(cur, lc);

        if (!done) {
            BlockForest f = blocks(cur);
            if (f.blocks.size() == 1) {
                bool all_equal = true;
                for (int i = 1; i < cur.n(); ++i) all_equal = all_equal && lc[i] == lc[0];
                if (all_equal) {
                    ListCertificate cert;
                    for (const auto& p : peels) cert.peels.push_back({p.removed, p.attachment, p.colours});
                    cert.terminal_block = live;
                    cert.terminal_list = cur.n() ? lc[0] : std::vector<int>{};
                    ColourOutcome r = ColourOutcome::obstruction(OutcomeKind::Infeasible, live,
                                                                 "every list on the final block is the same");
                    r.list_certificate = cert;
                    return r;
                }
                for (auto [a, b] : cur.edges())
                    if (lc[a] != lc[b]) {
                        auto [u, c] = distinguishing(lc, a, b);
                        done = colour_then_long(cur, lc, u, c);
                        break;
                    }
                if (!done) throw InvariantError("differing lists without a differing edge");
            } else {
                std::size_t leaf = f.blocks.size();
                int v = -1;
                for (std::size_t b = 0; b < f.blocks.size() && leaf == f.blocks.size(); ++b) {
                    int cuts = 0, at = -1;
                    for (int u : f.blocks[b])
                        if (f.is_cut(u)) {
                            ++cuts;
                            at = u;
                        }
                    if (cuts == 1) {
                        leaf = b;
                        v = at;
                    }
                }
                std::vector<int> rest;
                for (int u : f.blocks[leaf])
                    if (u != v) rest.push_back(u);
                bool uniform = true;
                for (int u : rest)
                    uniform = uniform && lc[u] == lc[rest[0]] && static_cast<int>(lc[u].size()) == cur.degree(u);
                if (uniform) {
                    Peel p;
                    for (int u : rest) p.removed.push_back(live[u]);
                    p.attachment = live[v];
                    p.colours = lc[rest[0]];
                    p.clique = is_complete(cur.induced(f.blocks[leaf]));
                    std::vector<int> kept;
                    for (int c : lists[live[v]])
                        if (!std::binary_search(p.colours.begin(), p.colours.end(), c)) kept.push_back(c);
                    lists.set(live[v], kept);
                    for (int u : p.removed) alive[u] = 0;
                    peels.push_back(std::move(p));
                    continue;
                }
                for (int a : rest) {
                    for (int b : cur.neighbours(a))
                        if (b != v && b > a && lc[a] != lc[b] &&
                            std::find(rest.begin(), rest.end(), b) != rest.end()) {
                            auto [u, c] = distinguishing(lc, a, b);
                            done = colour_then_long(cur, lc, u, c);
                            break;
                        }
                    if (done) break;
                }
                if (!done) throw InvariantError("non-uniform leaf block without a differing edge");
            }
        }
        for (std::size_t i = 0; i < live.size(); ++i) out[live[i]] = (*done)[static_cast<int>(i)];
        break;
    }
    for (auto it = peels.rbegin(); it != peels.rend(); ++it) extend_peel(g, *it, out);
    return ColourOutcome::success(out);
}

Colouring degree_choosable_colour(const Graph& g, const ListAssignment& l) {
    require_degree_list(g, l);
    if (is_gallai_tree(g)) throw PreconditionError("degree_choosable_colour got a Gallai tree; use gallai_tree_colour");
    for (int v = 0; v < g.n(); ++v)
        if (static_cast<int>(l[v].size()) > g.degree(v)) return long_list_colour(g, l);

    BlockForest f = blocks(g);
    std::vector<int> core;
    for (const auto& b : f.blocks)
        if (!is_block_gallai(g.induced(b))) {
            core = b;
            break;
        }
    // Everything outside the core first, farthest first, so each vertex still has an uncoloured neighbour.
    std::vector<int> dist(g.n(), -1);
    std::queue<int> q;
    for (int v : core) {
        dist[v] = 0;
        q.push(v);
    }
    std::vector<int> order;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (dist[u] > 0) order.push_back(u);
        for (int w : g.neighbours(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    std::reverse(order.begin(), order.end());
    Colouring c(g.n(), max_colour(l));
    for (int v : order) {
        c[v] = first_free(g, l, c, v);
        if (!c[v]) throw InvariantError("outer greedy ran out of colours");
    }

    Graph b = g.induced(core);
    ListAssignment lb = l.restrict_to(core);
    for (std::size_t i = 0; i < core.size(); ++i)
        for (int w : g.neighbours(core[i]))
            if (c[w]) lb.remove(static_cast<int>(i), c[w]);

    Colouring cb;
    bool long_list = false;
    for (int i = 0; i < b.n(); ++i) long_list = long_list || static_cast<int>(lb[i].size()) > b.degree(i);
    if (long_list) {
        cb = long_list_colour(b, lb);
    } else {
        std::optional<Edge> differ;
        for (auto [x, y] : b.edges())
            if (lb[x] != lb[y]) {
                differ = Edge{x, y};
                break;
            }
        if (differ) {
            auto [u, col] = distinguishing(lb, differ->first, differ->second);
            cb = colour_then_long(b, lb, u, col);
        } else {
            // Regular core with one common list: Brooks on the list's colours.
            const auto& palette = lb[0];
            ColourOutcome r = brooks_colour(b, static_cast<int>(palette.size()));
            if (!r.coloured()) throw InvariantError("regular non-Gallai block failed to colour");
            cb = Colouring(b.n(), palette.back());
            for (int i = 0; i < b.n(); ++i) cb[i] = palette[r.colouring[i] - 1];
        }
    }
    for (std::size_t i = 0; i < core.size(); ++i) c[core[i]] = cb[static_cast<int>(i)];
    return c;
}

FptOutcome fpt_colour(const Graph& g, int k) {
    if (k < 1) throw PreconditionError("fpt_colour needs k >= 1");
    FptOutcome res;
    std::vector<int> high;
    std::vector<char> is_high(g.n(), 0);
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > k) {
            high.push_back(v);
            is_high[v] = 1;
        }
    res.p = static_cast<int>(high.size());

    std::vector<int> low;
    for (int v = 0; v < g.n(); ++v)
        if (!is_high[v]) low.push_back(v);
    Graph h = g.induced(low);
    struct Part {
        Graph g;
        std::vector<int> vertices;  // ids in g
        bool gallai;
    };
    std::vector<Part> parts;
    for (const auto& comp : components(h)) {
        std::vector<int> vs;
        for (int i : comp) vs.push_back(low[i]);
        Graph pg = g.induced(vs);
        bool gallai = is_gallai_tree(pg);
        parts.push_back({std::move(pg), std::move(vs), gallai});
    }

    const int limit = std::min(k, res.p);
    std::vector<int> cls(res.p, -1);
    Colouring c(g.n(), k);

    auto extend = [&]() -> bool {
        for (int i = 0; i < res.p; ++i) c[high[i]] = cls[i] + 1;
        for (const auto& part : parts) {
            ListAssignment l(part.g.n());
            bool empty = false;
            for (int i = 0; i < part.g.n(); ++i) {
                std::vector<char> banned(k + 1, 0);
                for (int w : g.neighbours(part.vertices[i]))
                    if (is_high[w]) banned[c[w]] = 1;
                std::vector<int> list;
                for (int col = 1; col <= k; ++col)
                    if (!banned[col]) list.push_back(col);
                empty = empty || list.empty();
                l.lists[i] = std::move(list);
            }
            if (empty) return false;
            bool long_list = false;
            for (int i = 0; i < part.g.n(); ++i) long_list = long_list || static_cast<int>(l[i].size()) > part.g.degree(i);
            Colouring pc;
            if (long_list) {
                pc = long_list_colour(part.g, l);
            } else if (!part.gallai) {
                pc = degree_choosable_colour(part.g, l);
            } else {
                ColourOutcome r = gallai_tree_colour(part.g, l);
                if (!r.coloured()) return false;
                pc = r.colouring;
            }
            for (int i = 0; i < part.g.n(); ++i) c[part.vertices[i]] = pc[i];
        }
        return true;
    };

    // Restricted-growth strings: class i of the first vertex is 0, later classes grow by at most one.
    bool found = false;
    auto rec = [&](auto&& self, int i, int used) -> void {
        if (found) return;
        if (i == res.p) {
            ++res.branches;
            found = extend();
            return;
        }
        for (int cl = 0; cl <= std::min(used, limit - 1); ++cl) {
            bool ok = true;
            for (int w : g.neighbours(high[i])) {
                if (!is_high[w]) continue;
                auto pos = std::lower_bound(high.begin(), high.end(), w) - high.begin();
                if (pos < i && cls[pos] == cl) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            cls[i] = cl;
            self(self, i + 1, std::max(used, cl + 1));
            if (found) return;
        }
        cls[i] = -1;
    };
    rec(rec, 0, 0);

    if (found) {
        if (!verify_colouring(g, c)) throw InvariantError("fpt_colour produced an improper colouring");
        res.outcome = ColourOutcome::success(c);
    } else {
        res.outcome = ColourOutcome::obstruction(OutcomeKind::Infeasible, high,
                                                 "no colouring of the high-degree vertices extends");
    }
    return res;
}

}  // namespace lcol
