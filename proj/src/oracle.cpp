#include "lcol/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>
#include <string>

namespace lcol {

OracleLimits OracleLimits::from_env() {
    OracleLimits lim;
    if (const char* s = std::getenv("LCOL_ORACLE_MAX_VERTICES")) {
        try {
            int v = std::stoi(s);
            if (v > 0) lim.max_vertices = v;
        } catch (const std::exception&) {
        }
    }
    return lim;
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw SizeLimitError(what);
}

// Backtracking over colour indices 0..C-1 with forward checking and a
// fewest-remaining-colours vertex choice.
class Search {
public:
    Search(const Graph& g, int colours, std::vector<std::vector<char>> domain)
        : g_(g), C_(colours), domain_(std::move(domain)) {
        const int n = g.n();
        blocked_.assign(static_cast<std::size_t>(n) * C_, 0);
        avail_.assign(n, 0);
        colour_.assign(n, -1);
        for (int v = 0; v < n; ++v) avail_[v] = static_cast<int>(std::count(domain_[v].begin(), domain_[v].end(), 1));
    }

    // Returns true if stopped early by the visitor.
    bool run(const std::function<bool(const std::vector<int>&)>& visit) {
        visit_ = &visit;
        for (int v = 0; v < g_.n(); ++v)
            if (avail_[v] == 0) return false;
        return rec(0);
    }

private:
    bool rec(int done) {
        if (done == g_.n()) return !(*visit_)(colour_);
        int v = -1;
        for (int u = 0; u < g_.n(); ++u) {
            if (colour_[u] >= 0) continue;
            if (v < 0 || avail_[u] < avail_[v] || (avail_[u] == avail_[v] && g_.degree(u) > g_.degree(v))) v = u;
        }
        for (int c = 0; c < C_; ++c) {
            if (!domain_[v][c] || blocked_[idx(v, c)]) continue;
            colour_[v] = c;
            bool wipe = false;
            for (int w : g_.neighbours(v)) {
                if (colour_[w] >= 0) continue;
                if (blocked_[idx(w, c)]++ == 0 && domain_[w][c] && --avail_[w] == 0) wipe = true;
            }
            bool stop = !wipe && rec(done + 1);
            for (int w : g_.neighbours(v)) {
                if (colour_[w] >= 0) continue;
                if (--blocked_[idx(w, c)] == 0 && domain_[w][c]) ++avail_[w];
            }
            colour_[v] = -1;
            if (stop) return true;
        }
        return false;
    }

    std::size_t idx(int v, int c) const { return static_cast<std::size_t>(v) * C_ + c; }

    const Graph& g_;
    int C_;
    std::vector<std::vector<char>> domain_;
    std::vector<int> blocked_, avail_, colour_;
    const std::function<bool(const std::vector<int>&)>* visit_ = nullptr;
};

// Decision search: forward checking with conflict-directed backjumping.  A
// failed subtree reports the assigned vertices responsible, and every
// choice point outside that set is skipped on the way back.
class JumpSearch {
public:
    JumpSearch(const Graph& g, int colours, std::vector<std::vector<char>> domain, bool fix_first)
        : g_(g), C_(colours), domain_(std::move(domain)), fix_first_(fix_first) {
        const int n = g.n();
        blocked_.assign(static_cast<std::size_t>(n) * C_, 0);
        avail_.assign(n, 0);
        colour_.assign(n, -1);
        for (int v = 0; v < n; ++v) avail_[v] = static_cast<int>(std::count(domain_[v].begin(), domain_[v].end(), 1));
    }

    std::optional<std::vector<int>> run() {
        for (int v = 0; v < g_.n(); ++v)
            if (avail_[v] == 0) return std::nullopt;
        std::vector<char> conflict;
        if (rec(0, conflict)) return colour_;
        return std::nullopt;
    }

private:
    // Assigned neighbours of w whose colour lies in w's domain.
    void add_pruners(int w, int except, std::vector<char>& into) const {
        for (int u : g_.neighbours(w))
            if (u != except && colour_[u] >= 0 && domain_[w][colour_[u]]) into[u] = 1;
    }

    bool rec(int done, std::vector<char>& conflict) {
        const int n = g_.n();
        if (done == n) return true;
        int v = -1;
        for (int u = 0; u < n; ++u) {
            if (colour_[u] >= 0) continue;
            if (v < 0 || avail_[u] < avail_[v] || (avail_[u] == avail_[v] && g_.degree(u) > g_.degree(v))) v = u;
        }
        std::vector<char> mine(n, 0);
        add_pruners(v, -1, mine);
        std::vector<char> child;
        for (int c = 0; c < C_; ++c) {
            if (fix_first_ && done == 0 && c > 0) break;
            if (!domain_[v][c] || blocked_[idx(v, c)]) continue;
            colour_[v] = c;
            int wiped = -1;
            for (int w : g_.neighbours(v)) {
                if (colour_[w] >= 0) continue;
                if (blocked_[idx(w, c)]++ == 0 && domain_[w][c] && --avail_[w] == 0 && wiped < 0) wiped = w;
            }
            bool jump = false;
            if (wiped >= 0) {
                add_pruners(wiped, v, mine);
            } else {
                child.assign(n, 0);
                if (rec(done + 1, child)) return true;
                if (child[v]) {
                    child[v] = 0;
                    for (int u = 0; u < n; ++u) mine[u] |= child[u];
                } else {
                    jump = true;
                }
            }
            for (int w : g_.neighbours(v)) {
                if (colour_[w] >= 0) continue;
                if (--blocked_[idx(w, c)] == 0 && domain_[w][c]) ++avail_[w];
            }
            colour_[v] = -1;
            if (jump) {
                conflict.swap(child);
                return false;
            }
        }
        conflict.swap(mine);
        return false;
    }

    std::size_t idx(int v, int c) const { return static_cast<std::size_t>(v) * C_ + c; }

    const Graph& g_;
    int C_;
    std::vector<std::vector<char>> domain_;
    bool fix_first_;
    std::vector<int> blocked_, avail_, colour_;
};

}  // namespace

std::optional<Colouring> brute_k_colourable(const Graph& g, int k, const OracleLimits& lim) {
    require(g.n() <= lim.max_vertices, "brute_k_colourable: " + std::to_string(g.n()) + " vertices exceeds cap " +
                                           std::to_string(lim.max_vertices));
    if (k < 0) throw PreconditionError("k must be non-negative");
    if (g.n() == 0) return Colouring(0, k);
    if (k == 0) return std::nullopt;
    std::vector<std::vector<char>> dom(g.n(), std::vector<char>(k, 1));
    // The first vertex may take colour 0 without loss of generality.
    auto col = JumpSearch(g, k, std::move(dom), true).run();
    if (!col) return std::nullopt;
    Colouring c(g.n(), k);
    for (int v = 0; v < g.n(); ++v) c[v] = (*col)[v] + 1;
    return c;
}

int brute_chromatic(const Graph& g, const OracleLimits& lim) {
    for (int k = 0;; ++k)
        if (brute_k_colourable(g, k, lim)) return k;
}

void for_each_k_colouring(const Graph& g, int k, const std::function<bool(const Colouring&)>& visit,
                          const OracleLimits& lim) {
    require(g.n() <= lim.max_vertices, "for_each_k_colouring: instance exceeds cap");
    if (g.n() == 0) {
        visit(Colouring(0, k));
        return;
    }
    if (k <= 0) return;
    std::vector<std::vector<char>> dom(g.n(), std::vector<char>(k, 1));
    Search s(g, k, std::move(dom));
    s.run([&](const std::vector<int>& col) {
        Colouring c(g.n(), k);
        for (int v = 0; v < g.n(); ++v) c[v] = col[v] + 1;
        return visit(c);
    });
}

std::optional<Colouring> brute_list_colourable(const Graph& g, const ListAssignment& l, const OracleLimits& lim) {
    require(g.n() <= lim.max_vertices, "brute_list_colourable: instance exceeds cap");
    if (l.n() != g.n()) throw PreconditionError("list assignment size mismatch");
    std::vector<int> palette;
    for (const auto& x : l.lists) palette.insert(palette.end(), x.begin(), x.end());
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    if (g.n() == 0) return Colouring(0, 0);
    if (palette.empty()) return std::nullopt;
    const int C = static_cast<int>(palette.size());
    std::vector<std::vector<char>> dom(g.n(), std::vector<char>(C, 0));
    for (int v = 0; v < g.n(); ++v)
        for (int c : l[v]) dom[v][std::lower_bound(palette.begin(), palette.end(), c) - palette.begin()] = 1;
    auto col = JumpSearch(g, C, std::move(dom), false).run();
    if (!col) return std::nullopt;
    Colouring c(g.n(), palette.back());
    for (int v = 0; v < g.n(); ++v) c[v] = palette[(*col)[v]];
    return c;
}

namespace {

bool separated(const Graph& g, int x, int y, const std::vector<char>& dead_vertex,
               const std::vector<std::vector<char>>* dead_edge) {
    std::vector<char> seen(g.n(), 0);
    std::queue<int> q;
    q.push(x);
    seen[x] = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        const auto& nb = g.neighbours(u);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            int w = nb[i];
            if (seen[w] || dead_vertex[w]) continue;
            if (dead_edge && (*dead_edge)[u][i]) continue;
            if (w == y) return false;
            seen[w] = 1;
            q.push(w);
        }
    }
    return true;
}

// Calls f on each size-r subset of {0..n-1}; stops when f returns true.
bool any_subset(int n, int r, const std::function<bool(const std::vector<int>&)>& f) {
    std::vector<int> idx(r);
    std::iota(idx.begin(), idx.end(), 0);
    if (r > n) return false;
    while (true) {
        if (f(idx)) return true;
        int i = r - 1;
        while (i >= 0 && idx[i] == n - r + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

int brute_min_cut(const Graph& g, int x, int y, CutMode mode, const OracleLimits& lim) {
    if (x == y) throw PreconditionError("brute_min_cut needs distinct vertices");
    if (mode == CutMode::Edge) {
        require(g.m() <= lim.max_cut_edges, "brute_min_cut: too many edges for enumeration");
        auto edges = g.edges();
        std::vector<char> no_vertex(g.n(), 0);
        for (int r = 0; r <= static_cast<int>(edges.size()); ++r) {
            bool found = any_subset(static_cast<int>(edges.size()), r, [&](const std::vector<int>& pick) {
                std::vector<std::vector<char>> dead(g.n());
                for (int v = 0; v < g.n(); ++v) dead[v].assign(g.neighbours(v).size(), 0);
                for (int i : pick) {
                    auto [a, b] = edges[i];
                    const auto& na = g.neighbours(a);
                    const auto& nb = g.neighbours(b);
                    dead[a][std::lower_bound(na.begin(), na.end(), b) - na.begin()] = 1;
                    dead[b][std::lower_bound(nb.begin(), nb.end(), a) - nb.begin()] = 1;
                }
                return separated(g, x, y, no_vertex, &dead);
            });
            if (found) return r;
        }
        throw InvariantError("edge cut enumeration found no cut");
    }
    require(g.n() <= lim.max_cut_vertices, "brute_min_cut: too many vertices for enumeration");
    if (g.has_edge(x, y)) return brute_min_cut(g.without_edge(x, y), x, y, mode, lim) + 1;
    std::vector<int> others;
    for (int v = 0; v < g.n(); ++v)
        if (v != x && v != y) others.push_back(v);
    for (int r = 0; r <= static_cast<int>(others.size()); ++r) {
        bool found = any_subset(static_cast<int>(others.size()), r, [&](const std::vector<int>& pick) {
            std::vector<char> dead(g.n(), 0);
            for (int i : pick) dead[others[i]] = 1;
            return separated(g, x, y, dead, nullptr);
        });
        if (found) return r;
    }
    throw InvariantError("vertex cut enumeration found no cut");
}

bool is_k_critical(const Graph& g, int k, const OracleLimits& lim) {
    if (!brute_k_colourable(g, k, lim) || brute_k_colourable(g, k - 1, lim)) return false;
    if (k >= 2)
        for (int v = 0; v < g.n(); ++v)
            if (g.degree(v) == 0) return false;
    for (auto [u, v] : g.edges())
        if (!brute_k_colourable(g.without_edge(u, v), k - 1, lim)) return false;
    return true;
}

namespace {

class HyperSearch {
public:
    HyperSearch(const Hypergraph& h, int k, bool symmetry) : h_(h), k_(k), symmetry_(symmetry), colour_(h.n, 0) {
        closing_.assign(h.n, {});
        for (std::size_t i = 0; i < h.edges.size(); ++i)
            if (!h.edges[i].empty()) closing_[h.edges[i].back()].push_back(static_cast<int>(i));
    }

    template <class F>
    bool run(F&& visit) {
        return rec(0, 0, visit);
    }

private:
    template <class F>
    bool rec(int v, int maxused, F& visit) {
        if (v == h_.n) return visit(colour_);
        for (int c = 1; c <= k_; ++c) {
            if (symmetry_ && c > maxused + 1) break;
            colour_[v] = c;
            bool ok = true;
            for (int e : closing_[v]) {
                const auto& ed = h_.edges[e];
                if (std::all_of(ed.begin(), ed.end(), [&](int u) { return colour_[u] == c; })) {
                    ok = false;
                    break;
                }
            }
            if (ok && rec(v + 1, std::max(maxused, c), visit)) return true;
        }
        colour_[v] = 0;
        return false;
    }

    const Hypergraph& h_;
    int k_;
    bool symmetry_;
    std::vector<int> colour_;
    std::vector<std::vector<int>> closing_;
};

}  // namespace

std::optional<std::vector<int>> brute_hypergraph_colourable(const Hypergraph& h, int k, const OracleLimits& lim) {
    require(h.n <= lim.max_vertices, "brute_hypergraph_colourable: instance exceeds cap");
    std::optional<std::vector<int>> out;
    HyperSearch s(h, k, true);
    s.run([&](const std::vector<int>& c) {
        out = c;
        return true;
    });
    return out;
}

long long count_hypergraph_colourings(const Hypergraph& h, int k, const OracleLimits& lim) {
    require(h.n <= std::min(lim.max_vertices, 16), "count_hypergraph_colourings: instance exceeds cap");
    long long count = 0;
    HyperSearch s(h, k, false);
    s.run([&](const std::vector<int>&) {
        ++count;
        return false;
    });
    return count;
}

}  // namespace lcol
