#include "lcol/mlec.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "lcol/brooks.hpp"

namespace lcol {

namespace {

// Epoch-stamped membership set that is cheap to clear.
class Marker {
public:
    explicit Marker(int n) : stamp_(n, 0) {}
    void clear() {
        if (++epoch_ == 0) {
            std::fill(stamp_.begin(), stamp_.end(), 0);
            epoch_ = 1;
        }
    }
    void set(int v) { stamp_[v] = epoch_; }
    bool has(int v) const { return stamp_[v] == epoch_; }

private:
    std::vector<unsigned> stamp_;
    unsigned epoch_ = 1;
};

std::string pair_text(const Graph& g, int u, int v) { return "(" + g.label(u) + ", " + g.label(v) + ")"; }

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Shared state for repeated cut searches on a shrinking working graph.
struct CutSearch {
    const Graph& w;
    int k;
    EdgeFlow flow;
    Marker seen, in_x;

    CutSearch(const Graph& g, int k_) : w(g), k(k_), flow(g), seen(g.n()), in_x(g.n()) {}

    int nearest_high(int x, const std::set<int>& high) {
        seen.clear();
        std::queue<int> q;
        q.push(x);
        seen.set(x);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : w.neighbours(u)) {
                if (seen.has(v)) continue;
                if (high.count(v)) return v;
                seen.set(v);
                q.push(v);
            }
        }
        return -1;
    }

    void run_exact(int s, int t) {
        int val = flow.run(s, t, k + 1);
        if (val > k)
            throw PreconditionError("local edge-connectivity above " + std::to_string(k) + " for pair " +
                                    pair_text(w, s, t));
        if (val < k)
            throw PreconditionError("graph is not " + std::to_string(k) + "-connected: pair " + pair_text(w, s, t) +
                                    " has local edge-connectivity " + std::to_string(val));
    }

    // Smaller of the two extreme minimum cut sides; switches `cur` to t when the sink side is used.
    std::vector<int> small_side(int s, int t, std::size_t cap, int& cur) {
        if (auto a = flow.source_side(cap)) {
            cur = s;
            return *a;
        }
        if (auto b = flow.sink_side(cap)) {
            cur = t;
            return *b;
        }
        throw InvariantError("neither minimum cut side fits in half the graph");
    }

    std::vector<Edge> boundary(const std::vector<int>& x) {
        in_x.clear();
        for (int v : x) in_x.set(v);
        std::vector<Edge> s;
        for (int v : x)
            for (int u : w.neighbours(v))
                if (!in_x.has(u)) s.emplace_back(v, u);
        return s;
    }

    IsolatingCut find(const std::set<int>& high, int alive) {
        int x = *high.begin();
        int y = nearest_high(x, high);
        if (y < 0) throw PreconditionError("graph is disconnected");
        run_exact(x, y);
        const std::size_t cap = static_cast<std::size_t>(alive) / 2;
        int cur = x;
        std::vector<int> side = small_side(x, y, cap, cur);
        while (true) {
            int z = -1;
            for (int v : side)
                if (v != cur && high.count(v)) {
                    z = v;
                    break;
                }
            if (z < 0) break;
            run_exact(cur, z);
            int next = cur;
            auto part = small_side(cur, z, cap, next);
            side = intersect(side, part);
            cur = next;
            if (static_cast<int>(boundary(side).size()) != k)
                throw InvariantError("intersection of good sets is not good");
        }
        IsolatingCut out;
        out.isolated = cur;
        out.cut.edges = boundary(side);
        out.cut.x_side = side;
        if (static_cast<int>(out.cut.edges.size()) != k) throw InvariantError("isolating cut has the wrong size");
        if (!out.cut.vertex_disjoint()) throw InvariantError("isolating cut edges share a vertex");
        return out;
    }
};

void fill_y_side(IsolatingCut& c, int n, const std::vector<char>* dead = nullptr) {
    std::vector<char> in(n, 0);
    for (int v : c.cut.x_side) in[v] = 1;
    c.cut.y_side.clear();
    for (int v = 0; v < n; ++v)
        if (!in[v] && !(dead && (*dead)[v])) c.cut.y_side.push_back(v);
}

void check_class(const Graph& g, int k) {
    if (!is_k_connected(g, k)) throw PreconditionError("graph is not " + std::to_string(k) + "-connected");
    if (auto p = find_lambda_violation(g, k))
        throw PreconditionError("local edge-connectivity above " + std::to_string(k) + " for pair " +
                                pair_text(g, p->first, p->second));
}

// Colour permutation for the movable side: sigma[b] != a for every (a, b) pair.
std::optional<std::vector<int>> find_sigma(int k, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> classes;
    for (auto [a, b] : pairs) classes.push_back(b);
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    std::vector<std::vector<char>> forbidden(k + 1, std::vector<char>(k + 1, 0));
    for (auto [a, b] : pairs) forbidden[b][a] = 1;

    std::vector<int> sigma(k + 1, 0);
    std::vector<char> used(k + 1, 0);
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == classes.size()) return true;
        int b = classes[i];
        for (int c = 1; c <= k; ++c) {
            if (used[c] || forbidden[b][c]) continue;
            used[c] = 1;
            sigma[b] = c;
            if (self(self, i + 1)) return true;
            used[c] = 0;
        }
        sigma[b] = 0;
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    int next = 1;
    for (int b = 1; b <= k; ++b) {
        if (sigma[b]) continue;
        while (used[next]) ++next;
        sigma[b] = next;
        used[next] = 1;
    }
    return sigma;
}

int image_size(const std::vector<int>& colours) {
    std::set<int> s(colours.begin(), colours.end());
    return static_cast<int>(s.size());
}

Graph capped_graph(const Graph& w, const std::vector<int>& side, const std::vector<Edge>& cut,
                   std::vector<int>& vertices) {
    vertices = side;
    for (auto [a, b] : cut) vertices.push_back(b);
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    Graph h = w.induced(vertices);
    std::vector<int> far;
    for (auto [a, b] : cut) far.push_back(static_cast<int>(std::lower_bound(vertices.begin(), vertices.end(), b) - vertices.begin()));
    // Edges of the induced graph between far endpoints are part of the clique anyway.
    for (std::size_t i = 0; i < far.size(); ++i)
        for (std::size_t j = i + 1; j < far.size(); ++j) h.add_edge(far[i], far[j]);
    return h;
}

struct Record {
    std::vector<int> vertices;  // vertices of G_X, increasing
    std::vector<int> x_side;
    std::vector<Edge> cut;      // (x end, y end)
    Colouring c1;               // colouring of G_X in local ids
};

// Rim in cyclic order for a graph whose non-hub part is a cycle.
std::vector<int> cycle_order(const Graph& g, int hub) {
    std::vector<int> rim;
    int start = hub == 0 ? 1 : 0;
    int prev = -1, cur = start;
    do {
        rim.push_back(cur);
        int nxt = -1;
        for (int w : g.neighbours(cur))
            if (w != hub && w != prev) {
                nxt = w;
                break;
            }
        prev = cur;
        cur = nxt;
    } while (cur != start && cur >= 0 && static_cast<int>(rim.size()) < g.n());
    return rim;
}

ColourOutcome base_case(const Graph& h, int k, bool audit) {
    std::vector<int> all(h.n());
    std::iota(all.begin(), all.end(), 0);
    if (is_complete(h) && h.n() == k + 1) return ColourOutcome::obstruction(OutcomeKind::Complete, all);
    auto flags = structural_predicates(h);
    if (flags.dominating_vertex) {
        int v = *flags.dominating_vertex;
        std::vector<int> kept;
        Graph rest = h.without_vertices({v}, &kept);
        ColourOutcome r = brooks_colour(rest, k - 1);
        if (r.kind == OutcomeKind::OddCycle) {
            std::vector<int> witness{v};
            for (int u : cycle_order(h, v)) witness.push_back(u);
            return ColourOutcome::obstruction(OutcomeKind::OddWheel, witness, "odd wheel");
        }
        if (!r.coloured()) return ColourOutcome::obstruction(OutcomeKind::Complete, all);
        Colouring c(h.n(), k);
        for (std::size_t i = 0; i < kept.size(); ++i) c[kept[i]] = r.colouring[static_cast<int>(i)];
        c[v] = k;
        return ColourOutcome::success(c);
    }
    return ColourOutcome::success(lovasz_colour(h, k, audit));
}

void audit_capped(const Graph& h, int k, const char* what) {
    auto rep = classify(h, k);
    if (!rep.c1_hat) throw InvariantError(std::string(what) + " left the class");
}

}  // namespace

IsolatingCut find_isolating_edge_cut(const Graph& g, int k, bool check) {
    if (k < 3) throw PreconditionError("find_isolating_edge_cut needs k >= 3");
    std::set<int> high;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > k) high.insert(v);
    if (high.size() < 2) throw PreconditionError("need at least two vertices of degree above k");
    if (check) check_class(g, k);
    CutSearch search(g, k);
    IsolatingCut out = search.find(high, g.n());
    fill_y_side(out, g.n());
    return out;
}

Graph cap_side(const Graph& g, const EdgeCut& cut, CutSide keep, std::vector<int>* map) {
    std::vector<Edge> oriented = cut.edges;
    const std::vector<int>* side = &cut.x_side;
    if (keep == CutSide::Y) {
        for (auto& e : oriented) std::swap(e.first, e.second);
        side = &cut.y_side;
    }
    std::vector<int> vertices;
    Graph h = capped_graph(g, *side, oriented, vertices);
    if (map) *map = vertices;
    return h;
}

ColourOutcome merge_colourings(const Graph& g, const EdgeCut& cut, const Colouring& c1, const Colouring& c2) {
    const int k = std::max(c1.k, c2.k);
    std::vector<int> im1, im2;
    std::vector<std::pair<int, int>> pairs;
    for (auto [a, b] : cut.edges) {
        im1.push_back(c1[a]);
        im2.push_back(c2[b]);
        pairs.emplace_back(c1[a], c2[b]);
    }
    int s1 = image_size(im1), s2 = image_size(im2);
    if ((s1 == 1 && s2 == k) || (s1 == k && s2 == 1))
        return ColourOutcome::obstruction(OutcomeKind::Infeasible, {}, "cut images have sizes {1, k}");
    auto sigma = find_sigma(k, pairs);
    if (!sigma) return ColourOutcome::obstruction(OutcomeKind::Infeasible, {}, "no merging permutation");
    Colouring out(g.n(), k);
    for (int v : cut.x_side) out[v] = c1[v];
    for (int v : cut.y_side) out[v] = (*sigma)[c2[v]];
    return ColourOutcome::success(out);
}

ColourOutcome colour_kconn_mleck(const Graph& g, int k, const MlecOptions& opt) {
    if (k < 3) throw PreconditionError("colour_kconn_mleck needs k >= 3");
    if (g.n() == 0) return ColourOutcome::success(Colouring(0, k));
    if (opt.check_preconditions) check_class(g, k);

    Graph w = g;
    std::vector<char> dead(g.n(), 0);
    int alive = g.n();
    std::set<int> high;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > k) high.insert(v);

    std::vector<Record> records;
    CutSearch search(w, k);
    while (high.size() >= 2) {
        IsolatingCut ic = search.find(high, alive);
        Record rec;
        rec.x_side = ic.cut.x_side;
        rec.cut = ic.cut.edges;
        Graph gx = capped_graph(w, rec.x_side, rec.cut, rec.vertices);
        if (opt.audit) audit_capped(gx, k, "capped isolated side");
        rec.c1 = lovasz_colour(gx, k, opt.audit);

        std::vector<int> xs;
        for (auto [a, b] : rec.cut) xs.push_back(a);
        for (int v : rec.x_side) {
            if (std::find(xs.begin(), xs.end(), v) != xs.end()) continue;
            w.isolate(v);
            dead[v] = 1;
            --alive;
        }
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = i + 1; j < xs.size(); ++j) w.add_edge(xs[i], xs[j]);
        for (int v : rec.x_side) high.erase(v);
        records.push_back(std::move(rec));

        if (opt.audit) {
            std::vector<int> live;
            for (int v = 0; v < w.n(); ++v)
                if (!dead[v]) live.push_back(v);
            audit_capped(w.induced(live), k, "capped remaining side");
        }
    }

    std::vector<int> live;
    for (int v = 0; v < w.n(); ++v)
        if (!dead[v]) live.push_back(v);
    Graph rest = w.induced(live);
    ColourOutcome base = base_case(rest, k, opt.audit);
    if (!base.coloured()) {
        if (!records.empty()) throw InvariantError("capped graph turned out not to be colourable");
        return base;
    }
    Colouring phi(g.n(), k);
    for (std::size_t i = 0; i < live.size(); ++i) phi[live[i]] = base.colouring[static_cast<int>(i)];

    for (auto it = records.rbegin(); it != records.rend(); ++it) {
        const Record& r = *it;
        auto local = [&](int v) {
            return static_cast<int>(std::lower_bound(r.vertices.begin(), r.vertices.end(), v) - r.vertices.begin());
        };
        std::vector<std::pair<int, int>> pairs;
        for (auto [a, b] : r.cut) pairs.emplace_back(phi[b], r.c1[local(a)]);
        auto sigma = find_sigma(k, pairs);
        if (!sigma) throw InvariantError("colour merge failed on an isolating cut");
        for (int v : r.x_side) phi[v] = (*sigma)[r.c1[local(v)]];
    }
    if (!verify_colouring(g, phi)) throw InvariantError("colour_kconn_mleck produced an improper colouring");
    return ColourOutcome::success(std::move(phi));
}

}  // namespace lcol
