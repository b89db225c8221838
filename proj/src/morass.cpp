#include "lcol/morass.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "lcol/brooks.hpp"
#include "lcol/connectivity.hpp"
#include "lcol/fixtures.hpp"
#include "lcol/mlec.hpp"

namespace lcol {

Graph odd_wheel(int rim_length) {
    if (rim_length < 3 || rim_length % 2 == 0) throw PreconditionError("odd wheel rim length must be odd and >= 3");
    return wheel_graph(rim_length);
}

Graph hajos_join(const Graph& g1, int u1, int v1, const Graph& g2, int u2, int v2, std::vector<int>* g2_map) {
    if (!g1.has_edge(u1, v1)) throw PreconditionError("hajos_join: first edge missing");
    if (!g2.has_edge(u2, v2)) throw PreconditionError("hajos_join: second edge missing");
    Graph out = g1;
    out.remove_edge(u1, v1);
    std::vector<int> map(g2.n());
    for (int v = 0; v < g2.n(); ++v) map[v] = v == u2 ? u1 : out.add_vertex();
    for (auto [a, b] : g2.edges())
        if (!((a == u2 && b == v2) || (a == v2 && b == u2))) out.add_edge(map[a], map[b]);
    out.add_edge(v1, map[v2]);
    if (g2_map) *g2_map = map;
    return out;
}

GeneratedMorass random_morass(int joins, const std::vector<int>& rim_lengths, std::uint64_t seed) {
    if (joins < 0) throw PreconditionError("joins must be non-negative");
    if (static_cast<int>(rim_lengths.size()) != joins + 1)
        throw PreconditionError("need exactly joins + 1 rim lengths");
    Rng rng(seed);
    GeneratedMorass out;
    out.graph = odd_wheel(rim_lengths[0]);
    std::vector<int> rim_cycle(rim_lengths[0]);
    std::iota(rim_cycle.begin(), rim_cycle.end(), 1);
    out.certificate = MorassCertificate::wheel(0, rim_cycle);
    std::vector<char> on_rim(out.graph.n(), 1);
    on_rim[0] = 0;

    auto rim_edges = [](const Graph& g, const std::vector<char>& rim) {
        std::vector<Edge> es;
        for (auto [a, b] : g.edges())
            if (rim[a] && rim[b]) es.emplace_back(a, b);
        return es;
    };
    for (int i = 1; i <= joins; ++i) {
        Graph w = odd_wheel(rim_lengths[i]);
        std::vector<char> w_rim(w.n(), 1);
        w_rim[0] = 0;
        auto e1 = rim_edges(out.graph, on_rim);
        auto e2 = rim_edges(w, w_rim);
        auto [u1, v1] = e1[std::uniform_int_distribution<std::size_t>(0, e1.size() - 1)(rng)];
        auto [u2, v2] = e2[std::uniform_int_distribution<std::size_t>(0, e2.size() - 1)(rng)];
        if (rng() & 1) std::swap(u1, v1);
        if (rng() & 1) std::swap(u2, v2);
        std::vector<int> map;
        Graph joined = hajos_join(out.graph, u1, v1, w, u2, v2, &map);
        std::vector<int> rim(rim_lengths[i]);
        std::iota(rim.begin(), rim.end(), 1);
        MorassCertificate wc = MorassCertificate::wheel(0, rim).remapped(map);
        out.certificate = MorassCertificate::join(out.certificate, wc, u1, v1, map[v2]);
        on_rim.resize(joined.n(), 0);
        for (int v = 0; v < w.n(); ++v)
            if (w_rim[v]) on_rim[map[v]] = 1;
        out.graph = std::move(joined);
    }
    return out;
}

bool verify_morass_certificate(const Graph& g, const MorassCertificate& cert) {
    ReplayResult r = replay_certificate(cert);
    if (!r.ok) return false;
    if (static_cast<int>(r.vertices.size()) != g.n()) return false;
    for (int i = 0; i < g.n(); ++i)
        if (r.vertices[i] != i) return false;
    return r.edges == g.edges();
}

bool verify_morass_block(const Graph& g, const MorassCertificate& cert) {
    ReplayResult r = replay_certificate(cert);
    if (!r.ok || r.vertices.empty() || r.vertices.back() >= g.n() || r.vertices.front() < 0) return false;
    BlockForest f = blocks(g);
    if (std::find(f.blocks.begin(), f.blocks.end(), r.vertices) == f.blocks.end()) return false;
    std::vector<int> local(g.n(), -1);
    for (std::size_t i = 0; i < r.vertices.size(); ++i) local[r.vertices[i]] = static_cast<int>(i);
    return verify_morass_certificate(g.induced(r.vertices), cert.remapped(local));
}

namespace {

// Result of the recursion on one graph, in that graph's ids.
struct Result {
    bool morass = false;
    Colouring colouring;
    MorassCertificate cert;
};

struct Sub {
    Graph g;
    std::vector<int> map;  // local -> parent
    int local(int v) const {
        return static_cast<int>(std::lower_bound(map.begin(), map.end(), v) - map.begin());
    }
};

Sub make_sub(const Graph& g, std::vector<int> vertices, const std::vector<Edge>& extra = {}) {
    std::sort(vertices.begin(), vertices.end());
    Sub s{g.induced(vertices), vertices};
    for (auto [a, b] : extra) s.g.add_edge(s.local(a), s.local(b));
    return s;
}

std::vector<int> cyclic_rim(const Graph& g, int hub) {
    std::vector<int> rim;
    int start = -1;
    for (int v = 0; v < g.n(); ++v)
        if (v != hub) {
            start = v;
            break;
        }
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

// Permutation of 1..3 (index 0 unused) meeting the given (from, to) and (from, not-to) constraints.
std::vector<int> colour_perm(const std::vector<std::pair<int, int>>& equal, const std::vector<std::pair<int, int>>& differ) {
    std::vector<int> p{0, 1, 2, 3};
    do {
        bool ok = true;
        for (auto [a, b] : equal) ok = ok && p[a] == b;
        for (auto [a, b] : differ) ok = ok && p[a] != b;
        if (ok) return p;
    } while (std::next_permutation(p.begin() + 1, p.end()));
    throw InvariantError("no colour permutation satisfies the gluing constraints");
}

class Solver {
public:
    Result general(const Graph& g) {
        if (g.n() == 0) return coloured(Colouring(0, 3));
        BlockForest f = blocks(g);
        if (f.blocks.size() == 1) return block(g);
        std::vector<Colouring> per;
        for (const auto& b : f.blocks) {
            Sub s = make_sub(g, b);
            Result r = block(s.g);
            if (r.morass) {
                Result out;
                out.morass = true;
                out.cert = r.cert.remapped(s.map);
                return out;
            }
            per.push_back(r.colouring);
        }
        return coloured(glue_blocks(g, f, per, 3));
    }

private:
    static Result coloured(Colouring c) {
        Result r;
        c.k = 3;
        r.colouring = std::move(c);
        return r;
    }

    static Result morass(MorassCertificate c) {
        Result r;
        r.morass = true;
        r.cert = std::move(c);
        return r;
    }

    // Colouring of a graph that must be 3-colourable.
    Colouring colour_of(const Graph& g, const char* what) {
        Result r = general(g);
        if (r.morass) throw InvariantError(std::string("unexpected wheel morass in ") + what);
        return r.colouring;
    }

    // Result for a graph that is a whole morass or colourable; anything else is an invariant failure.
    Result whole(const Graph& g, const char* what) {
        Result r = general(g);
        if (r.morass && static_cast<int>(r.cert.vertices().size()) != g.n())
            throw InvariantError(std::string("proper morass block inside ") + what);
        return r;
    }

    // g is a block, so 2-connected unless it has at most two vertices.
    Result block(const Graph& g) {
        if (g.n() <= 3 && is_complete(g)) {
            Colouring c(g.n(), 3);
            for (int v = 0; v < g.n(); ++v) c[v] = v + 1;
            return coloured(c);
        }
        if (is_k_connected(g, 3)) {
            MlecOptions opt;
            opt.check_preconditions = false;
            ColourOutcome r = colour_kconn_mleck(g, 3, opt);
            if (r.coloured()) return coloured(r.colouring);
            if (r.kind == OutcomeKind::Complete) return morass(MorassCertificate::wheel(0, {1, 2, 3}));
            if (r.kind == OutcomeKind::OddWheel) {
                int hub = r.witness.front();
                return morass(MorassCertificate::wheel(hub, cyclic_rim(g, hub)));
            }
            throw InvariantError("unexpected outcome on a 3-connected block");
        }
        return separated(g);
    }

    Result separated(const Graph& g) {
        auto sep = minimum_vertex_separation(g);
        if (!sep || sep->separator.size() != 2) throw InvariantError("expected a 2-separation");
        int x = sep->separator[0], y = sep->separator[1];
        std::vector<int> kept;
        Graph rest = g.without_vertices({x, y}, &kept);
        auto comps = components(rest);
        std::size_t smallest = 0;
        for (std::size_t i = 1; i < comps.size(); ++i)
            if (comps[i].size() < comps[smallest].size()) smallest = i;
        std::vector<int> a_side{x, y}, b_side{x, y};
        for (std::size_t i = 0; i < comps.size(); ++i)
            for (int v : comps[i]) (i == smallest ? a_side : b_side).push_back(kept[v]);

        Sub ha = make_sub(g, a_side, {{x, y}});
        Sub hb = make_sub(g, b_side, {{x, y}});
        Result ra = whole(ha.g, "H_A");
        Result rb = whole(hb.g, "H_B");
        if (!ra.morass && !rb.morass) {
            Colouring c(g.n(), 3);
            for (int i = 0; i < ha.g.n(); ++i) c[ha.map[i]] = ra.colouring[i];
            int bx = rb.colouring[hb.local(x)], by = rb.colouring[hb.local(y)];
            auto p = colour_perm({{bx, c[x]}, {by, c[y]}}, {});
            for (int i = 0; i < hb.g.n(); ++i) c[hb.map[i]] = p[rb.colouring[i]];
            return coloured(c);
        }
        if (!ra.morass) {
            std::swap(a_side, b_side);
            std::swap(ha, hb);
            std::swap(ra, rb);
        }
        if (g.has_edge(x, y)) throw InvariantError("morass side across an edge xy");
        MorassCertificate cert_a = ra.cert.remapped(ha.map);

        // G_B has exactly one bridge separating x from y.
        Sub gb = make_sub(g, b_side);
        EdgeConnectivity ec = local_edge_connectivity(gb.g, gb.local(x), gb.local(y));
        if (ec.value != 1) throw InvariantError("G_B should have a single x-y bridge");
        int xp = gb.map[ec.cut.edges[0].first], yp = gb.map[ec.cut.edges[0].second];
        std::vector<int> gx_side, gy_side;
        for (int v : ec.cut.x_side) gx_side.push_back(gb.map[v]);
        for (int v : ec.cut.y_side) gy_side.push_back(gb.map[v]);
        std::vector<int> a_only = a_side;  // includes x and y

        auto others = [&](const std::vector<int>& drop, int keep) {
            std::vector<char> gone(g.n(), 0);
            for (int v : drop) gone[v] = v != keep;
            std::vector<int> out;
            for (int v = 0; v < g.n(); ++v)
                if (!gone[v]) out.push_back(v);
            return out;
        };

        if (x != xp && y != yp) {
            Sub hx = make_sub(g, gx_side, {{x, xp}});
            Sub hy = make_sub(g, gy_side, {{y, yp}});
            Result rx = whole(hx.g, "H_x");
            Result ry = whole(hy.g, "H_y");
            if (rx.morass && ry.morass) {
                MorassCertificate cx = rx.cert.remapped(hx.map), cy = ry.cert.remapped(hy.map);
                MorassCertificate first = MorassCertificate::join(cert_a, cx, x, y, xp);
                return morass(MorassCertificate::join(first, cy, y, xp, yp));
            }
            // Colour the colourable side from its capped graph and the remainder independently.
            bool use_x = !rx.morass;
            const Sub& hs = use_x ? hx : hy;
            const Result& rs = use_x ? rx : ry;
            int s = use_x ? x : y, sp = use_x ? xp : yp, tp = use_x ? yp : xp;
            Sub remainder = make_sub(g, others(use_x ? gx_side : gy_side, s));
            Colouring c2 = colour_of(remainder.g, "the remainder");
            Colouring c(g.n(), 3);
            for (int i = 0; i < hs.g.n(); ++i) c[hs.map[i]] = rs.colouring[i];
            auto p = colour_perm({{c2[remainder.local(s)], c[s]}}, {{c2[remainder.local(tp)], c[sp]}});
            for (int i = 0; i < remainder.g.n(); ++i)
                if (remainder.map[i] != s) c[remainder.map[i]] = p[c2[i]];
            return coloured(c);
        }

        // Degenerate side: the bridge ends at x (or symmetrically at y).
        bool at_x = x == xp;
        int s = at_x ? y : x, sp = at_x ? yp : xp, t = at_x ? x : y;
        const auto& side = at_x ? gy_side : gx_side;
        Sub hs = make_sub(g, side, {{s, sp}});
        Result rs = whole(hs.g, at_x ? "H_y" : "H_x");
        if (rs.morass) return morass(MorassCertificate::join(cert_a, rs.cert.remapped(hs.map), s, t, sp));
        Sub ga = make_sub(g, a_only);
        Colouring c1 = colour_of(ga.g, "G_A");
        if (c1[ga.local(x)] != c1[ga.local(y)]) throw InvariantError("morass minus an edge gave its ends different colours");
        Colouring c(g.n(), 3);
        for (int i = 0; i < ga.g.n(); ++i) c[ga.map[i]] = c1[i];
        auto p = colour_perm({{rs.colouring[hs.local(s)], c[s]}}, {});
        for (int i = 0; i < hs.g.n(); ++i)
            if (hs.map[i] != s) c[hs.map[i]] = p[rs.colouring[i]];
        return coloured(c);
    }
};

void require_mlec3(const Graph& g) {
    if (auto p = find_lambda_violation(g, 3))
        throw PreconditionError("local edge-connectivity above 3 for pair (" + g.label(p->first) + ", " +
                                g.label(p->second) + ")");
}

}  // namespace

ColourOutcome colour3_mlec3(const Graph& g, bool check) {
    if (check) require_mlec3(g);
    Solver solver;
    Result r = solver.general(g);
    if (r.morass) {
        ColourOutcome out = ColourOutcome::obstruction(OutcomeKind::MorassBlock, r.cert.vertices(), "wheel morass block");
        out.certificate = r.cert;
        return out;
    }
    if (!verify_colouring(g, r.colouring)) throw InvariantError("colour3_mlec3 produced an improper colouring");
    return ColourOutcome::success(r.colouring);
}

OptimalColouring optimal_colouring_mlec3(const Graph& g, bool check) {
    OptimalColouring out;
    if (g.m() == 0) {
        out.chromatic_number = g.n() == 0 ? 0 : 1;
        out.colouring = Colouring(g.n(), out.chromatic_number);
        for (int v = 0; v < g.n(); ++v) out.colouring[v] = 1;
        return out;
    }
    if (auto c = two_colouring(g)) {
        out.chromatic_number = 2;
        out.colouring = *c;
        out.colouring.k = 2;
        return out;
    }
    ColourOutcome r = colour3_mlec3(g, check);
    if (r.coloured()) {
        out.chromatic_number = 3;
        out.colouring = r.colouring;
        return out;
    }
    // Smallest-last order: every graph here has a vertex of degree at most 3 in each subgraph.
    std::vector<int> deg(g.n());
    std::vector<char> removed(g.n(), 0);
    std::vector<int> order;
    for (int v = 0; v < g.n(); ++v) deg[v] = g.degree(v);
    for (int step = 0; step < g.n(); ++step) {
        int best = -1;
        for (int v = 0; v < g.n(); ++v)
            if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
        removed[best] = 1;
        order.push_back(best);
        for (int w : g.neighbours(best))
            if (!removed[w]) --deg[w];
    }
    std::reverse(order.begin(), order.end());
    ColourOutcome gr = greedy_colour(g, order, 4);
    if (!gr.coloured()) throw InvariantError("smallest-last greedy needed more than four colours");
    out.chromatic_number = 4;
    out.colouring = gr.colouring;
    return out;
}

ColourOutcome colour3_3conn_mlc3(const Graph& g) {
    if (!is_k_connected(g, 3)) throw PreconditionError("graph is not 3-connected");
    ClassReport rep = classify(g, 3);
    if (!rep.c2) throw PreconditionError("graph has local connectivity above 3");
    if (!rep.c1) throw InvariantError("3-connected graph with local connectivity 3 has local edge-connectivity above 3");
    MlecOptions opt;
    opt.check_preconditions = false;
    return colour_kconn_mleck(g, 3, opt);
}

}  // namespace lcol
