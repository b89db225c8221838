// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "lcol/connectivity.hpp"
#include "lcol/fixtures.hpp"
#include "lcol/gadgets.hpp"
#include "lcol/list_fpt.hpp"
#include "lcol/mlec.hpp"
#include "lcol/morass.hpp"
#include "lcol/oracle.hpp"

using namespace lcol;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Collects failures for one criterion; the first few are echoed.
struct Check {
    int failures = 0;
    std::ostringstream detail;
    void expect(bool ok, const std::string& what) {
        if (ok) return;
        if (++failures <= 5) std::fprintf(stderr, "    failed: %s\n", what.c_str());
    }
};

const OracleLimits wide{400, 10, 20};

bool proper_list_colouring(const Graph& g, const ListAssignment& l, const Colouring& c) {
    if (!respects_lists(c, l)) return false;
    for (int v = 0; v < g.n(); ++v)
        if (c[v] == 0) return false;
    for (auto [a, b] : g.edges())
        if (c[a] == c[b]) return false;
    return true;
}

void connectivity_against_cuts(const Graph& g, Check& ck, long long& pairs) {
    for (int x = 0; x < g.n(); ++x)
        for (int y = x + 1; y < g.n(); ++y) {
            ck.expect(local_edge_connectivity_value(g, x, y) == brute_min_cut(g, x, y, CutMode::Edge), "lambda");
            ck.expect(local_vertex_connectivity_value(g, x, y) == brute_min_cut(g, x, y, CutMode::Vertex), "kappa");
            ++pairs;
        }
}

void criterion1(Check& ck) {
    Rng rng(101);
    auto t0 = Clock::now();
    long long pairs = 0;
    int graphs = 0;
    while (graphs < 2000) {
        int n = 2 + static_cast<int>(rng() % 6);
        Graph g = random_gnp(n, 0.2 + 0.6 * std::uniform_real_distribution<double>()(rng), rng);
        if (g.m() > 20) continue;
        connectivity_against_cuts(g, ck, pairs);
        ++graphs;
    }
    int larger = 0;
    while (larger < 200) {
        int n = 8 + static_cast<int>(rng() % 3);
        Graph g = random_gnp(n, 0.3, rng);
        if (g.m() > 20) continue;
        connectivity_against_cuts(g, ck, pairs);
        ++larger;
    }
    double secs = seconds_since(t0);
    ck.expect(secs < 60, "runtime");
    ck.detail << graphs << "+" << larger << " graphs, " << pairs << " pairs, " << secs << " s";
}

void criterion2(Check& ck) {
    Graph g = lambda_gap_graph();
    ClassReport r = classify(g, 4);
    ck.expect(r.global_connectivity == 4, "global connectivity");
    ck.expect(r.max_kappa == 4, "max kappa");
    ck.expect(r.max_lambda == 5, "max lambda");
    ck.expect(r.max_lambda_pair && *r.max_lambda_pair == Edge(lambda_gap_x, lambda_gap_y), "maximizing pair");
    ck.detail << "kappa " << r.global_connectivity << ", max kappa " << r.max_kappa << ", max lambda " << r.max_lambda;
}

void criterion3(Check& ck) {
    Rng rng(303);
    int total = 0, coloured = 0;
    for (int k : {3, 4})
        for (const Graph& g : testgen::mlec_instances(k, 110, 16, rng)) {
            ColourOutcome r = colour_kconn_mleck(g, k);
            bool oracle = brute_k_colourable(g, k).has_value();
            ck.expect(r.coloured() == oracle, "outcome vs oracle");
            if (r.coloured()) {
                ck.expect(static_cast<bool>(verify_colouring(g, r.colouring)), "colouring verifies");
                ++coloured;
            }
            ++total;
        }
    ck.expect(total >= 200, "instance count");
    double worst = 0;
    int largest = 0;
    MlecOptions opt;
    opt.check_preconditions = false;
    for (int x : {1000, 5000, 10000}) {
        auto t0 = Clock::now();
        Graph g = grid_family(x);
        ColourOutcome r = colour_kconn_mleck(g, 3, opt);
        bool ok = r.coloured() && verify_colouring(g, r.colouring);
        double secs = seconds_since(t0);
        ck.expect(ok, "grid colouring");
        ck.expect(secs < 10, "grid runtime");
        worst = std::max(worst, secs);
        largest = g.n();
    }
    ck.detail << total << " instances (" << coloured << " colourable), grid n=" << largest << " worst " << worst
              << " s";
}

void criterion4(Check& ck) {
    Rng rng(404);
    int total = 0, certified = 0;
    for (const Graph& g : testgen::mlec3_instances(130, 16, rng)) {
        ColourOutcome r = colour3_mlec3(g);
        bool oracle = brute_k_colourable(g, 3).has_value();
        ck.expect(r.coloured() == oracle, "outcome vs oracle");
        ++total;
        if (r.coloured()) {
            ck.expect(static_cast<bool>(verify_colouring(g, r.colouring)), "colouring verifies");
            continue;
        }
        if (!r.certificate) {
            ck.expect(false, "missing certificate");
            continue;
        }
        std::vector<int> block = r.certificate->vertices();
        std::vector<int> local(g.n(), -1);
        for (std::size_t i = 0; i < block.size(); ++i) local[block[i]] = static_cast<int>(i);
        Graph b = g.induced(block);
        ck.expect(verify_morass_certificate(b, r.certificate->remapped(local)), "certificate verifies");
        ck.expect(verify_morass_block(g, *r.certificate), "certificate is a block");
        ck.expect(!brute_k_colourable(b, 3).has_value(), "block not 3-colourable");
        ++certified;
    }
    ck.expect(total >= 100, "instance count");
    ck.expect(certified > 0 && certified < total, "mix of outcomes");
    ck.detail << total << " instances, " << certified << " certified morass blocks";
}

void criterion5(Check& ck) {
    Rng rng(505);
    int checked = 0;
    auto check = [&](const Graph& g) {
        ck.expect(is_k_critical(g, 4), "4-critical");
        bool lambda3 = true;
        for (int x = 0; x < g.n(); ++x)
            for (int y = x + 1; y < g.n(); ++y) lambda3 = lambda3 && local_edge_connectivity_value(g, x, y) >= 3;
        ck.expect(lambda3, "all-pairs lambda >= 3");
        ++checked;
    };
    for (int r = 3; r <= 13; r += 2) check(odd_wheel(r));
    for (int t = 0; t < 80; ++t) {
        std::vector<int> rims;
        int n = 0;
        for (;;) {
            int r = 3 + 2 * static_cast<int>(rng() % 3);
            int grow = rims.empty() ? r + 1 : r;
            if (n + grow > 15) break;
            rims.push_back(r);
            n += grow;
            if (rng() % 4 == 0) break;
        }
        GeneratedMorass m = random_morass(static_cast<int>(rims.size()) - 1, rims, rng());
        ck.expect(m.graph.n() <= 15, "size");
        ck.expect(verify_morass_certificate(m.graph, m.certificate), "generator certificate");
        check(m.graph);
    }
    ck.detail << checked << " morasses";
}

// Fixed n = 44: a K4 plus eight 5-vertex groups, the first p of them stars and the rest paths.
Graph scaling_instance(int p) {
    Graph g = complete_graph(4);
    for (int i = 0; i < 8; ++i) {
        int c = g.add_vertex();
        int prev = c;
        for (int j = 0; j < 4; ++j) {
            int v = g.add_vertex();
            g.add_edge(i < p ? c : prev, v);
            prev = v;
        }
    }
    return g;
}

void criterion6(Check& ck) {
    Rng rng(606);
    for (int t = 0; t < 300; ++t) {
        int k = 3 + t % 2;
        Graph g = testgen::fpt_instance(14, 5, k, rng);
        FptOutcome r = fpt_colour(g, k);
        bool oracle = brute_k_colourable(g, k).has_value();
        ck.expect(r.outcome.coloured() == oracle, "outcome vs oracle");
        if (r.outcome.coloured()) ck.expect(static_cast<bool>(verify_colouring(g, r.outcome.colouring)), "verifies");
        ck.expect(r.p <= 5, "p bound");
        long long bound = 1;
        for (int i = 0; i < r.p; ++i) bound *= std::min(k, r.p);
        ck.expect(r.branches <= bound, "branch bound");
    }

    std::vector<double> ratio(9, 0);
    for (int p = 2; p <= 8; ++p) {
        Graph g = scaling_instance(p);
        // Repeat until at least 50 ms to smooth timer noise.
        int reps = 0;
        auto t0 = Clock::now();
        do {
            FptOutcome r = fpt_colour(g, 3);
            ck.expect(r.p == p, "scaling p");
            ++reps;
        } while (seconds_since(t0) < 0.05);
        double per_run = seconds_since(t0) / reps;
        ratio[p] = per_run / std::pow(3.0, p);
    }
    double worst = 0;
    for (int q = 3; q <= 8; ++q)
        for (int p = 2; p < q; ++p) worst = std::max(worst, ratio[q] / ratio[p]);
    ck.expect(worst <= 2.0, "time / 3^p envelope");
    ck.detail << "300 instances, worst growth ratio " << worst;
}

void criterion7(Check& ck) {
    Rng rng(707);
    int bad = 0;
    for (int t = 0; t < 300; ++t) {
        Graph g = testgen::random_gallai_tree(12, rng);
        ListAssignment l = testgen::random_degree_lists(g, rng);
        ColourOutcome r = gallai_tree_colour(g, l);
        bool oracle = brute_list_colourable(g, l).has_value();
        ck.expect(r.coloured() == oracle, "gallai vs oracle");
        if (r.coloured())
            ck.expect(proper_list_colouring(g, l, r.colouring), "gallai colouring");
        else
            ++bad;
    }
    for (int t = 0; t < 300; ++t) {
        Graph g = testgen::random_non_gallai(12, rng);
        ListAssignment l = testgen::random_degree_lists(g, rng, false);
        Colouring c = degree_choosable_colour(g, l);
        ck.expect(proper_list_colouring(g, l, c), "degree-choosable colouring");
        ck.expect(brute_list_colourable(g, l).has_value(), "oracle agrees");
    }
    for (int t = 0; t < 100; ++t) {
        testgen::LeafFixture fx = testgen::uniform_leaf_fixture(rng);
        std::vector<int> kept;
        Graph rest = fx.graph.without_vertices(fx.leaf, &kept);
        ListAssignment lr = fx.lists.restrict_to(kept);
        int att = static_cast<int>(std::find(kept.begin(), kept.end(), fx.attachment) - kept.begin());
        for (int c : fx.leaf_list) lr.remove(att, c);
        ck.expect(brute_list_colourable(fx.graph, fx.lists).has_value() == brute_list_colourable(rest, lr).has_value(),
                  "peel equivalence");
    }
    ck.detail << "300 gallai (" << bad << " uncolourable), 300 degree-choosable, 100 peel fixtures";
}

void criterion8(Check& ck) {
    std::vector<Graph> corpus;
    for (int n = 1; n <= 6; ++n)
        for (auto& g : testgen::nonisomorphic_graphs(n)) corpus.push_back(std::move(g));
    int mlc3 = 0, mleck = 0, hyp = 0, minc = 0;
    for (const Graph& g : corpus) {
        bool col3 = brute_k_colourable(g, 3).has_value();
        if (g.n() >= 3 && is_k_connected(g, 2)) {
            ReductionOutput r = reduce_to_mlc3(g);
            ck.expect(col3 == brute_k_colourable(r.graph, 3, wide).has_value(), "mlc3 colourability");
            ClassReport c = classify(r.graph, 3);
            ck.expect(c.c2 && c.global_connectivity >= 2, "mlc3 class");
            ++mlc3;
        }
        if (g.n() >= 4 && is_k_connected(g, 3)) {
            ReductionOutput r = reduce_to_mleck(g, 4);
            ck.expect(col3 == brute_k_colourable(r.graph, 3, wide).has_value(), "mleck colourability");
            ClassReport c = classify(r.graph, 4);
            ck.expect(c.c1 && c.global_connectivity >= 3 && c.max_degree <= 4, "mleck class");
            ++mleck;
        }
        Hypergraph h = graph_to_hypergraph(g, 3);
        ck.expect(h.is_uniform(3), "hypergraph uniform");
        ck.expect(col3 == brute_hypergraph_colourable(h, 3).has_value(), "hypergraph colourability");
        ++hyp;
    }

    std::vector<std::vector<int>> triples;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            for (int c = b + 1; c < 5; ++c) triples.push_back({a, b, c});
    const int t = static_cast<int>(triples.size());
    for (int n = 3; n <= 5; ++n)
        for (unsigned mask = 0; mask < (1u << t); ++mask) {
            if (__builtin_popcount(mask) > 4) continue;
            Hypergraph h;
            h.n = n;
            bool fits = true;
            for (int i = 0; i < t; ++i)
                if (mask >> i & 1) {
                    fits = fits && triples[i][2] < n;
                    h.add_edge(triples[i]);
                }
            if (!fits) continue;
            Graph g = hypergraph_to_min_kconn(h, 3);
            ck.expect(brute_hypergraph_colourable(h, 3).has_value() == brute_k_colourable(g, 3, wide).has_value(),
                      "min-kconn colourability");
            ck.expect(classify(g, 3).minimally_k_connected, "minimally 3-connected");
            ++minc;
        }
    ck.detail << mlc3 << " mlc3, " << mleck << " mleck, " << hyp << " hypergraph, " << minc << " min-kconn";
}

void criterion9(Check& ck) {
    Gadget hub = hub_gadget(4);
    ck.expect(hub.graph.n() == 19, "hub size");
    bool mono = true;
    long long count = 0;
    for_each_k_colouring(hub.graph, 3, [&](const Colouring& c) {
        ++count;
        for (int o : hub.outlets) mono = mono && c[o] == c[hub.outlets[0]];
        return true;
    });
    ck.expect(count > 0 && mono, "monochromatic outlets");
    Hypergraph rigid = rigid_hypergraph(3);
    long long rc = count_hypergraph_colourings(rigid, 3);
    ck.expect(rigid.edges.size() == 81, "rigid edges");
    ck.expect(rc == 6, "rigid colourings");
    Gadget d = degree_gadget(10, 4);
    ck.expect(d.chain == std::vector<int>{10, 8, 6}, "degree gadget chain");
    ck.detail << "hub n=" << hub.graph.n() << " (" << count << " colourings), rigid " << rigid.edges.size()
              << " edges / " << rc << " colourings, chain";
    for (int l : d.chain) ck.detail << " " << l;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria = {
        {"connectivity ground truth", criterion1},
        {"edge-connectivity fixture", criterion2},
        {"k-connected colouring", criterion3},
        {"3-colouring with morass blocks", criterion4},
        {"morass criticality", criterion5},
        {"fpt colouring", criterion6},
        {"list colouring machinery", criterion7},
        {"reduction soundness", criterion8},
        {"counting facts", criterion9},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check ck;
        auto t0 = Clock::now();
        try {
            criteria[i].second(ck);
        } catch (const std::exception& e) {
            ck.expect(false, std::string("exception: ") + e.what());
        }
        bool ok = ck.failures == 0;
        failed += !ok;
        std::printf("criterion %zu %-32s %s  [%s; %.1f s]\n", i + 1, criteria[i].first, ok ? "PASS" : "FAIL",
                    ck.detail.str().c_str(), seconds_since(t0));
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
