#pragma once

#include <cstdint>
#include <vector>

#include "lcol/graph.hpp"
#include "lcol/outcome.hpp"

namespace lcol {

/// Odd cycle of the given length plus a hub adjacent to all of it; hub is vertex 0.
Graph odd_wheel(int rim_length);

/**
 * Deletes u1v1 and u2v2, identifies u2 with u1 and adds v1v2.  Vertices of
 * g1 keep their ids; `g2_map` (optional) receives the new id of each g2 vertex.
 */
Graph hajos_join(const Graph& g1, int u1, int v1, const Graph& g2, int u2, int v2,
                 std::vector<int>* g2_map = nullptr);

struct GeneratedMorass {
    Graph graph;
    MorassCertificate certificate;
};

/// Left fold of Hajos joins over odd wheels; every joined edge has both ends on wheel rims.
GeneratedMorass random_morass(int joins, const std::vector<int>& rim_lengths, std::uint64_t seed);

/// True iff the certificate replays to exactly g.
bool verify_morass_certificate(const Graph& g, const MorassCertificate& cert);
/// True iff the certificate replays to a block of g (vertex set and induced edges).
bool verify_morass_block(const Graph& g, const MorassCertificate& cert);

/**
 * 3-colouring of a graph with local edge-connectivity at most 3, or
 * MorassBlock with a certificate for a block that is a wheel morass.
 */
ColourOutcome colour3_mlec3(const Graph& g, bool check = true);

struct OptimalColouring {
    int chromatic_number = 0;
    Colouring colouring;
};

OptimalColouring optimal_colouring_mlec3(const Graph& g, bool check = true);

/// 3-connected graph with every local connectivity at most 3.
ColourOutcome colour3_3conn_mlc3(const Graph& g);

}  // namespace lcol
