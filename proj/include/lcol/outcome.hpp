#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lcol/graph.hpp"

namespace lcol {

/**
 * Join tree certifying that a graph is built from odd wheels by Hajos joins.
 *
 * All vertex identifiers refer to the certified graph itself.  A leaf is an
 * odd wheel given by its hub and its rim in cyclic order.  A join node says:
 * the two children share exactly the vertex `identified`; the edge
 * (identified, v1) of the left child and (identified, v2) of the right child
 * are deleted and v1 v2 is added.
 */
struct MorassCertificate {
    struct Node {
        bool is_wheel = true;
        int hub = -1;
        std::vector<int> rim;
        int left = -1, right = -1;
        int identified = -1, v1 = -1, v2 = -1;
    };

    std::vector<Node> nodes;
    int root = -1;

    static MorassCertificate wheel(int hub, std::vector<int> rim);
    static MorassCertificate join(const MorassCertificate& left, const MorassCertificate& right, int identified,
                                  int v1, int v2);

    /// Applies `map` (old id -> new id) to every stored vertex.
    MorassCertificate remapped(const std::vector<int>& map) const;
    std::vector<int> vertices() const;
    int leaf_count() const;
};

struct ReplayResult {
    bool ok = false;
    std::vector<int> vertices;
    std::vector<Edge> edges;  // canonical u < v, sorted
    std::string error;
};

ReplayResult replay_certificate(const MorassCertificate& cert);

nlohmann::json to_json(const MorassCertificate& cert, const Graph& g);
MorassCertificate certificate_from_json(const nlohmann::json& j, const Graph& g);

enum class OutcomeKind { Coloured, Complete, OddCycle, OddWheel, MorassBlock, Infeasible };

std::string to_string(OutcomeKind kind);

/// One peel of a uniform leaf block: `removed` left the graph, `colours` left the list of `attachment`.
struct PeelStep {
    std::vector<int> removed;
    int attachment = -1;
    std::vector<int> colours;
};

struct ListCertificate {
    std::vector<PeelStep> peels;
    std::vector<int> terminal_block;
    std::vector<int> terminal_list;
};

struct ColourOutcome {
    OutcomeKind kind = OutcomeKind::Infeasible;
    Colouring colouring;
    std::vector<int> witness;
    std::optional<int> stuck_vertex;
    std::optional<MorassCertificate> certificate;
    std::optional<ListCertificate> list_certificate;
    std::string detail;

    bool coloured() const { return kind == OutcomeKind::Coloured; }

    static ColourOutcome success(Colouring c);
    static ColourOutcome obstruction(OutcomeKind kind, std::vector<int> witness, std::string detail = {});
};

nlohmann::json to_json(const ColourOutcome& r, const Graph& g);

}  // namespace lcol
