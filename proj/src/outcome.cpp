#include "lcol/outcome.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "lcol/io.hpp"

namespace lcol {

MorassCertificate MorassCertificate::wheel(int hub, std::vector<int> rim) {
    MorassCertificate c;
    Node n;
    n.is_wheel = true;
    n.hub = hub;
    n.rim = std::move(rim);
    c.nodes.push_back(std::move(n));
    c.root = 0;
    return c;
}

MorassCertificate MorassCertificate::join(const MorassCertificate& left, const MorassCertificate& right,
                                          int identified, int v1, int v2) {
    MorassCertificate c;
    c.nodes = left.nodes;
    const int shift = static_cast<int>(c.nodes.size());
    for (Node n : right.nodes) {
        if (!n.is_wheel) {
            n.left += shift;
            n.right += shift;
        }
        c.nodes.push_back(std::move(n));
    }
    Node j;
    j.is_wheel = false;
    j.left = left.root;
    j.right = right.root + shift;
    j.identified = identified;
    j.v1 = v1;
    j.v2 = v2;
    c.nodes.push_back(j);
    c.root = static_cast<int>(c.nodes.size()) - 1;
    return c;
}

MorassCertificate MorassCertificate::remapped(const std::vector<int>& map) const {
    MorassCertificate c = *this;
    for (auto& n : c.nodes) {
        if (n.is_wheel) {
            n.hub = map.at(n.hub);
            for (int& r : n.rim) r = map.at(r);
        } else {
            n.identified = map.at(n.identified);
            n.v1 = map.at(n.v1);
            n.v2 = map.at(n.v2);
        }
    }
    return c;
}

std::vector<int> MorassCertificate::vertices() const {
    std::set<int> s;
    for (const auto& n : nodes)
        if (n.is_wheel) {
            s.insert(n.hub);
            s.insert(n.rim.begin(), n.rim.end());
        }
    return {s.begin(), s.end()};
}

int MorassCertificate::leaf_count() const {
    return static_cast<int>(std::count_if(nodes.begin(), nodes.end(), [](const Node& n) { return n.is_wheel; }));
}

namespace {
Edge canon(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }
}  // namespace

ReplayResult replay_certificate(const MorassCertificate& cert) {
    ReplayResult out;
    if (cert.root < 0 || cert.root >= static_cast<int>(cert.nodes.size())) {
        out.error = "certificate has no root";
        return out;
    }
    std::function<bool(int, std::set<int>&, std::set<Edge>&)> rec = [&](int id, std::set<int>& vs,
                                                                       std::set<Edge>& es) -> bool {
        const auto& n = cert.nodes[id];
        if (n.is_wheel) {
            int r = static_cast<int>(n.rim.size());
            if (r < 3 || r % 2 == 0) {
                out.error = "wheel rim length " + std::to_string(r) + " is not odd and at least 3";
                return false;
            }
            vs.insert(n.hub);
            for (int v : n.rim) vs.insert(v);
            if (static_cast<int>(vs.size()) != r + 1) {
                out.error = "wheel repeats a vertex";
                return false;
            }
            for (int i = 0; i < r; ++i) {
                es.insert(canon(n.hub, n.rim[i]));
                es.insert(canon(n.rim[i], n.rim[(i + 1) % r]));
            }
            return true;
        }
        if (n.left < 0 || n.right < 0 || n.left >= id || n.right >= id) {
            out.error = "join node refers to an invalid child";
            return false;
        }
        std::set<int> lv, rv;
        std::set<Edge> le, re;
        if (!rec(n.left, lv, le) || !rec(n.right, rv, re)) return false;
        std::vector<int> common;
        std::set_intersection(lv.begin(), lv.end(), rv.begin(), rv.end(), std::back_inserter(common));
        if (common != std::vector<int>{n.identified}) {
            out.error = "joined graphs must share exactly the identified vertex";
            return false;
        }
        if (!le.erase(canon(n.identified, n.v1)) || !re.erase(canon(n.identified, n.v2))) {
            out.error = "join edge missing from a child";
            return false;
        }
        vs = std::move(lv);
        vs.insert(rv.begin(), rv.end());
        es = std::move(le);
        es.insert(re.begin(), re.end());
        es.insert(canon(n.v1, n.v2));
        return true;
    };
    std::set<int> vs;
    std::set<Edge> es;
    if (!rec(cert.root, vs, es)) return out;
    out.ok = true;
    out.vertices.assign(vs.begin(), vs.end());
    out.edges.assign(es.begin(), es.end());
    return out;
}

nlohmann::json to_json(const MorassCertificate& cert, const Graph& g) {
    std::function<nlohmann::json(int)> rec = [&](int id) {
        const auto& n = cert.nodes[id];
        nlohmann::json j;
        if (n.is_wheel) {
            j["type"] = "wheel";
            j["hub"] = g.label(n.hub);
            j["rim"] = nlohmann::json::array();
            for (int v : n.rim) j["rim"].push_back(g.label(v));
        } else {
            j["type"] = "join";
            j["identified"] = g.label(n.identified);
            j["left_edge"] = {g.label(n.identified), g.label(n.v1)};
            j["right_edge"] = {g.label(n.identified), g.label(n.v2)};
            j["new_edge"] = {g.label(n.v1), g.label(n.v2)};
            j["left"] = rec(n.left);
            j["right"] = rec(n.right);
        }
        return j;
    };
    return rec(cert.root);
}

MorassCertificate certificate_from_json(const nlohmann::json& j, const Graph& g) {
    std::map<std::string, int> ids;
    for (int v = 0; v < g.n(); ++v) ids[g.label(v)] = v;
    auto id = [&](const nlohmann::json& x) {
        std::string s = x.is_string() ? x.get<std::string>() : x.dump();
        auto it = ids.find(s);
        if (it == ids.end()) throw ParseError("certificate names unknown vertex " + s);
        return it->second;
    };
    std::function<MorassCertificate(const nlohmann::json&)> rec = [&](const nlohmann::json& n) {
        if (!n.is_object() || !n.contains("type")) throw ParseError("certificate node without a type");
        std::string type = n.at("type").get<std::string>();
        if (type == "wheel") {
            std::vector<int> rim;
            for (const auto& r : n.at("rim")) rim.push_back(id(r));
            return MorassCertificate::wheel(id(n.at("hub")), std::move(rim));
        }
        if (type != "join") throw ParseError("unknown certificate node type " + type);
        const auto& le = n.at("left_edge");
        const auto& re = n.at("right_edge");
        if (!le.is_array() || le.size() != 2 || !re.is_array() || re.size() != 2)
            throw ParseError("join edges must be pairs");
        int u = id(n.at("identified"));
        if (id(le[0]) != u || id(re[0]) != u) throw ParseError("join edges must start at the identified vertex");
        return MorassCertificate::join(rec(n.at("left")), rec(n.at("right")), u, id(le[1]), id(re[1]));
    };
    try {
        return rec(j);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed certificate: ") + e.what());
    }
}

std::string to_string(OutcomeKind kind) {
    switch (kind) {
        case OutcomeKind::Coloured: return "coloured";
        case OutcomeKind::Complete: return "complete";
        case OutcomeKind::OddCycle: return "odd_cycle";
        case OutcomeKind::OddWheel: return "odd_wheel";
        case OutcomeKind::MorassBlock: return "morass_block";
        case OutcomeKind::Infeasible: return "infeasible";
    }
    return "unknown";
}

ColourOutcome ColourOutcome::success(Colouring c) {
    ColourOutcome r;
    r.kind = OutcomeKind::Coloured;
    r.colouring = std::move(c);
    return r;
}

ColourOutcome ColourOutcome::obstruction(OutcomeKind kind, std::vector<int> witness, std::string detail) {
    ColourOutcome r;
    r.kind = kind;
    r.witness = std::move(witness);
    r.detail = std::move(detail);
    return r;
}

nlohmann::json to_json(const ColourOutcome& r, const Graph& g) {
    nlohmann::json j;
    j["result"] = to_string(r.kind);
    auto labels = [&](const std::vector<int>& vs) {
        nlohmann::json a = nlohmann::json::array();
        for (int v : vs) a.push_back(g.label(v));
        return a;
    };
    if (r.coloured()) {
        j["k"] = r.colouring.k;
        nlohmann::json c = nlohmann::json::object();
        for (int v = 0; v < r.colouring.size(); ++v) c[g.label(v)] = r.colouring[v];
        j["colouring"] = c;
    }
    if (!r.witness.empty()) j["witness"] = labels(r.witness);
    if (r.stuck_vertex) j["stuck_vertex"] = g.label(*r.stuck_vertex);
    if (!r.detail.empty()) j["detail"] = r.detail;
    if (r.certificate) j["certificate"] = to_json(*r.certificate, g);
    if (r.list_certificate) {
        nlohmann::json lc;
        lc["peels"] = nlohmann::json::array();
        for (const auto& p : r.list_certificate->peels)
            lc["peels"].push_back(
                {{"removed", labels(p.removed)}, {"attachment", g.label(p.attachment)}, {"colours", p.colours}});
        lc["terminal_block"] = labels(r.list_certificate->terminal_block);
        lc["terminal_list"] = r.list_certificate->terminal_list;
        j["list_certificate"] = lc;
    }
    return j;
}

}  // namespace lcol
