#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rcx/highest_weight.hpp"
#include "rcx/serialize.hpp"

namespace rcx {

enum class EdgeOp { F, FStar, FLambda };

inline const char* edge_op_name(EdgeOp op) {
    switch (op) {
    case EdgeOp::F: return "f";
    case EdgeOp::FStar: return "f*";
    case EdgeOp::FLambda: return "f'";
    }
    return "?";
}

inline EdgeOp edge_op_from_name(const std::string& s) {
    if (s == "f") return EdgeOp::F;
    if (s == "f*") return EdgeOp::FStar;
    if (s == "f'") return EdgeOp::FLambda;
    fail(errc::parse_error, "unknown edge operator \"" + s + "\"");
}

// Which crystal a graph enumerates: RC(∞) under f, its star picture under f*,
// the highest-weight model under f', or the connected component of
// RC(∞) ⊗ T_λ ⊗ C under the tensor f.
struct ModelSpec {
    enum class Kind { Infinity, Star, Lambda, Cutout };

    Kind kind = Kind::Infinity;
    std::optional<DominantWeight> lambda;

    static ModelSpec infinity() { return ModelSpec{Kind::Infinity, std::nullopt}; }
    static ModelSpec star() { return ModelSpec{Kind::Star, std::nullopt}; }
    static ModelSpec lambda_model(DominantWeight l) { return ModelSpec{Kind::Lambda, std::move(l)}; }
    static ModelSpec cutout(DominantWeight l) { return ModelSpec{Kind::Cutout, std::move(l)}; }

    const char* name() const {
        switch (kind) {
        case Kind::Infinity: return "infinity";
        case Kind::Star: return "star";
        case Kind::Lambda: return "lambda";
        case Kind::Cutout: return "cutout";
        }
        return "?";
    }
};

// Depth-truncated crystal graph.  Node ids are dense, id 0 is the start
// element, and ordering is deterministic: BFS layer first, canonical
// serialization within a layer.
struct CrystalGraph {
    struct Edge {
        std::size_t src;
        std::size_t dst;
        std::size_t index;
        EdgeOp op;

        friend bool operator==(const Edge&, const Edge&) = default;
    };

    DatumPtr datum;
    ModelSpec model;
    std::int64_t depth = 0;
    std::vector<CrystalNode> nodes;
    std::vector<std::string> node_keys; // canonical serialization, aligned with nodes
    std::vector<std::int64_t> layer;    // operator applications from the start
    std::vector<Edge> edges;

    std::optional<std::size_t> find(const CrystalNode& v) const {
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (nodes[i] == v) return i;
        return std::nullopt;
    }
};

namespace detail {

// Total box count of a node; each operator application adds exactly one box,
// so this is the BFS layer of a generated node.
inline std::int64_t node_box_total(const CrystalNode& v) {
    if (v.is_rc()) return v.as_rc().total_boxes();
    if (v.is_z()) return v.as_z().n;
    if (v.is_tensor()) return node_box_total(v.left()) + node_box_total(v.right());
    return 0;
}

} // namespace detail

// BFS closure of the model's start element under the model's operators,
// truncated at `depth` applications.  Deterministic: identical inputs yield
// identical graphs (and byte-identical exports).
inline CrystalGraph generate(DatumPtr datum, ModelSpec model, std::int64_t depth) {
    if (depth < 0) fail(errc::precondition_violated, "depth must be >= 0");
    if ((model.kind == ModelSpec::Kind::Lambda || model.kind == ModelSpec::Kind::Cutout) &&
        !model.lambda)
        fail(errc::precondition_violated, "model requires a dominant weight");

    const BorcherdsCartanDatum& d = *datum;
    auto succ = [&](const CrystalNode& v, std::size_t a) -> std::optional<CrystalNode> {
        switch (model.kind) {
        case ModelSpec::Kind::Infinity: return CrystalNode::rc(v.as_rc().f(a));
        case ModelSpec::Kind::Star: return CrystalNode::rc(v.as_rc().f_star(a));
        case ModelSpec::Kind::Lambda: {
            auto next = f_lambda(v.as_rc(), a, *model.lambda);
            if (!next) return std::nullopt;
            return CrystalNode::rc(std::move(*next));
        }
        case ModelSpec::Kind::Cutout: return node_f(d, v, a);
        }
        return std::nullopt;
    };
    const EdgeOp op = model.kind == ModelSpec::Kind::Star      ? EdgeOp::FStar
                      : model.kind == ModelSpec::Kind::Lambda ? EdgeOp::FLambda
                                                              : EdgeOp::F;

    CrystalNode start = model.kind == ModelSpec::Kind::Cutout
                            ? CrystalNode::tensor_chain({CrystalNode::rc(empty_rc(datum)),
                                                         CrystalNode::t_lambda(*model.lambda),
                                                         CrystalNode::c_unit()})
                            : CrystalNode::rc(empty_rc(datum));

    CrystalGraph g;
    g.datum = datum;
    g.model = std::move(model);
    g.depth = depth;
    std::map<CrystalNode, std::size_t> ids;
    ids.emplace(start, 0);
    g.node_keys.push_back(canonical_node_key(d, start));
    g.nodes.push_back(std::move(start));
    g.layer.push_back(0);

    std::vector<std::size_t> frontier{0};
    for (std::int64_t level = 0; level < depth && !frontier.empty(); ++level) {
        struct Pending {
            std::size_t src;
            std::size_t index;
            CrystalNode target;
        };
        std::vector<Pending> pending;
        for (std::size_t id : frontier)
            for (std::size_t a = 0; a < d.rank(); ++a)
                if (auto t = succ(g.nodes[id], a)) pending.push_back({id, a, std::move(*t)});

        // Assign ids to novel targets in canonical-key order.
        std::map<std::string, CrystalNode> novel;
        for (const auto& p : pending)
            if (!ids.count(p.target)) novel.emplace(canonical_node_key(d, p.target), p.target);
        std::vector<std::size_t> next;
        for (auto& [key, node] : novel) {
            const std::size_t id = g.nodes.size();
            ids.emplace(node, id);
            g.nodes.push_back(node);
            g.node_keys.push_back(key);
            g.layer.push_back(level + 1);
            next.push_back(id);
        }
        for (const auto& p : pending)
            g.edges.push_back(CrystalGraph::Edge{p.src, ids.at(p.target), p.index, op});
        frontier = std::move(next);
    }
    return g;
}

inline CrystalGraph cutout_component(DatumPtr datum, const DominantWeight& lambda,
                                     std::int64_t depth) {
    return generate(std::move(datum), ModelSpec::cutout(lambda), depth);
}

inline CrystalGraph lambda_component(DatumPtr datum, const DominantWeight& lambda,
                                     std::int64_t depth) {
    return generate(std::move(datum), ModelSpec::lambda_model(lambda), depth);
}

// --- JSON and DOT exports -----------------------------------------------------

inline json graph_to_json(const CrystalGraph& g) {
    json nodes = json::array();
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        nodes.push_back(json{{"id", i}, {"node", node_to_json(*g.datum, g.nodes[i])}});
    json edges = json::array();
    for (const auto& e : g.edges)
        edges.push_back(json{{"src", e.src},
                             {"dst", e.dst},
                             {"index", g.datum->label(e.index)},
                             {"op", edge_op_name(e.op)}});
    json out{{"datum", datum_to_json(*g.datum)},
             {"model", g.model.name()},
             {"depth", g.depth},
             {"nodes", std::move(nodes)},
             {"edges", std::move(edges)}};
    if (g.model.lambda) out["lambda"] = dominant_to_json(*g.datum, *g.model.lambda);
    return out;
}

inline std::string export_json(const CrystalGraph& g) { return graph_to_json(g).dump(2) + "\n"; }

inline CrystalGraph import_json(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object() || !j.contains("datum") || !j.contains("model") || !j.contains("depth") ||
        !j.contains("nodes") || !j.contains("edges"))
        fail(errc::parse_error, "graph requires datum, model, depth, nodes, edges");

    CrystalGraph g;
    g.datum = datum_from_json(j.at("datum"));
    const std::string model_name = j.at("model").get<std::string>();
    if (model_name == "infinity") {
        g.model = ModelSpec::infinity();
    } else if (model_name == "star") {
        g.model = ModelSpec::star();
    } else if (model_name == "lambda" || model_name == "cutout") {
        if (!j.contains("lambda")) fail(errc::parse_error, "model \"" + model_name +
                                                               "\" requires a lambda field");
        DominantWeight lambda = dominant_from_json(*g.datum, j.at("lambda"));
        g.model = model_name == "lambda" ? ModelSpec::lambda_model(std::move(lambda))
                                         : ModelSpec::cutout(std::move(lambda));
    } else {
        fail(errc::parse_error, "unknown model \"" + model_name + "\"");
    }
    g.depth = j.at("depth").get<std::int64_t>();

    const auto& nodes = j.at("nodes");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto& entry = nodes[i];
        if (!entry.contains("id") || entry.at("id").get<std::size_t>() != i)
            fail(errc::parse_error, "node ids must be dense 0..n-1 in order");
        CrystalNode node = node_from_json(g.datum, entry.at("node"));
        g.node_keys.push_back(canonical_node_key(*g.datum, node));
        g.nodes.push_back(std::move(node));
    }
    const std::int64_t base =
        g.nodes.empty() ? 0 : detail::node_box_total(g.nodes.front());
    for (const auto& node : g.nodes) g.layer.push_back(detail::node_box_total(node) - base);

    for (const auto& e : j.at("edges")) {
        CrystalGraph::Edge edge;
        edge.src = e.at("src").get<std::size_t>();
        edge.dst = e.at("dst").get<std::size_t>();
        if (edge.src >= g.nodes.size() || edge.dst >= g.nodes.size())
            fail(errc::parse_error, "edge endpoint out of range");
        edge.index = g.datum->position(e.at("index").get<std::string>());
        edge.op = edge_op_from_name(e.at("op").get<std::string>());
        // Weight bookkeeping: an edge removes exactly one α_index.
        RootWeight before = node_weight(*g.datum, g.nodes[edge.src]).qpart;
        RootWeight after = node_weight(*g.datum, g.nodes[edge.dst]).qpart;
        if (!(before.minus_simple_root(edge.index) == after))
            fail(errc::parse_error, "edge from " + std::to_string(edge.src) + " to " +
                                        std::to_string(edge.dst) +
                                        " does not shift the weight by alpha_" +
                                        g.datum->label(edge.index));
        g.edges.push_back(edge);
    }
    return g;
}

inline std::string export_dot(const CrystalGraph& g) {
    static const char* palette[] = {"blue",  "red",    "forestgreen", "darkorange",
                                    "purple", "brown", "cadetblue",   "magenta"};
    std::string out = "digraph crystal {\n  rankdir=TB;\n  node [shape=box fontname=\"monospace\"];\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        std::string label = g.nodes[i].brief(*g.datum);
        std::string escaped;
        for (char c : label) {
            if (c == '"' || c == '\\') escaped += '\\';
            escaped += c;
        }
        out += "  n" + std::to_string(i) + " [label=\"" + escaped + "\"];\n";
    }
    for (const auto& e : g.edges) {
        out += "  n" + std::to_string(e.src) + " -> n" + std::to_string(e.dst) + " [color=" +
               palette[e.index % (sizeof(palette) / sizeof(palette[0]))] + " label=\"" +
               g.datum->label(e.index) + "\" style=" +
               (e.op == EdgeOp::FStar ? "dashed" : "solid") + "];\n";
    }
    out += "}\n";
    return out;
}

// --- graph comparison -----------------------------------------------------------

struct IsoReport {
    bool ok = true;
    std::string reason;
    // mapping[i] = node of g2 matched with node i of g1
    std::vector<std::size_t> mapping;
};

// Checks whether the index-colored rooted graphs are isomorphic via the unique
// root-preserving color-respecting map (crystal graphs are out-deterministic
// per color, so the candidate map is forced).  Edge-operator kinds are
// compared only when compare_ops is set.
inline IsoReport color_isomorphic(const CrystalGraph& g1, const CrystalGraph& g2,
                                  bool compare_ops = true) {
    IsoReport report;
    auto fail_with = [&](std::string why) {
        report.ok = false;
        report.reason = std::move(why);
        return report;
    };
    if (g1.nodes.size() != g2.nodes.size())
        return fail_with("node counts differ: " + std::to_string(g1.nodes.size()) + " vs " +
                         std::to_string(g2.nodes.size()));
    if (g1.edges.size() != g2.edges.size())
        return fail_with("edge counts differ: " + std::to_string(g1.edges.size()) + " vs " +
                         std::to_string(g2.edges.size()));
    if (g1.nodes.empty()) return report;

    using Key = std::pair<std::size_t, int>; // (index, op or -1)
    auto out_edges = [&](const CrystalGraph& g) {
        std::vector<std::map<Key, std::size_t>> out(g.nodes.size());
        for (const auto& e : g.edges) {
            Key k{e.index, compare_ops ? static_cast<int>(e.op) : -1};
            out[e.src].emplace(k, e.dst);
        }
        return out;
    };
    const auto out1 = out_edges(g1);
    const auto out2 = out_edges(g2);

    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    report.mapping.assign(g1.nodes.size(), unset);
    std::vector<char> hit(g2.nodes.size(), 0);
    report.mapping[0] = 0;
    hit[0] = 1;
    std::vector<std::size_t> queue{0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const std::size_t u1 = queue[qi];
        const std::size_t u2 = report.mapping[u1];
        if (out1[u1].size() != out2[u2].size())
            return fail_with("out-degree mismatch at node " + std::to_string(u1));
        for (const auto& [key, v1] : out1[u1]) {
            auto it = out2[u2].find(key);
            if (it == out2[u2].end())
                return fail_with("missing edge with index " + g1.datum->label(key.first) +
                                 " at node " + std::to_string(u1));
            const std::size_t v2 = it->second;
            if (report.mapping[v1] == unset) {
                if (hit[v2]) return fail_with("map is not injective at node " + std::to_string(v1));
                report.mapping[v1] = v2;
                hit[v2] = 1;
                queue.push_back(v1);
            } else if (report.mapping[v1] != v2) {
                return fail_with("inconsistent image for node " + std::to_string(v1));
            }
        }
    }
    if (queue.size() != g1.nodes.size()) return fail_with("graph is not connected from the start node");
    return report;
}

// --- highest-weight model checks -------------------------------------------------

// Compares the f'-closure with the connected component of RC(∞) ⊗ T_λ ⊗ C:
// color isomorphism, matching payloads (the tensor node of the image is the
// embedded rigged configuration), and matching statistics (ε equal, φ shifted
// by ⟨h_a, λ⟩, weights equal up to the λ offset).
struct LambdaIsoReport {
    bool ok = true;
    std::size_t nodes = 0;
    std::string detail;
};

inline LambdaIsoReport check_lambda_isomorphism(DatumPtr datum, const DominantWeight& lambda,
                                                std::int64_t depth) {
    LambdaIsoReport report;
    const CrystalGraph glam = lambda_component(datum, lambda, depth);
    const CrystalGraph gcut = cutout_component(datum, lambda, depth);
    report.nodes = glam.nodes.size();

    IsoReport iso = color_isomorphic(glam, gcut, /*compare_ops=*/false);
    if (!iso.ok) {
        report.ok = false;
        report.detail = "graphs not isomorphic: " + iso.reason;
        return report;
    }
    const BorcherdsCartanDatum& d = *datum;
    for (std::size_t i = 0; i < glam.nodes.size(); ++i) {
        const RiggedConfiguration& rc = glam.nodes[i].as_rc();
        const CrystalNode& image = gcut.nodes[iso.mapping[i]];
        const CrystalNode expected = CrystalNode::tensor_chain(
            {CrystalNode::rc(rc), CrystalNode::t_lambda(lambda), CrystalNode::c_unit()});
        if (!(image == expected)) {
            report.ok = false;
            report.detail = "payload mismatch at node " + std::to_string(i);
            return report;
        }
        if (!(node_weight(d, image).qpart == rc.weight())) {
            report.ok = false;
            report.detail = "weight mismatch at node " + std::to_string(i);
            return report;
        }
        for (std::size_t a = 0; a < d.rank(); ++a) {
            if (node_epsilon(d, image, a) != ExtendedInt(rc.epsilon(a)) ||
                node_phi(d, image, a) != ExtendedInt(rc.phi(a) + lambda.pairing(a))) {
                report.ok = false;
                report.detail = "statistics mismatch at node " + std::to_string(i) + " index " +
                                d.label(a);
                return report;
            }
        }
    }
    return report;
}

// Compares the f'-generated set with the star-involution filter of the RC(∞)
// truncation (the ⋆-characterization of the highest-weight members).
struct StarMembershipReport {
    bool ok = true;
    std::size_t lambda_nodes = 0;
    std::size_t filtered_nodes = 0;
    std::vector<std::string> only_generated; // canonical keys
    std::vector<std::string> only_filtered;
};

inline StarMembershipReport check_star_characterization(DatumPtr datum,
                                                        const DominantWeight& lambda,
                                                        std::int64_t depth) {
    StarMembershipReport report;
    std::set<std::string> generated;
    for (const auto& node : lambda_component(datum, lambda, depth).nodes)
        generated.insert(canonical_node_key(*datum, node));
    std::set<std::string> filtered;
    for (const auto& node : generate(datum, ModelSpec::infinity(), depth).nodes)
        if (star_membership(node.as_rc(), lambda))
            filtered.insert(canonical_node_key(*datum, node));
    report.lambda_nodes = generated.size();
    report.filtered_nodes = filtered.size();
    for (const auto& k : generated)
        if (!filtered.count(k)) report.only_generated.push_back(k);
    for (const auto& k : filtered)
        if (!generated.count(k)) report.only_filtered.push_back(k);
    report.ok = report.only_generated.empty() && report.only_filtered.empty();
    return report;
}

} // namespace rcx
