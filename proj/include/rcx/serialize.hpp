#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rcx/crystal.hpp"

namespace rcx {

using nlohmann::json;

inline json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& ex) {
        fail(errc::parse_error, std::string(ex.what()) + " (byte " + std::to_string(ex.byte) + ")");
    }
}

// --- Borcherds–Cartan datum file: {"indices": [...], "cartan": [[...]]} ------

inline json datum_to_json(const BorcherdsCartanDatum& datum) {
    json cartan = json::array();
    for (std::size_t a = 0; a < datum.rank(); ++a) {
        json row = json::array();
        for (std::size_t b = 0; b < datum.rank(); ++b) row.push_back(datum.entry(a, b));
        cartan.push_back(std::move(row));
    }
    return json{{"indices", datum.labels()}, {"cartan", std::move(cartan)}};
}

inline DatumPtr datum_from_json(const json& j) {
    if (!j.is_object() || !j.contains("indices") || !j.contains("cartan"))
        fail(errc::parse_error, "datum requires \"indices\" and \"cartan\"");
    std::vector<std::string> labels;
    for (const auto& l : j.at("indices")) {
        if (!l.is_string()) fail(errc::parse_error, "index labels must be strings");
        labels.push_back(l.get<std::string>());
    }
    std::vector<std::vector<std::int64_t>> entries;
    for (const auto& row : j.at("cartan")) {
        std::vector<std::int64_t> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) fail(errc::parse_error, "cartan entries must be integers");
            r.push_back(v.get<std::int64_t>());
        }
        entries.push_back(std::move(r));
    }
    return make_datum(std::move(entries), std::move(labels));
}

// --- dominant weight file: {"pairings": {"label": value}} --------------------

inline json dominant_to_json(const BorcherdsCartanDatum& datum, const DominantWeight& lambda) {
    json pairings = json::object();
    for (std::size_t a = 0; a < datum.rank(); ++a)
        pairings[datum.label(a)] = lambda.pairing(a);
    return json{{"pairings", std::move(pairings)}};
}

inline DominantWeight dominant_from_json(const BorcherdsCartanDatum& datum, const json& j) {
    if (!j.is_object() || !j.contains("pairings"))
        fail(errc::parse_error, "dominant weight requires \"pairings\"");
    std::vector<std::int64_t> pairings(datum.rank(), 0);
    for (const auto& [label, value] : j.at("pairings").items()) {
        if (!value.is_number_integer())
            fail(errc::parse_error, "pairing for \"" + label + "\" must be an integer");
        pairings[datum.position(label)] = value.get<std::int64_t>();
    }
    return DominantWeight::from_pairings(std::move(pairings));
}

// --- rigged configuration: {"parts": {"label": [[length, rigging], ...]}} ----

inline json rc_to_json(const RiggedConfiguration& rc) {
    json parts = json::object();
    for (std::size_t a = 0; a < rc.rank(); ++a) {
        if (rc.part(a).empty()) continue;
        json rows = json::array();
        for (const auto& row : rc.part(a).rows())
            rows.push_back(json::array({row.length, row.rigging}));
        parts[rc.datum().label(a)] = std::move(rows);
    }
    return json{{"parts", std::move(parts)}};
}

inline RiggedConfiguration rc_from_json(DatumPtr datum, const json& j) {
    if (!j.is_object() || !j.contains("parts"))
        fail(errc::parse_error, "rigged configuration requires \"parts\"");
    std::vector<RiggedPartition> parts(datum->rank());
    for (const auto& [label, rows] : j.at("parts").items()) {
        const std::size_t a = datum->position(label);
        std::vector<RiggedRow> rr;
        for (const auto& row : rows) {
            if (!row.is_array() || row.size() != 2 || !row[0].is_number_integer() ||
                !row[1].is_number_integer())
                fail(errc::parse_error, "rows of part \"" + label + "\" must be [length, rigging]");
            rr.push_back(RiggedRow{row[0].get<std::int64_t>(), row[1].get<std::int64_t>()});
        }
        parts[a] = RiggedPartition::from_rows(std::move(rr));
    }
    return RiggedConfiguration::from_parts(std::move(datum), std::move(parts));
}

// --- crystal nodes ------------------------------------------------------------

inline json node_to_json(const BorcherdsCartanDatum& datum, const CrystalNode& v) {
    if (v.is_rc()) return json{{"rc", rc_to_json(v.as_rc())}};
    if (v.is_t()) return json{{"t", dominant_to_json(datum, v.as_t())}};
    if (v.is_c()) return json{{"c", true}};
    if (v.is_z())
        return json{{"z", json{{"index", datum.label(v.as_z().index)}, {"n", v.as_z().n}}}};
    return json{{"tensor", json::array({node_to_json(datum, v.left()),
                                        node_to_json(datum, v.right())})}};
}

inline CrystalNode node_from_json(const DatumPtr& datum, const json& j) {
    if (!j.is_object() || j.size() != 1) fail(errc::parse_error, "node must be a one-key object");
    if (j.contains("rc")) return CrystalNode::rc(rc_from_json(datum, j.at("rc")));
    if (j.contains("t")) return CrystalNode::t_lambda(dominant_from_json(*datum, j.at("t")));
    if (j.contains("c")) return CrystalNode::c_unit();
    if (j.contains("z")) {
        const auto& z = j.at("z");
        if (!z.contains("index") || !z.contains("n") || !z.at("n").is_number_integer())
            fail(errc::parse_error, "z node requires \"index\" and integer \"n\"");
        const std::int64_t n = z.at("n").get<std::int64_t>();
        if (n < 0) fail(errc::parse_error, "z node requires n >= 0");
        return CrystalNode::z(datum->position(z.at("index").get<std::string>()), n);
    }
    if (j.contains("tensor")) {
        const auto& t = j.at("tensor");
        if (!t.is_array() || t.size() != 2)
            fail(errc::parse_error, "tensor node must hold exactly two factors");
        return CrystalNode::tensor(node_from_json(datum, t[0]), node_from_json(datum, t[1]));
    }
    fail(errc::parse_error, "unrecognized node kind");
}

// Canonical node serialization: compact dump of the canonical JSON form
// (object keys sorted, rows in canonical order).  Underlies dedup, ids, and
// byte-exact exports.
inline std::string canonical_node_key(const BorcherdsCartanDatum& datum, const CrystalNode& v) {
    return node_to_json(datum, v).dump();
}

// --- text rendering -----------------------------------------------------------

// One block per index, one line per row: vacancy number left-justified, boxes,
// rigging right-justified, in the style of the usual rigged-configuration
// figures.
inline std::string render_rc(const RiggedConfiguration& rc) {
    std::ostringstream out;
    for (std::size_t a = 0; a < rc.rank(); ++a) {
        out << "(" << rc.datum().label(a) << ")";
        if (rc.part(a).empty()) {
            out << " empty\n";
            continue;
        }
        out << "\n";
        std::size_t vac_width = 0;
        std::size_t rig_width = 0;
        std::size_t box_width = 0;
        for (const auto& row : rc.part(a).rows()) {
            vac_width = std::max(vac_width, std::to_string(rc.vacancy(a, row.length)).size());
            rig_width = std::max(rig_width, std::to_string(row.rigging).size());
            box_width = std::max(box_width, static_cast<std::size_t>(row.length));
        }
        for (const auto& row : rc.part(a).rows()) {
            std::string vac = std::to_string(rc.vacancy(a, row.length));
            std::string rig = std::to_string(row.rigging);
            std::string boxes;
            for (std::int64_t i = 0; i < row.length; ++i) boxes += "[]";
            out << "  " << vac << std::string(vac_width - vac.size(), ' ') << " " << boxes
                << std::string(2 * (box_width - static_cast<std::size_t>(row.length)), ' ') << " "
                << std::string(rig_width - rig.size(), ' ') << rig << "\n";
        }
    }
    return out.str();
}

} // namespace rcx
