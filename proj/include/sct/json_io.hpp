#pragma once

#include "sct/lattice.hpp"

#include <json.hpp>

namespace sct {

using nlohmann::json;

// {"family":"dihedral","n":6} -- the wire form of a recognized group.
inline json group_descriptor(const FiniteGroup& g) {
    detail::require(is_cyclic(g) || is_dihedral(g),
                    "group_descriptor: only cyclic and dihedral groups have descriptors");
    return json{{"family", family_name(g.family)}, {"n", g.n}};
}

inline GroupPtr group_from_descriptor(const json& j) {
    detail::require(j.is_object() && j.contains("family") && j.contains("n"),
                    "group descriptor: expected {\"family\":..., \"n\":...}");
    std::string family = j.at("family").get<std::string>();
    long n = j.at("n").get<long>();
    if (family == "cyclic") return make_cyclic(n);
    if (family == "dihedral") return make_dihedral(n);
    throw std::invalid_argument("group descriptor: unknown family '" + family + "'");
}

// "cyclic:12" / "dihedral:6" -- the CLI spelling of the same thing.
inline GroupPtr group_from_spec(const std::string& spec) {
    auto colon = spec.find(':');
    detail::require(colon != std::string::npos, "group spec: expected family:n, e.g. cyclic:12");
    std::string family = spec.substr(0, colon);
    long n = 0;
    try {
        n = std::stol(spec.substr(colon + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("group spec: bad n in '" + spec + "'");
    }
    return group_from_descriptor(json{{"family", family}, {"n", n}});
}

inline json cyclo_to_json(const Cyclo& v) {
    json coeffs = json::array();
    for (const Int& c : v.coeffs()) {
        // Table values are tiny; fall back to strings if one ever is not.
        if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
            coeffs.push_back((long long)c);
        else
            coeffs.push_back(c.str());
    }
    return json{{"conductor", v.conductor()}, {"coeffs", coeffs}};
}

// Superclass blocks as element labels, character blocks as row names.
inline json sct_to_json(const Sct& s) {
    const FiniteGroup& g = *s.group();
    json classes = json::array();
    SetPartition ep = element_partition(s);
    for (const auto& blk : ep.blocks()) {
        json b = json::array();
        for (int e : blk) b.push_back(g.labels[e]);
        classes.push_back(std::move(b));
    }
    json chars = json::array();
    for (const auto& blk : s.chars.blocks()) {
        json b = json::array();
        for (int r : blk) b.push_back(s.table->names[r]);
        chars.push_back(std::move(b));
    }
    return json{{"group", group_descriptor(g)}, {"classes", classes}, {"chars", chars}};
}

// Parse and re-validate; the character blocks in the file must match the
// derived ones exactly.
inline Sct sct_from_json(const json& j) {
    detail::require(j.is_object() && j.contains("group") && j.contains("classes"),
                    "sct json: expected {group, classes, chars}");
    GroupPtr g = group_from_descriptor(j.at("group"));
    TablePtr t = standard_table(g);

    std::map<std::string, int> element_of;
    for (int e = 0; e < g->order; ++e) element_of[g->labels[e]] = e;
    std::vector<int> ids(g->order, -1);
    int next = 0;
    for (const auto& blk : j.at("classes")) {
        int id = next++;
        for (const auto& lbl : blk) {
            auto it = element_of.find(lbl.get<std::string>());
            detail::require(it != element_of.end(),
                            "sct json: unknown element label '" + lbl.get<std::string>() + "'");
            detail::require(ids[it->second] < 0, "sct json: element listed twice");
            ids[it->second] = id;
        }
    }
    for (int v : ids) detail::require(v >= 0, "sct json: classes do not cover the group");

    // Element blocks must be unions of conjugacy classes.
    std::vector<int> class_ids(t->num_classes(), -1);
    for (int c = 0; c < t->num_classes(); ++c) {
        class_ids[c] = ids[t->class_rep[c]];
        for (int e : t->classes.block(c))
            detail::require(ids[e] == class_ids[c], "sct json: block splits a conjugacy class");
    }
    Sct s = build_sct(t, SetPartition::from_assignment(class_ids));

    if (j.contains("chars")) {
        std::map<std::string, int> row_of;
        for (int r = 0; r < t->num_rows(); ++r) row_of[t->names[r]] = r;
        std::vector<int> rids(t->num_rows(), -1);
        int rnext = 0;
        for (const auto& blk : j.at("chars")) {
            int id = rnext++;
            for (const auto& name : blk) {
                auto it = row_of.find(name.get<std::string>());
                detail::require(it != row_of.end(),
                                "sct json: unknown character name '" + name.get<std::string>() + "'");
                rids[it->second] = id;
            }
        }
        for (int v : rids) detail::require(v >= 0, "sct json: chars do not cover Irr(G)");
        detail::require(s.chars == SetPartition::from_assignment(rids),
                        "sct json: character partition does not match the class partition");
    }
    return s;
}

inline json table_to_json(const CharacterTable& t) {
    json classes = json::array();
    for (const auto& blk : t.classes.blocks()) {
        json b = json::array();
        for (int e : blk) b.push_back(t.group->labels[e]);
        classes.push_back(std::move(b));
    }
    json rows = json::array();
    for (int r = 0; r < t.num_rows(); ++r) {
        json values = json::array();
        for (int c = 0; c < t.num_classes(); ++c) values.push_back(cyclo_to_json(t.value(r, c)));
        rows.push_back(json{{"name", t.names[r]}, {"degree", t.degrees[r]}, {"values", values}});
    }
    return json{{"group", group_descriptor(*t.group)},
                {"classes", classes},
                {"characters", rows}};
}

inline json lattice_to_json(const SctLattice& lat) {
    json theories = json::array();
    for (const Sct& s : lat.theories) theories.push_back(sct_to_json(s));
    json leq = json::array();
    for (const auto& row : lat.leq) {
        json r = json::array();
        for (char v : row) r.push_back((bool)v);
        leq.push_back(std::move(r));
    }
    json covers = json::array();
    for (auto [a, b] : lat.covers) covers.push_back(json::array({a, b}));
    return json{{"group", group_descriptor(*lat.table->group)},
                {"count", lat.theories.size()},
                {"bottom", lat.bottom},
                {"top", lat.top},
                {"theories", theories},
                {"leq", leq},
                {"covers", covers}};
}

}  // namespace sct
