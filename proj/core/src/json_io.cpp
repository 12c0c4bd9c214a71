#include "milnor/json_io.hpp"

#include "milnor/errors.hpp"

namespace milnor {

namespace {

Json arc_to_json(const ArcId& a) { return Json::array({a.component, a.arc}); }

}  // namespace

Json diagram_to_json(const StringLinkDiagram& d) {
    Json j;
    j["component_count"] = d.component_count();
    Json arcs = Json::array();
    Json writhe = Json::array();
    for (int i = 1; i <= d.component_count(); ++i) {
        arcs.push_back(d.arcs_per_component(i));
        writhe.push_back(d.self_writhe(i));
    }
    j["arcs_per_component"] = std::move(arcs);
    j["self_writhe"] = std::move(writhe);

    Json crossings = Json::array();
    for (const Crossing& c : d.crossings()) {
        Json cj;
        cj["over_arc"] = arc_to_json(c.over_arc);
        cj["under_in"] = arc_to_json(c.under_in);
        cj["under_out"] = arc_to_json(c.under_out);
        cj["sign"] = c.sign;
        crossings.push_back(std::move(cj));
    }
    j["crossings"] = std::move(crossings);

    Json paths = Json::array();
    for (const auto& path : d.paths()) {
        Json pj = Json::array();
        for (const auto& p : path) {
            Json e;
            e["crossing"] = p.crossing;
            e["over"] = p.over;
            pj.push_back(std::move(e));
        }
        paths.push_back(std::move(pj));
    }
    j["paths"] = std::move(paths);
    return j;
}

StringLinkDiagram diagram_from_json(const Json& j) {
    try {
        const int m = j.at("component_count").get<int>();
        const auto& crossings = j.at("crossings");
        std::vector<int> signs;
        signs.reserve(crossings.size());
        for (const auto& c : crossings) signs.push_back(c.at("sign").get<int>());

        std::vector<StringLinkDiagram::Path> paths;
        for (const auto& pj : j.at("paths")) {
            StringLinkDiagram::Path path;
            for (const auto& e : pj) {
                path.push_back({e.at("crossing").get<int>(), e.at("over").get<bool>()});
            }
            paths.push_back(std::move(path));
        }
        StringLinkDiagram d = StringLinkDiagram::from_paths(m, std::move(signs), std::move(paths));

        // The remaining fields are derived; when present they must agree.
        if (j.contains("arcs_per_component")) {
            const auto& arcs = j.at("arcs_per_component");
            for (int i = 1; i <= m; ++i) {
                if (arcs.at(static_cast<std::size_t>(i - 1)).get<int>() !=
                    d.arcs_per_component(i)) {
                    throw PreconditionError("arcs_per_component does not match the paths");
                }
            }
        }
        if (j.contains("self_writhe")) {
            const auto& writhe = j.at("self_writhe");
            for (int i = 1; i <= m; ++i) {
                if (writhe.at(static_cast<std::size_t>(i - 1)).get<int>() != d.self_writhe(i)) {
                    throw PreconditionError("self_writhe does not match the paths");
                }
            }
        }
        const std::vector<Crossing> derived = d.crossings();
        for (std::size_t c = 0; c < crossings.size(); ++c) {
            const auto& cj = crossings[c];
            const auto check_arc = [&](const char* key, const ArcId& arc) {
                const auto& a = cj.at(key);
                if (a.at(0).get<int>() != arc.component || a.at(1).get<int>() != arc.arc) {
                    throw PreconditionError(std::string(key) + " does not match the paths");
                }
            };
            check_arc("over_arc", derived[c].over_arc);
            check_arc("under_in", derived[c].under_in);
            check_arc("under_out", derived[c].under_out);
        }
        return d;
    } catch (const Json::exception& e) {
        throw PreconditionError(std::string("malformed diagram JSON: ") + e.what());
    }
}

Json table_to_json(const MilnorTable& t) {
    Json j = Json::array();
    for (const auto& [seq, value] : t.entries) {
        Json e;
        e["sequence"] = seq;
        e["value"] = value.str();
        j.push_back(std::move(e));
    }
    return j;
}

Json form_to_json(const CanonicalForm& f) {
    Json j;
    j["m"] = f.m;
    j["n"] = f.n;
    Json exps = Json::array();
    const std::vector<Injection> domain = canonical_injections(f.m);
    for (std::size_t i = 0; i < domain.size(); ++i) {
        Json e;
        e["pi"] = domain[i].values();
        e["y"] = f.exponents.at(i);
        exps.push_back(std::move(e));
    }
    j["exponents"] = std::move(exps);
    return j;
}

}  // namespace milnor
