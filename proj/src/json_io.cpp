#include "ucat/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace ucat {

json rat_to_json(const Rat& r) {
    if (r.is_integer() && r.num().fits_slong_p())
        return json(static_cast<long>(r.num().get_si()));
    return json(r.str());
}

Rat rat_from_json(const json& j, const std::string& context) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        try {
            return Rat::parse(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(context + ": " + e.what());
        }
    }
    throw std::invalid_argument(context + ": expected an integer or a \"p/q\" string");
}

Instance parse_instance(const json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("instance: expected a JSON object");
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        throw std::invalid_argument("vertices: expected an array of names");
    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw std::invalid_argument("edges: expected an array of [i,j] pairs");
    if (!doc.contains("values") || !doc["values"].is_array())
        throw std::invalid_argument("values: expected an array of rationals");

    std::vector<std::string> labels;
    for (std::size_t i = 0; i < doc["vertices"].size(); i++) {
        const auto& v = doc["vertices"][i];
        if (!v.is_string())
            throw std::invalid_argument("vertices[" + std::to_string(i) + "]: expected a string");
        labels.push_back(v.get<std::string>());
    }
    int n = static_cast<int>(labels.size());

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < doc["edges"].size(); i++) {
        const auto& e = doc["edges"][i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw std::invalid_argument("edges[" + std::to_string(i) +
                                        "]: expected a pair of vertex indices");
        edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }

    if (static_cast<int>(doc["values"].size()) != n)
        throw std::invalid_argument("values: expected " + std::to_string(n) + " entries, got " +
                                    std::to_string(doc["values"].size()));
    std::vector<Rat> values;
    for (std::size_t i = 0; i < doc["values"].size(); i++)
        values.push_back(rat_from_json(doc["values"][i], "values[" + std::to_string(i) + "]"));

    Instance out;
    try {
        out.graph = Graph(n, std::move(edges), std::move(labels));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("edges: ") + e.what());
    }
    for (std::size_t i = 0; i < values.size(); i++)
        if (values[i].is_negative())
            throw std::invalid_argument("values[" + std::to_string(i) + "]: negative value " +
                                        values[i].str());
    out.function = VertexFunction(std::move(values));
    if (doc.contains("name") && doc["name"].is_string()) out.name = doc["name"].get<std::string>();
    if (doc.contains("expected")) out.expected = doc["expected"].dump();
    return out;
}

Instance parse_instance_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
    }
    return parse_instance(doc);
}

Instance load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_instance_text(text);
}

json instance_to_json(const Graph& g, const VertexFunction& f, const std::string& name) {
    json doc;
    if (!name.empty()) doc["name"] = name;
    json vertices = json::array();
    for (int v = 0; v < g.vertex_count(); v++) vertices.push_back(g.label(v));
    doc["vertices"] = std::move(vertices);
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    doc["edges"] = std::move(edges);
    json values = json::array();
    for (int v = 0; v < f.size(); v++) values.push_back(rat_to_json(f[v]));
    doc["values"] = std::move(values);
    return doc;
}

json bitset_to_json(const Bitset& s) {
    json arr = json::array();
    s.for_each([&](int v) { arr.push_back(v); });
    return arr;
}

json decomposition_to_json(const Graph& g, const Decomposition& d) {
    json doc;
    doc["mode"] = d.mode == DecompositionMode::Sum ? "sum" : "max";
    doc["count"] = d.count();
    json comps = json::array();
    for (const auto& c : d.components) {
        json comp;
        comp["root"] = c.root;
        comp["root_label"] = g.label(c.root);
        comp["support"] = bitset_to_json(c.support);
        json values = json::array();
        for (int v = 0; v < c.values.size(); v++) values.push_back(rat_to_json(c.values[v]));
        comp["values"] = std::move(values);
        comps.push_back(std::move(comp));
    }
    doc["components"] = std::move(comps);
    return doc;
}

json witness_to_json(const Graph& g, const UnimodalWitness& w) {
    json doc;
    doc["description"] = w.describe(g);
    switch (w.kind) {
        case UnimodalWitness::Kind::EmptySupport:
            doc["kind"] = "empty-support";
            break;
        case UnimodalWitness::Kind::SupportCycle:
            doc["kind"] = "cycle";
            doc["cycle"] = w.cycle;
            break;
        case UnimodalWitness::Kind::SupportDisconnected:
            doc["kind"] = "disconnected";
            doc["pair"] = json::array({w.pair.first, w.pair.second});
            break;
        case UnimodalWitness::Kind::IncreasingEdge:
            doc["kind"] = "increasing-edge";
            doc["edge"] = json::array({w.pair.first, w.pair.second});
            break;
    }
    return doc;
}

json strong_violation_to_json(const Graph& g, const StrongViolation& v) {
    json doc;
    json levels = json::array();
    for (const auto& [idx, c] : v.levels)
        levels.push_back(json{{"component", idx}, {"threshold", rat_to_json(c)}});
    doc["levels"] = std::move(levels);
    doc["reason"] = v.shape.acyclic ? "disconnected" : "cycle";
    if (!v.shape.cycle.empty()) doc["cycle"] = v.shape.cycle;
    if (v.shape.disconnection) {
        auto point_json = [&](const ComplexPoint& p) -> json {
            if (std::holds_alternative<int>(p.where))
                return json{{"vertex", std::get<int>(p.where)}};
            auto [edge, t] = std::get<std::pair<int, Rat>>(p.where);
            auto [u, vtx] = g.edges()[edge];
            return json{{"edge", json::array({u, vtx})}, {"coordinate", rat_to_json(t)}};
        };
        doc["disconnected_points"] = json::array(
            {point_json(v.shape.disconnection->first), point_json(v.shape.disconnection->second)});
    }
    doc["component_count"] = v.shape.component_count;
    return doc;
}

}  // namespace ucat
