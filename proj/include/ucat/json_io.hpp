// The shared instance interchange format:
//   {"vertices": [names], "edges": [[i,j],...], "values": ["p/q"|int,...]}
// plus optional "name" and free-form "expected" metadata. Rationals render
// canonically: plain integers without "/1", otherwise "p/q" strings.
#pragma once

#include <string>

#include <json.hpp>

#include "ucat/graph.hpp"
#include "ucat/tree_solver.hpp"
#include "ucat/unimodal.hpp"
#include "ucat/vertex_function.hpp"

namespace ucat {

using json = nlohmann::json;

struct Instance {
    Graph graph;
    VertexFunction function;
    std::string name;
    std::string expected;  // raw JSON text of the "expected" field, if any
};

// Throws std::invalid_argument with field context on malformed input.
Instance parse_instance(const json& doc);
Instance parse_instance_text(const std::string& text);
Instance load_instance_file(const std::string& path);

json instance_to_json(const Graph& g, const VertexFunction& f, const std::string& name = "");

json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j, const std::string& context);

json decomposition_to_json(const Graph& g, const Decomposition& d);
json witness_to_json(const Graph& g, const UnimodalWitness& w);
json strong_violation_to_json(const Graph& g, const StrongViolation& v);
json bitset_to_json(const Bitset& s);

}  // namespace ucat
