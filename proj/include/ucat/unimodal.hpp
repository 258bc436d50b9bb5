// Unimodality of edge-linear functions: support induces a tree and values
// are non-increasing away from a maximum root. Strong decompositions add
// contractible-or-empty pairwise-and-higher superlevel intersections.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ucat/graph.hpp"
#include "ucat/superlevel.hpp"
#include "ucat/vertex_function.hpp"

namespace ucat {

struct UnimodalWitness {
    enum class Kind { EmptySupport, SupportCycle, SupportDisconnected, IncreasingEdge };
    Kind kind;
    std::vector<int> cycle;            // SupportCycle
    std::pair<int, int> pair{-1, -1};  // SupportDisconnected: vertices in distinct
                                       // components; IncreasingEdge: (from, to)
                                       // oriented away from the root
    std::string describe(const Graph& g) const;
};

struct UnimodalCheck {
    bool unimodal = false;
    int root = -1;  // max-value support vertex used, when support is a tree
    std::optional<UnimodalWitness> witness;
};

// Linear in |V| + |E|.
UnimodalCheck is_unimodal(const Graph& g, const VertexFunction& f);

struct StrongViolation {
    std::vector<std::pair<int, Rat>> levels;  // (component index, threshold)
    ComplexShape shape;                       // disconnection or cycle witness
};

struct StrongCheck {
    bool strong = false;
    std::optional<StrongViolation> violation;
    int tuples_checked = 0;
};

// Checks every tuple over a finite threshold grid: per component its
// distinct vertex values and midpoints of consecutive values, plus for
// every component pair sharing an edge the thresholds where per-edge
// interval endpoints coincide. Components must individually be unimodal
// (std::invalid_argument otherwise).
StrongCheck is_strong_decomposition(const Graph& g, const std::vector<VertexFunction>& components,
                                    int threads = 1);

// The per-component threshold grid used by the strong check (exposed for
// tests): positive distinct vertex values plus positive midpoints of
// consecutive distinct values.
std::vector<Rat> strong_threshold_grid(const VertexFunction& f);

}  // namespace ucat
