// Brute-force solvers for the classical problems the reductions target.
// Deliberately simple enumeration; used as the trust anchor when checking
// the reduction equivalences. Hard limit of 16 vertices.
#pragma once

#include <optional>
#include <vector>

#include "ucat/graph.hpp"

namespace ucat {

struct ColoringAnswer {
    bool colorable = false;
    std::vector<int> coloring;  // vertex -> color in [0, k), when colorable
};

// Proper k-coloring by backtracking; witness re-verifies via coloring_check.
ColoringAnswer chromatic_decision(const Graph& g, int k);

struct VertexCoverAnswer {
    int size = 0;
    Bitset cover;
};

// Minimum vertex cover by subset enumeration.
VertexCoverAnswer min_vertex_cover(const Graph& g);

// Definitional re-checks, independent of the solvers above.
bool coloring_check(const Graph& g, const std::vector<int>& coloring, int k);
// True when every edge has an endpoint in s; otherwise returns the first
// uncovered edge through `witness`.
bool cover_check(const Graph& g, const Bitset& s, Edge* witness = nullptr);

// Color classes of a proper coloring.
std::vector<Bitset> coloring_to_partition(const Graph& g, const std::vector<int>& coloring, int k);

}  // namespace ucat
