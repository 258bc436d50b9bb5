// Barycentric edge subdivision with edge-linear value interpolation.
#pragma once

#include "ucat/graph.hpp"
#include "ucat/rational.hpp"
#include "ucat/vertex_function.hpp"

namespace ucat {

struct Subdivision {
    Graph graph;
    VertexFunction function;
    // Describes vertex original_n + i: a point on source edge (u,v) at
    // barycentric coordinate t measured from u (0 < t < 1).
    struct Origin {
        int u, v;
        Rat t;
    };
    std::vector<Origin> new_vertex_origin;
    int original_vertex_count = 0;
};

// Replaces every edge by a path with r interior vertices; values are the
// edge-linear interpolants. r = 0 returns the input unchanged.
Subdivision subdivide(const Graph& g, const VertexFunction& f, int r);

}  // namespace ucat
