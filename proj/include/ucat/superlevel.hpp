// Exact superlevel sets {f >= c} of edge-linear functions, and finite
// intersections of superlevel sets across several functions. On each edge
// the set is a single closed barycentric subinterval, so a complex is a
// vertex set plus per-edge segments.
#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "ucat/graph.hpp"
#include "ucat/rational.hpp"
#include "ucat/vertex_function.hpp"

namespace ucat {

// Closed subinterval [lo, hi] of edge `edge` (index into Graph::edges()),
// in the coordinate running from the smaller endpoint u to the larger v.
// Invariant: lo <= hi; lo == 0 iff u belongs to the complex, hi == 1 iff v
// does. Segments equal to a retained endpoint are not stored.
struct EdgeSegment {
    int edge;
    Rat lo, hi;
};

struct SuperlevelComplex {
    Rat threshold;
    Bitset vertices;
    std::vector<EdgeSegment> segments;
};

struct IntersectionComplex {
    std::vector<std::pair<int, Rat>> levels;  // (function index, threshold)
    Bitset vertices;
    std::vector<EdgeSegment> segments;
};

// Requires c > 0.
SuperlevelComplex superlevel(const Graph& g, const VertexFunction& f, const Rat& c);

// Intersection of {fs[i] >= c_i} over the given (index, threshold) pairs.
IntersectionComplex intersect_superlevels(const Graph& g, const std::vector<VertexFunction>& fs,
                                          std::vector<std::pair<int, Rat>> levels);

// A point of a complex: either a vertex or an interior edge point.
struct ComplexPoint {
    std::variant<int, std::pair<int, Rat>> where;  // vertex | (edge, coordinate)
};

struct ComplexShape {
    bool empty = true;
    int component_count = 0;
    bool acyclic = true;
    // Two points in distinct components when disconnected.
    std::optional<std::pair<ComplexPoint, ComplexPoint>> disconnection;
    // Vertices of a cycle when not acyclic.
    std::vector<int> cycle;
    bool contractible() const { return !empty && component_count == 1 && acyclic; }
};

ComplexShape analyze_complex(const Graph& g, const Bitset& vertices,
                             const std::vector<EdgeSegment>& segments);

inline ComplexShape analyze(const Graph& g, const SuperlevelComplex& c) {
    return analyze_complex(g, c.vertices, c.segments);
}
inline ComplexShape analyze(const Graph& g, const IntersectionComplex& c) {
    return analyze_complex(g, c.vertices, c.segments);
}

// Nonempty, connected and acyclic. Empty complexes are not contractible;
// callers treat "empty" as a separate acceptable case.
bool is_contractible(const Graph& g, const SuperlevelComplex& c);
bool is_contractible(const Graph& g, const IntersectionComplex& c);
bool is_empty(const SuperlevelComplex& c);
bool is_empty(const IntersectionComplex& c);

}  // namespace ucat
