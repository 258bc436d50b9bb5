// Constructors for the hardness-reduction instances and a harness that
// checks each proved equivalence against the brute-force oracles.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ucat/exact_solver.hpp"
#include "ucat/graph.hpp"
#include "ucat/vertex_function.hpp"

namespace ucat {

enum class GadgetKind { ColoringApex, VertexCover };

struct GadgetInstance {
    GadgetKind kind;
    Graph source;
    int k = 0;  // coloring gadgets only
    Graph graph;
    VertexFunction function;
    // provenance
    std::vector<int> apex_vertices;           // coloring: the added clique
    std::vector<int> midpoint_of_edge;        // vertex cover: source edge index -> new vertex
    std::vector<int> isolated_source_vertices;  // vertex cover: degree-0 inputs (value 0)
};

// Adds k >= 3 mutually adjacent vertices, each adjacent to every source
// vertex; the function is constant 1.
GadgetInstance coloring_gadget(const Graph& g, int k);

// One midpoint vertex per edge; the function is deg(v) at source vertices
// and 1 at midpoints. Doubles the girth.
GadgetInstance vertex_cover_gadget(const Graph& g);

// The per-cover-vertex component functions: deg(v_i) at v_i, 1 at uncovered
// neighbors and at midpoints toward them, 1/2 at midpoints toward covered
// neighbors. Throws std::invalid_argument (naming an uncovered edge) when
// `cover` is not a vertex cover of the source.
std::vector<VertexFunction> cover_component_functions(const GadgetInstance& instance,
                                                      const Bitset& cover);

struct TwoTreesResult {
    bool possible = false;
    Bitset first, second;  // witness parts, each inducing a tree (second may
                           // be empty when the whole graph is a tree)
};

// Can V be covered by two vertex sets, each inducing a tree? `disjoint`
// additionally requires a partition. Decided by brute force; one side may
// be empty, so a tree always answers true.
TwoTreesResult two_trees_decision(const Graph& g, bool disjoint);

struct ReductionReport {
    std::string kind;
    std::string lhs_description, rhs_description;
    long lhs_value = 0, rhs_value = 0;  // bools as 0/1
    bool agree = false;
    std::optional<UcatResult> ucat_side;
    std::optional<TwoTreesResult> two_trees_side;
};

// Computes both sides of a proved equivalence independently:
//   coloring:     chi(g) <= k  <=>  ucat1(apex gadget) <= k
//   vertex-cover: min VC(g)     =   ucat1(midpoint gadget)
//   two-trees:    ucat1(const 1) <= 2  <=>  disjoint two-tree split,
//                 and tree-cover(g) <= 2  <=>  overlapping two-tree cover.
ReductionReport verify_reduction(GadgetKind kind, const Graph& g, int k,
                                 const SolverLimits& limits = {});
ReductionReport verify_two_trees(const Graph& g, const SolverLimits& limits = {});

}  // namespace ucat
