// Exact small-instance unimodal category: enumerate multisets of rooted
// induced subtrees of the support and decide value feasibility with an
// exact rational LP. Searches are pruned by per-vertex value caps but the
// accepted sets are identical to the unpruned enumeration.
#pragma once

#include <vector>

#include "ucat/errors.hpp"
#include "ucat/graph.hpp"
#include "ucat/simplex.hpp"
#include "ucat/subdivide.hpp"
#include "ucat/tree_solver.hpp"
#include "ucat/vertex_function.hpp"

namespace ucat {

struct SupportCandidate {
    Bitset support;  // induces a tree
    int root;        // contained in support
};

struct SolverLimits {
    int max_vertices = 14;  // post-refinement instance size
    int max_k = 6;
    long lp_pivot_cap = 1000000;
    long max_bases = 20000;  // basic-solution enumeration per support multiset
    int threads = 1;
};

// Per-vertex sum equalities plus per-oriented-edge monotonicity and
// nonnegativity for a fixed multiset of rooted supports.
LinearSystem build_feasibility_system(const Graph& g, const VertexFunction& f,
                                      const std::vector<SupportCandidate>& candidates);

struct LeqResult {
    bool satisfiable = false;
    Decomposition certificate;  // verified when satisfiable
};

// Does f decompose into at most k unimodal summands with vertex supports on
// subdivide(g, f, refinement)?
LeqResult ucat_leq(const Graph& g, const VertexFunction& f, int k, int refinement = 0,
                   const SolverLimits& limits = {});

struct UcatResult {
    int value = 0;
    Decomposition certificate;  // lives on the refined instance
    unsigned p = 1;
    int refinement = 0;
    bool strong = false;  // certificate passed the strong check
    bool exact = false;   // support induces a forest; otherwise an upper
                          // bound at this refinement
    bool strong_search_incomplete = false;
    Subdivision instance;  // the refined graph/function the result refers to
};

// Minimal k with ucat_leq true for the vertexwise p-th power of f.
UcatResult exact_ucat(const Graph& g, const VertexFunction& f, unsigned p = 1, int refinement = 0,
                      const SolverLimits& limits = {});

struct StrongLeqResult {
    bool satisfiable = false;
    Decomposition certificate;
    // True when some multiset was value-feasible but no basic solution
    // passed the strong check (a non-basic decomposition could exist), or
    // when an enumeration cap was hit.
    bool search_incomplete = false;
};

StrongLeqResult ucat_strong_leq(const Graph& g, const VertexFunction& f, int k,
                                const SolverLimits& limits = {});

// Minimal k admitting a decomposition that passes is_strong_decomposition,
// searching basic feasible solutions of every support multiset.
UcatResult exact_ucat_strong(const Graph& g, const VertexFunction& f, unsigned p = 1,
                             const SolverLimits& limits = {});

struct TreeCover {
    int value = 0;
    std::vector<Bitset> trees;
};

// Minimum number of induced subtrees whose vertex sets cover V; equals the
// geometric category of g (the value of ucat-infinity of the constant one).
// Cover members may overlap. Requires g connected.
TreeCover min_tree_cover(const Graph& g, const SolverLimits& limits = {});

}  // namespace ucat
