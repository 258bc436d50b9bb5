// Greedy minimal unimodal decomposition on trees: pull a maximal unimodal
// component off the current remainder at a maximum vertex, recurse on the
// support components of what is left.
#pragma once

#include <vector>

#include "ucat/graph.hpp"
#include "ucat/vertex_function.hpp"

namespace ucat {

struct Component {
    int root = -1;  // mode vertex
    VertexFunction values;
    Bitset support;
};

enum class DecompositionMode { Sum, Max };

struct Decomposition {
    DecompositionMode mode = DecompositionMode::Sum;
    VertexFunction target;
    std::vector<Component> components;
    int count() const { return static_cast<int>(components.size()); }
};

// Exact combination check plus per-component unimodality.
bool verify_decomposition(const Graph& g, const Decomposition& d);

// The pulled function h: h(root) = f(root); along each edge oriented away
// from the root, h keeps its value where f increases and otherwise drops by
// the decrease of f, clipped at zero. Requires a tree, f(root) = max f > 0.
Component pull(const Graph& g, const VertexFunction& f, int root);

// Minimal decomposition with componentwise sums equal to f. Remainder
// support components are processed in ascending order of minimum vertex;
// ties at the maximum go to the smallest index. Zero f gives 0 components.
Decomposition greedy_decompose(const Graph& g, const VertexFunction& f);

// Number of local maxima of the edge-linear extension; a connected set of
// equal-valued vertices with no higher neighbor counts once. Requires a
// tree and f not identically zero.
int ucat_infinity_tree(const Graph& g, const VertexFunction& f);

// Decomposes the vertexwise p-th power of f by greedy_decompose.
Decomposition ucat_p_tree(const Graph& g, const VertexFunction& f, unsigned p);

}  // namespace ucat
