// Simple undirected graphs with dense integer vertex indices. Immutable
// after construction; no self loops, no multi-edges.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ucat/bitset.hpp"

namespace ucat {

using Edge = std::pair<int, int>;  // stored normalized u < v

class Graph {
public:
    Graph() = default;
    // Throws std::invalid_argument on self loops, duplicate edges, or
    // endpoints out of range.
    Graph(int vertex_count, std::vector<Edge> edges,
          std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    // Index of a normalized edge in edges(), -1 if absent.
    int edge_index(int u, int v) const;

    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int v) const;

    Bitset full_vertex_set() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_original;    // new index -> original vertex
    std::vector<int> from_original;  // original vertex -> new index, -1 off subset
};

InducedSubgraph induced_subgraph(const Graph& g, const Bitset& subset);

// Connected and |E| = |V|-1. Single vertex: true. Empty graph: false.
bool is_tree(const Graph& g);
bool is_forest(const Graph& g);
bool is_connected(const Graph& g);

// Restricted to a vertex subset (edges induced). Subsets listed with
// ascending minimum vertex.
std::vector<Bitset> connected_components(const Graph& g, const Bitset& within);
std::vector<Bitset> connected_components(const Graph& g);

// True iff `subset` induces a connected acyclic subgraph; O(edges within).
bool induces_tree(const Graph& g, const Bitset& subset);

// Length of the shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

}  // namespace ucat
