// Enumeration of vertex subsets inducing trees, grown connectedly with an
// acyclicity check rather than filtered from the power set.
#pragma once

#include <vector>

#include "ucat/bitset.hpp"
#include "ucat/graph.hpp"

namespace ucat {

// All subsets of size in [1, max_size] whose induced subgraph is a tree,
// each exactly once, sorted ascending by bit pattern. Requires max_size >= 1.
std::vector<Bitset> enumerate_induced_subtrees(const Graph& g, int max_size);

// As above, restricted to subsets of `within`.
std::vector<Bitset> enumerate_induced_subtrees(const Graph& g, int max_size,
                                               const Bitset& within);

// Keeps only subtrees with no single-vertex extension that stays a tree.
std::vector<Bitset> filter_maximal_subtrees(const Graph& g, const std::vector<Bitset>& subtrees);

}  // namespace ucat
