#include "ucat/graph.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <set>
#include <stdexcept>

namespace ucat {

Graph::Graph(int vertex_count, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(vertex_count), labels_(std::move(labels)) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
        throw std::invalid_argument("label count does not match vertex count");
    adj_.resize(n_);
    std::set<Edge> seen;
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("self loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ")");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second)
            throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
    }
    edges_.assign(seen.begin(), seen.end());
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& a = adj_[degree(u) <= degree(v) ? u : v];
    int other = degree(u) <= degree(v) ? v : u;
    return std::find(a.begin(), a.end(), other) != a.end();
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v}) return -1;
    return static_cast<int>(it - edges_.begin());
}

std::string Graph::label(int v) const {
    if (!labels_.empty()) return labels_[v];
    return std::to_string(v);
}

Bitset Graph::full_vertex_set() const {
    Bitset s(n_);
    for (int v = 0; v < n_; v++) s.set(v);
    return s;
}

InducedSubgraph induced_subgraph(const Graph& g, const Bitset& subset) {
    InducedSubgraph out;
    out.from_original.assign(g.vertex_count(), -1);
    subset.for_each([&](int v) {
        out.from_original[v] = static_cast<int>(out.to_original.size());
        out.to_original.push_back(v);
    });
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (subset.test(u) && subset.test(v))
            edges.push_back({out.from_original[u], out.from_original[v]});
    std::vector<std::string> labels;
    if (!g.labels().empty())
        for (int v : out.to_original) labels.push_back(g.labels()[v]);
    out.graph = Graph(static_cast<int>(out.to_original.size()), std::move(edges), std::move(labels));
    return out;
}

std::vector<Bitset> connected_components(const Graph& g, const Bitset& within) {
    std::vector<Bitset> comps;
    Bitset seen(g.vertex_count());
    std::vector<int> stack;
    for (int s = 0; s < g.vertex_count(); s++) {
        if (!within.test(s) || seen.test(s)) continue;
        Bitset comp(g.vertex_count());
        stack.push_back(s);
        seen.set(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.set(v);
            for (int w : g.neighbors(v)) {
                if (within.test(w) && !seen.test(w)) {
                    seen.set(w);
                    stack.push_back(w);
                }
            }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<Bitset> connected_components(const Graph& g) {
    return connected_components(g, g.full_vertex_set());
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    return connected_components(g).size() == 1;
}

bool is_tree(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    return g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

bool is_forest(const Graph& g) {
    int comps = static_cast<int>(connected_components(g).size());
    return g.edge_count() == g.vertex_count() - comps;
}

bool induces_tree(const Graph& g, const Bitset& subset) {
    int size = subset.count();
    if (size == 0) return false;
    int inner_edges = 0;
    for (auto [u, v] : g.edges())
        if (subset.test(u) && subset.test(v)) inner_edges++;
    if (inner_edges != size - 1) return false;
    return connected_components(g, subset).size() == 1;
}

std::optional<int> girth(const Graph& g) {
    // BFS from every vertex; a non-parent edge (x,y) seen from root v bounds
    // a closed walk of length d(x)+d(y)+1 which always contains a cycle no
    // longer than itself, and every shortest cycle is realized exactly.
    int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(n), parent(n);
    for (int s = 0; s < n; s++) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : g.neighbors(x)) {
                if (dist[y] == -1) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    q.push(y);
                } else if (y != parent[x] && x != parent[y]) {
                    int len = dist[x] + dist[y] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

}  // namespace ucat
