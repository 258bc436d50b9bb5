#include "ucat/oracles.hpp"

#include <stdexcept>

#include "ucat/errors.hpp"

namespace ucat {

namespace {

constexpr int kOracleVertexLimit = 16;

void check_budget(const Graph& g) {
    if (g.vertex_count() > kOracleVertexLimit)
        throw budget_error("oracle-vertices",
                           "oracle limited to " + std::to_string(kOracleVertexLimit) +
                               " vertices, got " + std::to_string(g.vertex_count()));
}

bool color_rec(const Graph& g, int k, int v, std::vector<int>& colors, int used) {
    if (v == g.vertex_count()) return true;
    // Trying at most one fresh color removes color-permutation symmetry.
    int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; c++) {
        bool ok = true;
        for (int w : g.neighbors(v))
            if (w < v && colors[w] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        colors[v] = c;
        if (color_rec(g, k, v + 1, colors, std::max(used, c + 1))) return true;
    }
    colors[v] = -1;
    return false;
}

}  // namespace

ColoringAnswer chromatic_decision(const Graph& g, int k) {
    check_budget(g);
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    ColoringAnswer out;
    if (g.vertex_count() == 0) {
        out.colorable = true;
        return out;
    }
    if (k == 0) return out;
    std::vector<int> colors(g.vertex_count(), -1);
    if (color_rec(g, k, 0, colors, 0)) {
        out.colorable = true;
        out.coloring = std::move(colors);
    }
    return out;
}

VertexCoverAnswer min_vertex_cover(const Graph& g) {
    check_budget(g);
    int n = g.vertex_count();
    VertexCoverAnswer best;
    best.size = n + 1;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); mask++) {
        int size = __builtin_popcount(mask);
        if (size >= best.size) continue;
        bool covers = true;
        for (auto [u, v] : g.edges())
            if (!((mask >> u) & 1) && !((mask >> v) & 1)) {
                covers = false;
                break;
            }
        if (!covers) continue;
        best.size = size;
        best.cover = Bitset(n);
        for (int v = 0; v < n; v++)
            if ((mask >> v) & 1) best.cover.set(v);
    }
    return best;
}

bool coloring_check(const Graph& g, const std::vector<int>& coloring, int k) {
    if (static_cast<int>(coloring.size()) != g.vertex_count()) return false;
    for (int c : coloring)
        if (c < 0 || c >= k) return false;
    for (auto [u, v] : g.edges())
        if (coloring[u] == coloring[v]) return false;
    return true;
}

bool cover_check(const Graph& g, const Bitset& s, Edge* witness) {
    for (auto [u, v] : g.edges()) {
        if (!s.test(u) && !s.test(v)) {
            if (witness) *witness = {u, v};
            return false;
        }
    }
    return true;
}

std::vector<Bitset> coloring_to_partition(const Graph& g, const std::vector<int>& coloring, int k) {
    if (!coloring_check(g, coloring, k))
        throw std::invalid_argument("not a proper coloring");
    std::vector<Bitset> classes(k, Bitset(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); v++) classes[coloring[v]].set(v);
    return classes;
}

}  // namespace ucat
