#include "ucat/superlevel.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

namespace ucat {

namespace {

// {f >= c} on edge (u,v) as [lo, hi] in the u->v coordinate, or nullopt.
std::optional<std::pair<Rat, Rat>> edge_interval(const Rat& fu, const Rat& fv, const Rat& c) {
    bool at_u = fu >= c, at_v = fv >= c;
    if (at_u && at_v) return {{Rat(0), Rat(1)}};
    if (!at_u && !at_v) return std::nullopt;
    if (at_u) {
        // crossing at t with fu - t(fu - fv) = c
        Rat t = (fu - c) / (fu - fv);
        return {{Rat(0), t}};
    }
    Rat t = (c - fu) / (fv - fu);
    return {{t, Rat(1)}};
}

}  // namespace

SuperlevelComplex superlevel(const Graph& g, const VertexFunction& f, const Rat& c) {
    if (!c.is_positive()) throw std::invalid_argument("superlevel threshold must be > 0");
    if (f.size() != g.vertex_count())
        throw std::invalid_argument("function does not match graph");
    SuperlevelComplex out;
    out.threshold = c;
    out.vertices = Bitset(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); v++)
        if (f[v] >= c) out.vertices.set(v);
    for (int e = 0; e < g.edge_count(); e++) {
        auto [u, v] = g.edges()[e];
        auto iv = edge_interval(f[u], f[v], c);
        if (!iv) continue;
        auto [lo, hi] = *iv;
        if (lo == hi && (lo == Rat(0) || hi == Rat(1))) continue;  // just an endpoint vertex
        out.segments.push_back({e, lo, hi});
    }
    return out;
}

IntersectionComplex intersect_superlevels(const Graph& g, const std::vector<VertexFunction>& fs,
                                          std::vector<std::pair<int, Rat>> levels) {
    IntersectionComplex out;
    out.vertices = Bitset(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); v++) {
        bool in = true;
        for (const auto& [i, c] : levels)
            if (fs[i][v] < c) {
                in = false;
                break;
            }
        if (in) out.vertices.set(v);
    }
    for (int e = 0; e < g.edge_count(); e++) {
        auto [u, v] = g.edges()[e];
        Rat lo(0), hi(1);
        bool nonempty = true;
        for (const auto& [i, c] : levels) {
            auto iv = edge_interval(fs[i][u], fs[i][v], c);
            if (!iv) {
                nonempty = false;
                break;
            }
            if (iv->first > lo) lo = iv->first;
            if (iv->second < hi) hi = iv->second;
            if (lo > hi) {
                nonempty = false;
                break;
            }
        }
        if (!nonempty) continue;
        if (lo == hi && (lo == Rat(0) || hi == Rat(1))) continue;
        out.segments.push_back({e, lo, hi});
    }
    out.levels = std::move(levels);
    return out;
}

ComplexShape analyze_complex(const Graph& g, const Bitset& vertices,
                             const std::vector<EdgeSegment>& segments) {
    ComplexShape shape;
    int nv = vertices.count();
    int ns = static_cast<int>(segments.size());
    if (nv == 0 && ns == 0) return shape;
    shape.empty = false;

    // Nodes: retained vertices then segments; a segment links to an endpoint
    // vertex iff it reaches coordinate 0 resp. 1.
    int total = g.vertex_count() + ns;
    std::vector<int> uf(total);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int a) {
        while (uf[a] != a) a = uf[a] = uf[uf[a]];
        return a;
    };
    std::optional<std::pair<int, int>> cycle_edge;  // (segment idx) closing a cycle
    for (int s = 0; s < ns; s++) {
        auto [u, v] = g.edges()[segments[s].edge];
        int node = g.vertex_count() + s;
        for (int endpoint : {0, 1}) {
            bool touches = endpoint == 0 ? segments[s].lo == Rat(0) : segments[s].hi == Rat(1);
            if (!touches) continue;
            int vert = endpoint == 0 ? u : v;
            assert(vertices.test(vert));
            int a = find(node), b = find(vert);
            if (a == b) {
                shape.acyclic = false;
                if (!cycle_edge) cycle_edge = {s, vert};
            } else {
                uf[a] = b;
            }
        }
    }
    std::vector<int> roots;
    vertices.for_each([&](int v) { roots.push_back(find(v)); });
    for (int s = 0; s < ns; s++) roots.push_back(find(g.vertex_count() + s));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    shape.component_count = static_cast<int>(roots.size());

    if (shape.component_count > 1) {
        // Representative point of a node.
        auto point_of = [&](int node) -> ComplexPoint {
            if (node < g.vertex_count()) return ComplexPoint{node};
            const auto& seg = segments[node - g.vertex_count()];
            Rat mid = (seg.lo + seg.hi) / Rat(2);
            return ComplexPoint{std::make_pair(seg.edge, mid)};
        };
        int first_node = -1, second_node = -1, first_root = -1;
        auto consider = [&](int node) {
            int r = find(node);
            if (first_node == -1) {
                first_node = node;
                first_root = r;
            } else if (second_node == -1 && r != first_root) {
                second_node = node;
            }
        };
        vertices.for_each([&](int v) { consider(v); });
        for (int s = 0; s < ns && second_node == -1; s++) consider(g.vertex_count() + s);
        shape.disconnection = {point_of(first_node), point_of(second_node)};
    }

    if (!shape.acyclic && cycle_edge) {
        // Recover a cycle among full-edge segments: BFS between the closing
        // segment's endpoints through complex edges other than it.
        int closing = cycle_edge->first;
        auto [cu, cv] = g.edges()[segments[closing].edge];
        std::vector<int> parent(g.vertex_count(), -2);
        std::vector<std::vector<int>> adj(g.vertex_count());
        for (int s = 0; s < ns; s++) {
            if (s == closing) continue;
            if (segments[s].lo == Rat(0) && segments[s].hi == Rat(1)) {
                auto [u, v] = g.edges()[segments[s].edge];
                adj[u].push_back(v);
                adj[v].push_back(u);
            }
        }
        std::vector<int> queue{cu};
        parent[cu] = -1;
        for (std::size_t qi = 0; qi < queue.size(); qi++) {
            int x = queue[qi];
            for (int y : adj[x])
                if (parent[y] == -2) {
                    parent[y] = x;
                    queue.push_back(y);
                }
        }
        if (parent[cv] != -2) {
            for (int x = cv; x != -1; x = parent[x]) shape.cycle.push_back(x);
        }
    }
    return shape;
}

bool is_contractible(const Graph& g, const SuperlevelComplex& c) {
    return analyze(g, c).contractible();
}
bool is_contractible(const Graph& g, const IntersectionComplex& c) {
    return analyze(g, c).contractible();
}
bool is_empty(const SuperlevelComplex& c) {
    return !c.vertices.any() && c.segments.empty();
}
bool is_empty(const IntersectionComplex& c) {
    return !c.vertices.any() && c.segments.empty();
}

}  // namespace ucat
