#include "ucat/subdivide.hpp"

#include <stdexcept>

namespace ucat {

Subdivision subdivide(const Graph& g, const VertexFunction& f, int r) {
    if (r < 0) throw std::invalid_argument("refinement must be >= 0");
    if (f.size() != g.vertex_count())
        throw std::invalid_argument("function does not match graph");
    Subdivision out;
    out.original_vertex_count = g.vertex_count();
    if (r == 0) {
        out.graph = g;
        out.function = f;
        return out;
    }
    int n = g.vertex_count();
    std::vector<Rat> values(f.values());
    std::vector<Edge> edges;
    std::vector<std::string> labels = g.labels();
    int next = n;
    for (auto [u, v] : g.edges()) {
        int prev = u;
        for (int i = 1; i <= r; i++) {
            Rat t(i, r + 1);
            values.push_back((Rat(1) - t) * f[u] + t * f[v]);
            out.new_vertex_origin.push_back({u, v, t});
            if (!labels.empty())
                labels.push_back(g.label(u) + "*" + g.label(v) + "#" + std::to_string(i));
            edges.push_back({prev, next});
            prev = next;
            next++;
        }
        edges.push_back({prev, v});
    }
    out.graph = Graph(next, std::move(edges), std::move(labels));
    out.function = VertexFunction(std::move(values));
    return out;
}

}  // namespace ucat
