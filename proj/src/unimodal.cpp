#include "ucat/unimodal.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <functional>
#include <stdexcept>
#include <thread>

namespace ucat {

namespace {

// BFS spanning forest over `within`; returns parent array (-1 root, -2
// unreached) starting from `start`.
std::vector<int> bfs_parents(const Graph& g, const Bitset& within, int start) {
    std::vector<int> parent(g.vertex_count(), -2);
    std::vector<int> queue{start};
    parent[start] = -1;
    for (std::size_t qi = 0; qi < queue.size(); qi++) {
        int x = queue[qi];
        for (int y : g.neighbors(x))
            if (within.test(y) && parent[y] == -2) {
                parent[y] = x;
                queue.push_back(y);
            }
    }
    return parent;
}

std::vector<int> recover_cycle(const std::vector<int>& parent, int u, int v) {
    std::vector<int> up_u;
    for (int x = u; x != -1; x = parent[x]) up_u.push_back(x);
    std::vector<int> pos(parent.size(), -1);
    for (std::size_t i = 0; i < up_u.size(); i++) pos[up_u[i]] = static_cast<int>(i);
    std::vector<int> cycle;
    int x = v;
    while (pos[x] == -1) {
        cycle.push_back(x);
        x = parent[x];
    }
    for (int i = pos[x]; i >= 0; i--) cycle.push_back(up_u[i]);
    return cycle;
}

}  // namespace

std::string UnimodalWitness::describe(const Graph& g) const {
    switch (kind) {
        case Kind::EmptySupport:
            return "empty support";
        case Kind::SupportCycle: {
            std::string s = "cycle in support:";
            for (int v : cycle) s += " " + g.label(v);
            return s;
        }
        case Kind::SupportDisconnected:
            return "support disconnected: " + g.label(pair.first) + " and " +
                   g.label(pair.second) + " lie in different components";
        case Kind::IncreasingEdge:
            return "value increases along edge " + g.label(pair.first) + " -> " +
                   g.label(pair.second) + " away from the root";
    }
    return "";
}

UnimodalCheck is_unimodal(const Graph& g, const VertexFunction& f) {
    if (f.size() != g.vertex_count())
        throw std::invalid_argument("function does not match graph");
    for (int v = 0; v < f.size(); v++)
        if (f[v].is_negative()) throw std::invalid_argument("negative value in function");

    UnimodalCheck out;
    Bitset supp = f.support();
    int supp_size = supp.count();
    if (supp_size == 0) {
        out.witness = UnimodalWitness{UnimodalWitness::Kind::EmptySupport, {}, {-1, -1}};
        return out;
    }

    int start = supp.first_set();
    auto parent = bfs_parents(g, supp, start);
    for (int v = 0; v < g.vertex_count(); v++) {
        if (supp.test(v) && parent[v] == -2) {
            out.witness = UnimodalWitness{UnimodalWitness::Kind::SupportDisconnected, {}, {start, v}};
            return out;
        }
    }
    int inner_edges = 0;
    for (auto [u, v] : g.edges())
        if (supp.test(u) && supp.test(v)) inner_edges++;
    if (inner_edges != supp_size - 1) {
        for (auto [u, v] : g.edges()) {
            if (!supp.test(u) || !supp.test(v)) continue;
            if (parent[u] == v || parent[v] == u) continue;
            out.witness = UnimodalWitness{UnimodalWitness::Kind::SupportCycle,
                                          recover_cycle(parent, u, v),
                                          {-1, -1}};
            return out;
        }
        assert(false && "edge surplus without a non-tree edge");
    }

    int root = -1;
    for (int v = 0; v < g.vertex_count(); v++)
        if (supp.test(v) && (root == -1 || f[v] > f[root])) root = v;
    out.root = root;
    auto rooted = bfs_parents(g, supp, root);
    for (int v = 0; v < g.vertex_count(); v++) {
        if (!supp.test(v) || rooted[v] < 0) continue;
        if (f[v] > f[rooted[v]]) {
            out.witness =
                UnimodalWitness{UnimodalWitness::Kind::IncreasingEdge, {}, {rooted[v], v}};
            return out;
        }
    }
    out.unimodal = true;
    return out;
}

std::vector<Rat> strong_threshold_grid(const VertexFunction& f) {
    std::vector<Rat> vals(f.values());
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    std::vector<Rat> grid;
    for (std::size_t i = 0; i < vals.size(); i++) {
        if (vals[i].is_positive()) grid.push_back(vals[i]);
        if (i + 1 < vals.size()) {
            Rat mid = (vals[i] + vals[i + 1]) / Rat(2);
            if (mid.is_positive()) grid.push_back(mid);
        }
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

namespace {

// Evaluates f at barycentric coordinate t on edge (u,v).
Rat value_at(const VertexFunction& f, int u, int v, const Rat& t) {
    return (Rat(1) - t) * f[u] + t * f[v];
}

struct TupleSpace {
    std::vector<int> members;             // component indices
    std::vector<std::vector<Rat>> grids;  // per member
    long total() const {
        long t = 1;
        for (const auto& gr : grids) t *= static_cast<long>(gr.size());
        return t;
    }
};

std::vector<std::pair<int, Rat>> decode(const TupleSpace& space, long rank) {
    std::vector<std::pair<int, Rat>> out(space.members.size(), {0, Rat(0)});
    for (std::size_t i = space.members.size(); i-- > 0;) {
        long sz = static_cast<long>(space.grids[i].size());
        out[i] = {space.members[i], space.grids[i][rank % sz]};
        rank /= sz;
    }
    return out;
}

}  // namespace

StrongCheck is_strong_decomposition(const Graph& g, const std::vector<VertexFunction>& components,
                                    int threads) {
    int k = static_cast<int>(components.size());
    for (int i = 0; i < k; i++) {
        auto check = is_unimodal(g, components[i]);
        if (!check.unimodal)
            throw std::invalid_argument("component " + std::to_string(i) + " is not unimodal (" +
                                        check.witness->describe(g) + ")");
    }
    StrongCheck out;
    if (k <= 1) {
        out.strong = true;
        return out;
    }

    std::vector<std::vector<Rat>> base(k);
    for (int i = 0; i < k; i++) base[i] = strong_threshold_grid(components[i]);

    // Extra pair tuples: thresholds where one component's superlevel boundary
    // crosses an interior point of an edge; the partner threshold is the
    // other component's value at that point.
    struct PairTuple {
        int i, j;
        Rat ci, cj;
    };
    std::vector<PairTuple> pair_tuples;
    for (int i = 0; i < k; i++) {
        for (int j = 0; j < k; j++) {
            if (i == j) continue;
            for (auto [u, v] : g.edges()) {
                if (components[i][u] == components[i][v]) continue;
                for (const Rat& ci : base[i]) {
                    // boundary of {f_i >= ci} on this edge
                    Rat denom = components[i][v] - components[i][u];
                    Rat t = (ci - components[i][u]) / denom;
                    if (!(t > Rat(0) && t < Rat(1))) continue;
                    Rat cj = value_at(components[j], u, v, t);
                    if (cj.is_positive()) pair_tuples.push_back({i, j, ci, cj});
                }
            }
        }
    }

    // Subsets of size >= 2 in ascending size then lexicographic member order.
    std::vector<std::vector<int>> subsets;
    for (int size = 2; size <= k; size++) {
        std::vector<int> pick(size);
        std::function<void(int, int)> rec = [&](int from, int depth) {
            if (depth == size) {
                subsets.push_back(pick);
                return;
            }
            for (int x = from; x < k; x++) {
                pick[depth] = x;
                rec(x + 1, depth + 1);
            }
        };
        rec(0, 0);
    }

    auto examine = [&](const std::vector<std::pair<int, Rat>>& levels)
        -> std::optional<StrongViolation> {
        auto inter = intersect_superlevels(g, components, levels);
        auto shape = analyze_complex(g, inter.vertices, inter.segments);
        if (shape.empty || shape.contractible()) return std::nullopt;
        return StrongViolation{levels, shape};
    };

    long checked = 0;
    for (const auto& subset : subsets) {
        TupleSpace space;
        space.members = subset;
        for (int m : subset) space.grids.push_back(base[m]);
        long total = space.total();
        if (total == 0) continue;

        std::optional<StrongViolation> found;
        if (threads <= 1 || total < 256) {
            for (long r = 0; r < total; r++) {
                auto hit = examine(decode(space, r));
                checked++;
                if (hit) {
                    found = std::move(hit);
                    break;
                }
            }
        } else {
            int nw = std::min<long>(threads, total);
            std::vector<long> first_hit(nw, -1);
            std::vector<std::optional<StrongViolation>> hits(nw);
            std::atomic<long> global_first{total};
            std::vector<std::thread> pool;
            long chunk = (total + nw - 1) / nw;
            for (int w = 0; w < nw; w++) {
                pool.emplace_back([&, w] {
                    long lo = w * chunk, hi = std::min(total, lo + chunk);
                    for (long r = lo; r < hi && r < global_first.load(); r++) {
                        auto hit = examine(decode(space, r));
                        if (hit) {
                            first_hit[w] = r;
                            hits[w] = std::move(hit);
                            long cur = global_first.load();
                            while (r < cur && !global_first.compare_exchange_weak(cur, r)) {
                            }
                            break;
                        }
                    }
                });
            }
            for (auto& t : pool) t.join();
            long best = global_first.load();
            checked += std::min(total, best + 1);
            if (best < total)
                for (int w = 0; w < nw; w++)
                    if (first_hit[w] == best) found = std::move(hits[w]);
        }
        if (found) {
            out.violation = std::move(found);
            out.tuples_checked = static_cast<int>(checked);
            return out;
        }
    }

    for (const auto& pt : pair_tuples) {
        auto hit = examine({{pt.i, pt.ci}, {pt.j, pt.cj}});
        checked++;
        if (hit) {
            out.violation = std::move(hit);
            out.tuples_checked = static_cast<int>(checked);
            return out;
        }
    }

    out.strong = true;
    out.tuples_checked = static_cast<int>(checked);
    return out;
}

}  // namespace ucat
