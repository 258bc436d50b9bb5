#include "ucat/tree_solver.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "ucat/unimodal.hpp"

namespace ucat {

bool verify_decomposition(const Graph& g, const Decomposition& d) {
    for (const auto& comp : d.components) {
        if (!is_unimodal(g, comp.values).unimodal) return false;
        if (comp.values.support() != comp.support) return false;
        if (!comp.support.test(comp.root)) return false;
    }
    std::vector<VertexFunction> fs;
    fs.reserve(d.components.size());
    for (const auto& comp : d.components) fs.push_back(comp.values);
    if (d.mode == DecompositionMode::Sum)
        return pointwise_sum(g.vertex_count(), fs) == d.target;
    if (fs.empty()) return d.target.is_zero();
    return pointwise_max(fs) == d.target;
}

namespace {

// The h function rooted anywhere: full value at the root, descents parallel
// to f clipped at zero, constant across ascents. Always unimodal and <= f
// whenever the root is a weak local maximum.
Component pull_at(const Graph& g, const VertexFunction& f, int root) {
    std::vector<Rat> h(g.vertex_count(), Rat(0));
    h[root] = f[root];
    std::vector<int> queue{root};
    std::vector<char> seen(g.vertex_count(), 0);
    seen[root] = 1;
    for (std::size_t qi = 0; qi < queue.size(); qi++) {
        int u = queue[qi];
        for (int w : g.neighbors(u)) {
            if (seen[w]) continue;
            seen[w] = 1;
            if (f[w] > f[u])
                h[w] = h[u];
            else
                h[w] = max(h[u] - (f[u] - f[w]), Rat(0));
            queue.push_back(w);
        }
    }
    Component out;
    out.root = root;
    out.values = VertexFunction(std::move(h));
    out.support = out.values.support();
    return out;
}

}  // namespace

Component pull(const Graph& g, const VertexFunction& f, int root) {
    if (!is_tree(g)) throw std::invalid_argument("pull requires a tree");
    if (f.size() != g.vertex_count())
        throw std::invalid_argument("function does not match graph");
    if (root < 0 || root >= g.vertex_count()) throw std::invalid_argument("root out of range");
    for (int v = 0; v < f.size(); v++)
        if (f[v] > f[root]) throw std::invalid_argument("pull root must attain the maximum");
    if (f[root].is_zero()) throw std::invalid_argument("pull of the zero function");
    return pull_at(g, f, root);
}

namespace {

// The pull root: the smallest-index vertex of a peripheral peak plateau.
// A peak plateau is a connected set of equal values with no higher
// neighbor; it is peripheral when all other peaks lie in one component of
// its complement. Pulling anywhere else is not minimal: the middle peak of
// the (2,1,2,1,2) path strands both ends, and the center of a spider with
// higher tips is not the mode of any minimal decomposition at all. This is
// the interval sweep ("take the first peak from an end") carried to trees.
int pick_pull_root(const Graph& g, const VertexFunction& f, const Bitset& region) {
    int n = g.vertex_count();
    std::vector<int> plateau(n, -1);
    std::vector<Bitset> members;
    std::vector<char> is_peak;
    region.for_each([&](int s) {
        if (plateau[s] != -1) return;
        int id = static_cast<int>(members.size());
        Bitset p(n);
        p.set(s);
        plateau[s] = id;
        bool peak = true;
        std::vector<int> queue{s};
        for (std::size_t qi = 0; qi < queue.size(); qi++) {
            int v = queue[qi];
            for (int w : g.neighbors(v)) {
                if (!region.test(w)) continue;
                if (f[w] == f[s] && plateau[w] == -1) {
                    plateau[w] = id;
                    p.set(w);
                    queue.push_back(w);
                } else if (f[w] > f[s]) {
                    peak = false;
                }
            }
        }
        members.push_back(std::move(p));
        is_peak.push_back(peak);
    });

    int fallback = -1;
    for (std::size_t id = 0; id < members.size(); id++) {
        if (!is_peak[id]) continue;
        if (fallback == -1) fallback = members[id].first_set();
        Bitset rest = region.and_not(members[id]);
        int peak_components = 0;
        for (const auto& comp : connected_components(g, rest)) {
            bool has_peak = false;
            comp.for_each([&](int v) {
                if (is_peak[plateau[v]]) has_peak = true;
            });
            if (has_peak) peak_components++;
        }
        if (peak_components <= 1) return members[id].first_set();
    }
    assert(fallback != -1);
    return fallback;
}

}  // namespace

Decomposition greedy_decompose(const Graph& g, const VertexFunction& f) {
    if (!is_tree(g)) throw std::invalid_argument("greedy_decompose requires a tree");
    if (f.size() != g.vertex_count())
        throw std::invalid_argument("function does not match graph");

    Decomposition out;
    out.mode = DecompositionMode::Sum;
    out.target = f;

    // Depth-first over remainder support components; siblings by ascending
    // minimum vertex, children before later siblings.
    std::vector<VertexFunction> work;
    auto push_components = [&](const VertexFunction& rem) {
        auto comps = connected_components(g, rem.support());
        for (auto it = comps.rbegin(); it != comps.rend(); ++it)
            work.push_back(rem.restricted_to(*it));
    };
    push_components(f);
    while (!work.empty()) {
        VertexFunction piece = std::move(work.back());
        work.pop_back();
        int v = pick_pull_root(g, piece, piece.support());
        Component comp = pull_at(g, piece, v);
        VertexFunction rem = piece - comp.values;
        out.components.push_back(std::move(comp));
        push_components(rem);
    }
    return out;
}

int ucat_infinity_tree(const Graph& g, const VertexFunction& f) {
    if (!is_tree(g)) throw std::invalid_argument("ucat_infinity_tree requires a tree");
    if (f.size() != g.vertex_count())
        throw std::invalid_argument("function does not match graph");
    if (f.is_zero()) throw std::invalid_argument("ucat_infinity_tree of the zero function");

    // Plateaus: components of equal-valued vertices joined by edges; a
    // plateau is a local maximum when no edge leaves it upward.
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int count = 0;
    for (int s = 0; s < n; s++) {
        if (comp[s] != -1 || !f[s].is_positive()) continue;
        std::vector<int> queue{s};
        comp[s] = s;
        bool has_higher_neighbor = false;
        for (std::size_t qi = 0; qi < queue.size(); qi++) {
            int x = queue[qi];
            for (int y : g.neighbors(x)) {
                if (f[y] == f[x]) {
                    if (comp[y] == -1) {
                        comp[y] = s;
                        queue.push_back(y);
                    }
                } else if (f[y] > f[x]) {
                    has_higher_neighbor = true;
                }
            }
        }
        if (!has_higher_neighbor) count++;
    }
    return count;
}

Decomposition ucat_p_tree(const Graph& g, const VertexFunction& f, unsigned p) {
    if (p == 0) throw std::invalid_argument("p must be positive");
    return greedy_decompose(g, f.pow(p));
}

}  // namespace ucat
