#include "ucat/exact_solver.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <stdexcept>

#include "ucat/subtrees.hpp"
#include "ucat/unimodal.hpp"

namespace ucat {

namespace {

struct RootedCandidate {
    Bitset support;
    int root;
    std::vector<Rat> cap;  // cap[v] = min f along the support path root -> v
    int ends = 0;          // descent ends: boundary edges plus bare leaves
};

std::vector<Rat> candidate_caps(const Graph& g, const VertexFunction& f, const Bitset& support,
                                int root) {
    std::vector<Rat> cap(g.vertex_count(), Rat(0));
    cap[root] = f[root];
    std::vector<int> queue{root};
    Bitset seen(g.vertex_count());
    seen.set(root);
    for (std::size_t qi = 0; qi < queue.size(); qi++) {
        int u = queue[qi];
        for (int w : g.neighbors(u)) {
            if (!support.test(w) || seen.test(w)) continue;
            seen.set(w);
            cap[w] = min(cap[u], f[w]);
            queue.push_back(w);
        }
    }
    return cap;
}

// A function that is monotone away from the root descends to zero along at
// most this many directions: one per boundary edge leaving the support,
// one per support leaf with no boundary edge. Its total variation is at
// most ends * value(root).
int descent_ends(const Graph& g, const Bitset& support, int root) {
    int ends = 0;
    support.for_each([&](int v) {
        int inner = 0, boundary = 0;
        for (int w : g.neighbors(v)) {
            if (support.test(w))
                inner++;
            else
                boundary++;
        }
        ends += boundary;
        if (boundary == 0 && inner <= 1 && v != root) ends++;
    });
    return ends;
}

// Best achievable cap from root r to each support vertex over any path in
// the support subgraph (maximin of f along paths). Upper-bounds every
// candidate cap with that root.
std::vector<Rat> bottleneck_from(const Graph& g, const VertexFunction& f, const Bitset& supp,
                                 int r) {
    std::vector<Rat> best(g.vertex_count(), Rat(0));
    Bitset done(g.vertex_count());
    best[r] = f[r];
    for (;;) {
        int pick = -1;
        supp.for_each([&](int v) {
            if (done.test(v) || !best[v].is_positive()) return;
            if (pick == -1 || best[v] > best[pick]) pick = v;
        });
        if (pick == -1) break;
        done.set(pick);
        for (int w : g.neighbors(pick)) {
            if (!supp.test(w) || done.test(w)) continue;
            Rat through = min(best[pick], f[w]);
            if (through > best[w]) best[w] = through;
        }
    }
    return best;
}

// Zero components are dropped; monotonicity makes the root a maximum of
// every surviving component.
Decomposition extract_decomposition(const Graph& g, const VertexFunction& f,
                                    const std::vector<SupportCandidate>& multiset,
                                    const std::vector<Rat>& point,
                                    const std::vector<int>& var_base) {
    Decomposition d;
    d.mode = DecompositionMode::Sum;
    d.target = f;
    for (std::size_t i = 0; i < multiset.size(); i++) {
        std::vector<Rat> values(g.vertex_count(), Rat(0));
        int off = 0;
        multiset[i].support.for_each([&](int v) { values[v] = point[var_base[i] + off++]; });
        VertexFunction fn(std::move(values));
        if (fn.is_zero()) continue;
        Component comp;
        comp.root = multiset[i].root;
        comp.support = fn.support();
        assert(comp.support.test(comp.root));
        comp.values = std::move(fn);
        d.components.push_back(std::move(comp));
    }
    return d;
}

bool induces_forest(const Graph& g, const Bitset& subset) {
    int inner = 0;
    for (auto [u, v] : g.edges())
        if (subset.test(u) && subset.test(v)) inner++;
    return inner == subset.count() - static_cast<int>(connected_components(g, subset).size());
}

}  // namespace

LinearSystem build_feasibility_system(const Graph& g, const VertexFunction& f,
                                      const std::vector<SupportCandidate>& candidates) {
    LinearSystem sys;
    std::vector<int> var_base(candidates.size(), 0);
    int nv = 0;
    for (std::size_t i = 0; i < candidates.size(); i++) {
        var_base[i] = nv;
        nv += candidates[i].support.count();
    }
    sys.num_vars = nv;

    // var index of (candidate i, vertex v): vertices numbered ascending
    // within each support
    std::vector<std::vector<int>> var_of(candidates.size(),
                                         std::vector<int>(g.vertex_count(), -1));
    for (std::size_t i = 0; i < candidates.size(); i++) {
        int off = var_base[i];
        candidates[i].support.for_each([&](int v) { var_of[i][v] = off++; });
    }

    for (int v = 0; v < g.vertex_count(); v++) {
        std::vector<Rat> coef(nv, Rat(0));
        bool touched = false;
        for (std::size_t i = 0; i < candidates.size(); i++)
            if (candidates[i].support.test(v)) {
                coef[var_of[i][v]] = Rat(1);
                touched = true;
            }
        if (!touched && f[v].is_zero()) continue;
        sys.add_eq(std::move(coef), f[v]);
    }
    for (std::size_t i = 0; i < candidates.size(); i++) {
        // orient the support tree away from the root
        std::vector<int> queue{candidates[i].root};
        Bitset seen(g.vertex_count());
        seen.set(candidates[i].root);
        for (std::size_t qi = 0; qi < queue.size(); qi++) {
            int u = queue[qi];
            for (int w : g.neighbors(u)) {
                if (!candidates[i].support.test(w) || seen.test(w)) continue;
                seen.set(w);
                queue.push_back(w);
                std::vector<Rat> coef(nv, Rat(0));
                coef[var_of[i][w]] = Rat(1);
                coef[var_of[i][u]] = Rat(-1);
                sys.add_le(std::move(coef), Rat(0));
            }
        }
    }
    return sys;
}

namespace {

// Shared multiset search. At every complete multiset calls `leaf`; returns
// true when `leaf` reports success. Only inclusion-maximal supports are
// tried: any summand extends by zeros to a maximal support with the same
// root, so nothing is lost.
class MultisetSearch {
public:
    MultisetSearch(const Graph& g, const VertexFunction& f, const SolverLimits& limits)
        : g_(g), f_(f), limits_(limits), supp_(f.support()) {
        if (g.vertex_count() > limits.max_vertices)
            throw budget_error("budget-vertices",
                               "instance has " + std::to_string(g.vertex_count()) +
                                   " vertices, over the limit of " +
                                   std::to_string(limits.max_vertices));
        supp_.for_each([&](int v) { roots_.push_back(v); });
        std::stable_sort(roots_.begin(), roots_.end(), [&](int a, int b) {
            if (f[a] != f[b]) return f[b] < f[a];
            return a < b;
        });
        auto trees = enumerate_induced_subtrees(g, std::max(1, supp_.count()), supp_);
        std::vector<Bitset> maximal;
        for (const auto& s : trees) {
            bool extendable = false;
            supp_.for_each([&](int v) {
                if (extendable || s.test(v)) return;
                int into = 0;
                for (int w : g.neighbors(v))
                    if (s.test(w)) into++;
                if (into == 1) extendable = true;
            });
            if (!extendable) maximal.push_back(s);
        }
        per_root_.resize(roots_.size());
        bottleneck_.resize(roots_.size());
        max_ends_.assign(roots_.size(), 0);
        for (std::size_t ri = 0; ri < roots_.size(); ri++) {
            int r = roots_[ri];
            for (const auto& s : maximal)
                if (s.test(r)) {
                    per_root_[ri].push_back(
                        {s, r, candidate_caps(g, f, s, r), descent_ends(g, s, r)});
                    max_ends_[ri] = std::max(max_ends_[ri], per_root_[ri].back().ends);
                }
            // larger supports first: they dominate smaller ones for
            // feasibility, so hits come early
            std::stable_sort(per_root_[ri].begin(), per_root_[ri].end(),
                             [](const RootedCandidate& a, const RootedCandidate& b) {
                                 int ca = a.support.count(), cb = b.support.count();
                                 if (ca != cb) return ca > cb;
                                 return a.support < b.support;
                             });
            bottleneck_[ri] = bottleneck_from(g, f, supp_, r);
        }
        for (auto [u, v] : g.edges()) total_variation_ += (f[u] - f[v]).abs();
        detect_cycle_order();
    }

    bool supp_empty() const { return !supp_.any(); }

    // leaf(multiset) -> true to stop with success. Root sequences with all
    // roots distinct come first; sequences with repeated roots are a rarely
    // needed fallback and tend to be pruned.
    bool search(int k, const std::function<bool(const std::vector<const RootedCandidate*>&)>& leaf) {
        if (supp_empty()) return leaf({});
        root_seq_.assign(k, 0);
        chosen_.assign(k, nullptr);
        chosen_index_.assign(k, 0);
        if (k <= static_cast<int>(roots_.size()) && choose_roots(0, 0, k, true, leaf)) return true;
        return choose_roots(0, 0, k, false, leaf);
    }

private:
    bool choose_roots(int level, int from, int k, bool distinct,
                      const std::function<bool(const std::vector<const RootedCandidate*>&)>& leaf) {
        if (level == k) {
            if (!distinct) {
                bool has_repeat = false;
                for (int i = 1; i < k; i++)
                    if (root_seq_[i] == root_seq_[i - 1]) has_repeat = true;
                if (!has_repeat) return false;  // covered by the distinct pass
            }
            if (!roots_feasible(k)) return false;
            return choose_supports(0, k, leaf);
        }
        for (int ri = from; ri < static_cast<int>(roots_.size()); ri++) {
            root_seq_[level] = ri;
            if (choose_roots(level + 1, distinct ? ri + 1 : ri, k, distinct, leaf)) return true;
        }
        return false;
    }

    // sum of bottleneck caps must reach f everywhere, the combined total
    // variation capacity must reach the target's, and on cycle supports the
    // rootless arcs must admit a monotone split
    bool roots_feasible(int k) const {
        for (int v = 0; v < g_.vertex_count(); v++) {
            if (!supp_.test(v)) continue;
            Rat total(0);
            for (int i = 0; i < k; i++) total += bottleneck_[root_seq_[i]][v];
            if (total < f_[v]) return false;
        }
        Rat tv_capacity(0);
        for (int i = 0; i < k; i++) {
            int ri = root_seq_[i];
            tv_capacity += f_[roots_[ri]] * Rat(max_ends_[ri]);
        }
        if (tv_capacity < total_variation_) return false;
        if (!cycle_order_.empty() && !rootless_arcs_feasible(k)) return false;
        return true;
    }

    // On a cycle, components covering the open arc between two cyclically
    // consecutive roots enter from the two ends and their sums form one
    // decreasing plus one increasing function. The arc values must split
    // accordingly, which bounds the directed variation inside the arc by
    // what can enter across each end.
    bool rootless_arcs_feasible(int k) const {
        int n = static_cast<int>(cycle_order_.size());
        std::vector<char> is_root(g_.vertex_count(), 0);
        for (int i = 0; i < k; i++) is_root[roots_[root_seq_[i]]] = 1;
        std::vector<int> root_positions;
        for (int p = 0; p < n; p++)
            if (is_root[cycle_order_[p]]) root_positions.push_back(p);
        if (root_positions.empty()) return false;
        for (std::size_t a = 0; a < root_positions.size(); a++) {
            int pa = root_positions[a];
            int pb = root_positions[(a + 1) % root_positions.size()];
            int len = (pb - pa + n) % n;
            if (len == 0) len = n;  // single distinct root
            if (len <= 1) continue;
            Rat down(0), up(0);
            for (int step = 1; step + 1 < len; step++) {
                const Rat& cur = f_[cycle_order_[(pa + step) % n]];
                const Rat& nxt = f_[cycle_order_[(pa + step + 1) % n]];
                if (cur > nxt)
                    down += cur - nxt;
                else
                    up += nxt - cur;
            }
            const Rat& first = f_[cycle_order_[(pa + 1) % n]];
            const Rat& last = f_[cycle_order_[(pb - 1 + n) % n]];
            if (down > min(first, f_[cycle_order_[pa]])) return false;
            if (up > min(last, f_[cycle_order_[pb]])) return false;
        }
        return true;
    }

    void detect_cycle_order() {
        int size = supp_.count();
        if (size < 3) return;
        int inner_edges = 0;
        bool all_degree_two = true;
        supp_.for_each([&](int v) {
            int deg = 0;
            for (int w : g_.neighbors(v))
                if (supp_.test(w)) deg++;
            if (deg != 2) all_degree_two = false;
        });
        for (auto [u, v] : g_.edges())
            if (supp_.test(u) && supp_.test(v)) inner_edges++;
        if (!all_degree_two || inner_edges != size) return;
        if (connected_components(g_, supp_).size() != 1) return;
        int start = supp_.first_set();
        int prev = -1, cur = start;
        for (int i = 0; i < size; i++) {
            cycle_order_.push_back(cur);
            for (int w : g_.neighbors(cur)) {
                if (!supp_.test(w) || w == prev) continue;
                prev = cur;
                cur = w;
                break;
            }
        }
    }

    bool choose_supports(int level, int k,
                         const std::function<bool(const std::vector<const RootedCandidate*>&)>& leaf) {
        if (level == k) {
            std::vector<const RootedCandidate*> multiset(chosen_.begin(), chosen_.end());
            return leaf(multiset);
        }
        int ri = root_seq_[level];
        const auto& cands = per_root_[ri];
        // repeated roots take non-decreasing candidate indices (multiset)
        std::size_t start = 0;
        if (level > 0 && root_seq_[level - 1] == ri) start = chosen_index_[level - 1];
        for (std::size_t ci = start; ci < cands.size(); ci++) {
            chosen_[level] = &cands[ci];
            chosen_index_[level] = ci;
            if (!caps_feasible(level + 1, k)) continue;
            if (choose_supports(level + 1, k, leaf)) return true;
        }
        return false;
    }

    // partial caps + future bottleneck bounds must reach f everywhere, and
    // the variation capacity must survive the choices made so far
    bool caps_feasible(int chosen_count, int k) const {
        for (int v = 0; v < g_.vertex_count(); v++) {
            if (!supp_.test(v)) continue;
            Rat total(0);
            for (int i = 0; i < chosen_count; i++) total += chosen_[i]->cap[v];
            for (int i = chosen_count; i < k; i++) total += bottleneck_[root_seq_[i]][v];
            if (total < f_[v]) return false;
        }
        Rat tv_capacity(0);
        for (int i = 0; i < chosen_count; i++)
            tv_capacity += f_[chosen_[i]->root] * Rat(chosen_[i]->ends);
        for (int i = chosen_count; i < k; i++)
            tv_capacity += f_[roots_[root_seq_[i]]] * Rat(max_ends_[root_seq_[i]]);
        return tv_capacity >= total_variation_;
    }

    const Graph& g_;
    const VertexFunction& f_;
    const SolverLimits& limits_;
    Bitset supp_;
    std::vector<int> roots_;
    std::vector<std::vector<RootedCandidate>> per_root_;
    std::vector<std::vector<Rat>> bottleneck_;
    std::vector<int> max_ends_;
    Rat total_variation_;
    std::vector<int> cycle_order_;  // nonempty iff the support induces a cycle
    std::vector<int> root_seq_;
    std::vector<const RootedCandidate*> chosen_;
    std::vector<std::size_t> chosen_index_;
};

LeqResult leq_on_instance(const Graph& g, const VertexFunction& f, int k,
                          const SolverLimits& limits) {
    if (g.vertex_count() > limits.max_vertices)
        throw budget_error("budget-vertices",
                           "instance has " + std::to_string(g.vertex_count()) +
                               " vertices, over the limit of " + std::to_string(limits.max_vertices));
    LeqResult out;
    Bitset supp = f.support();
    if (!supp.any()) {
        out.satisfiable = k >= 0;
        out.certificate.mode = DecompositionMode::Sum;
        out.certificate.target = f;
        return out;
    }
    if (k <= 0) return out;

    // k = 1 forces the single component to equal f.
    if (k == 1) {
        auto check = is_unimodal(g, f);
        if (!check.unimodal) return out;
        out.satisfiable = true;
        out.certificate.mode = DecompositionMode::Sum;
        out.certificate.target = f;
        out.certificate.components.push_back({check.root, f, supp});
        assert(verify_decomposition(g, out.certificate));
        return out;
    }

    MultisetSearch search(g, f, limits);
    bool found = search.search(k, [&](const std::vector<const RootedCandidate*>& multiset) {
        std::vector<SupportCandidate> cands;
        cands.reserve(multiset.size());
        for (const auto* c : multiset) cands.push_back({c->support, c->root});
        auto sys = build_feasibility_system(g, f, cands);
        auto lp = lp_feasible(sys, limits.lp_pivot_cap);
        if (!lp.feasible) return false;
        std::vector<int> var_base(cands.size(), 0);
        int nv = 0;
        for (std::size_t i = 0; i < cands.size(); i++) {
            var_base[i] = nv;
            nv += cands[i].support.count();
        }
        out.certificate = extract_decomposition(g, f, cands, lp.point, var_base);
        return true;
    });
    if (found) {
        out.satisfiable = true;
        if (!verify_decomposition(g, out.certificate))
            throw std::logic_error("solver produced a certificate that fails verification");
    }
    return out;
}

}  // namespace

LeqResult ucat_leq(const Graph& g, const VertexFunction& f, int k, int refinement,
                   const SolverLimits& limits) {
    auto refined = subdivide(g, f, refinement);
    return leq_on_instance(refined.graph, refined.function, k, limits);
}

UcatResult exact_ucat(const Graph& g, const VertexFunction& f, unsigned p, int refinement,
                      const SolverLimits& limits) {
    if (p == 0) throw std::invalid_argument("p must be positive");
    UcatResult out;
    out.p = p;
    out.refinement = refinement;
    out.instance = subdivide(g, f.pow(p), refinement);
    const Graph& gg = out.instance.graph;
    const VertexFunction& ff = out.instance.function;

    Bitset supp = ff.support();
    out.exact = !supp.any() || induces_forest(gg, supp);
    if (!supp.any()) {
        out.value = 0;
        out.certificate.mode = DecompositionMode::Sum;
        out.certificate.target = ff;
        return out;
    }
    for (int k = 1;; k++) {
        if (k > limits.max_k)
            throw budget_error("max-k", "no decomposition within the size limit of " +
                                            std::to_string(limits.max_k) + " components");
        auto leq = leq_on_instance(gg, ff, k, limits);
        if (leq.satisfiable) {
            out.value = k;
            out.certificate = std::move(leq.certificate);
            return out;
        }
    }
}

StrongLeqResult ucat_strong_leq(const Graph& g, const VertexFunction& f, int k,
                                const SolverLimits& limits) {
    StrongLeqResult out;
    Bitset supp = f.support();
    if (!supp.any()) {
        out.satisfiable = k >= 0;
        out.certificate.mode = DecompositionMode::Sum;
        out.certificate.target = f;
        return out;
    }
    if (k <= 0) return out;
    if (k == 1) {
        auto leq = leq_on_instance(g, f, 1, limits);
        out.satisfiable = leq.satisfiable;
        out.certificate = std::move(leq.certificate);
        return out;
    }

    MultisetSearch search(g, f, limits);
    bool saw_feasible_without_strong = false;
    bool hit_caps = false;
    bool found = search.search(k, [&](const std::vector<const RootedCandidate*>& multiset) {
        std::vector<SupportCandidate> cands;
        cands.reserve(multiset.size());
        for (const auto* c : multiset) cands.push_back({c->support, c->root});
        auto sys = build_feasibility_system(g, f, cands);
        std::vector<int> var_base(cands.size(), 0);
        int nv = 0;
        for (std::size_t i = 0; i < cands.size(); i++) {
            var_base[i] = nv;
            nv += cands[i].support.count();
        }
        bool multiset_feasible = false, multiset_strong = false;
        auto stats = for_each_basic_feasible_point(
            sys, limits.max_bases, limits.lp_pivot_cap, [&](const std::vector<Rat>& point) {
                multiset_feasible = true;
                auto d = extract_decomposition(g, f, cands, point, var_base);
                std::vector<VertexFunction> fns;
                for (const auto& comp : d.components) fns.push_back(comp.values);
                auto strong = is_strong_decomposition(g, fns, limits.threads);
                if (strong.strong) {
                    out.certificate = std::move(d);
                    multiset_strong = true;
                    return false;
                }
                return true;
            });
        if (!stats.complete && !stats.stopped_early) hit_caps = true;
        if (multiset_feasible && !multiset_strong) saw_feasible_without_strong = true;
        return multiset_strong;
    });
    out.satisfiable = found;
    if (!found) out.search_incomplete = saw_feasible_without_strong || hit_caps;
    if (found && !verify_decomposition(g, out.certificate))
        throw std::logic_error("strong solver produced a certificate that fails verification");
    return out;
}

UcatResult exact_ucat_strong(const Graph& g, const VertexFunction& f, unsigned p,
                             const SolverLimits& limits) {
    if (p == 0) throw std::invalid_argument("p must be positive");
    UcatResult weak = exact_ucat(g, f, p, 0, limits);
    UcatResult out;
    out.p = p;
    out.refinement = 0;
    out.instance = weak.instance;
    out.exact = weak.exact;
    const Graph& gg = out.instance.graph;
    const VertexFunction& ff = out.instance.function;
    if (weak.value == 0) {
        out.value = 0;
        out.certificate = weak.certificate;
        out.strong = true;
        return out;
    }
    bool incomplete_below = false;
    for (int k = weak.value;; k++) {
        if (k > limits.max_k)
            throw budget_error("max-k", "no strong decomposition within the size limit of " +
                                            std::to_string(limits.max_k) + " components");
        auto leq = ucat_strong_leq(gg, ff, k, limits);
        if (leq.satisfiable) {
            out.value = k;
            out.certificate = std::move(leq.certificate);
            out.strong = true;
            out.strong_search_incomplete = incomplete_below;
            return out;
        }
        incomplete_below = incomplete_below || leq.search_incomplete;
    }
}

TreeCover min_tree_cover(const Graph& g, const SolverLimits& limits) {
    if (!is_connected(g)) throw std::invalid_argument("min_tree_cover requires a connected graph");
    if (g.vertex_count() > limits.max_vertices)
        throw budget_error("budget-vertices",
                           "instance has " + std::to_string(g.vertex_count()) +
                               " vertices, over the limit of " + std::to_string(limits.max_vertices));
    auto trees = enumerate_induced_subtrees(g, g.vertex_count());
    std::vector<std::vector<int>> containing(g.vertex_count());
    for (int i = 0; i < static_cast<int>(trees.size()); i++)
        trees[i].for_each([&](int v) { containing[v].push_back(i); });

    int max_size = 0;
    for (const auto& t : trees) max_size = std::max(max_size, t.count());

    std::vector<int> chosen;
    std::function<bool(int, const Bitset&)> cover = [&](int left, const Bitset& uncovered) {
        if (!uncovered.any()) return true;
        if (left == 0) return false;
        if (static_cast<long>(uncovered.count()) > static_cast<long>(left) * max_size) return false;
        int v = uncovered.first_set();
        for (int ti : containing[v]) {
            chosen.push_back(ti);
            if (cover(left - 1, uncovered.and_not(trees[ti]))) return true;
            chosen.pop_back();
        }
        return false;
    };

    for (int k = 1; k <= limits.max_k; k++) {
        chosen.clear();
        if (cover(k, g.full_vertex_set())) {
            TreeCover out;
            out.value = k;
            for (int ti : chosen) out.trees.push_back(trees[ti]);
            return out;
        }
    }
    throw budget_error("max-k", "no induced-subtree cover within the size limit of " +
                                    std::to_string(limits.max_k) + " sets");
}

}  // namespace ucat
