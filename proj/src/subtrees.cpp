#include "ucat/subtrees.hpp"

#include <algorithm>
#include <stdexcept>

namespace ucat {

namespace {

// Extends tree set `cur` by candidates adjacent to it, skipping `banned`.
// A vertex with two or more edges into `cur` closes a cycle in every
// superset, so it is banned outright.
void grow(const Graph& g, const Bitset& within, int root, int max_size, Bitset& cur,
          Bitset banned, std::vector<Bitset>& out) {
    out.push_back(cur);
    if (cur.count() >= max_size) return;
    std::vector<int> candidates;
    cur.for_each([&](int v) {
        for (int w : g.neighbors(v))
            if (w > root && within.test(w) && !cur.test(w) && !banned.test(w))
                candidates.push_back(w);
    });
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (int w : candidates) {
        int edges_into_cur = 0;
        for (int x : g.neighbors(w))
            if (cur.test(x)) edges_into_cur++;
        banned.set(w);
        if (edges_into_cur != 1) continue;
        cur.set(w);
        Bitset inner_banned = banned;
        inner_banned.reset(w);
        grow(g, within, root, max_size, cur, inner_banned, out);
        cur.reset(w);
    }
}

}  // namespace

std::vector<Bitset> enumerate_induced_subtrees(const Graph& g, int max_size,
                                               const Bitset& within) {
    if (max_size < 1) throw std::invalid_argument("max_size must be >= 1");
    std::vector<Bitset> out;
    for (int root = 0; root < g.vertex_count(); root++) {
        if (!within.test(root)) continue;
        Bitset cur(g.vertex_count());
        cur.set(root);
        grow(g, within, root, max_size, cur, Bitset(g.vertex_count()), out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Bitset> enumerate_induced_subtrees(const Graph& g, int max_size) {
    return enumerate_induced_subtrees(g, max_size, g.full_vertex_set());
}

std::vector<Bitset> filter_maximal_subtrees(const Graph& g, const std::vector<Bitset>& subtrees) {
    std::vector<Bitset> out;
    for (const auto& s : subtrees) {
        bool extendable = false;
        for (int v = 0; v < g.vertex_count() && !extendable; v++) {
            if (s.test(v)) continue;
            int into = 0;
            for (int w : g.neighbors(v))
                if (s.test(w)) into++;
            if (into == 1) extendable = true;
        }
        if (!extendable) out.push_back(s);
    }
    return out;
}

}  // namespace ucat
