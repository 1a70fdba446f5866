#ifndef BIALT_CYCLES_HPP
#define BIALT_CYCLES_HPP

// BFS girth, connectivity, bipartiteness, and exhaustive short-cycle counting.

#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

#include "bialt/graph.hpp"

namespace bialt {

inline bool is_connected(const FactorGraph& g) {
    const int N = g.order();
    std::vector<char> seen(N, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == N;
}

inline bool is_bipartite(const FactorGraph& g) {
    const int N = g.order();
    std::vector<int> color(N, -1);
    for (int s = 0; s < N; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = color[v] ^ 1;
                    q.push(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Length of a shortest cycle, by BFS from every vertex. For the BFS rooted at
// r, any non-tree edge (x,y) closes a walk of length d(x)+d(y)+1 through r;
// the minimum over all roots is exact.
inline int girth(const FactorGraph& g) {
    const int N = g.order();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(N), parent(N);
    for (int r = 0; r < N; ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[r] = 0;
        std::queue<int> q;
        q.push(r);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            if (2 * dist[v] >= best) break;
            for (int w : g.neighbors(v)) {
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                } else if (w != parent[v] && v != parent[w]) {
                    int len = dist[v] + dist[w] + 1;
                    if (len < best) best = len;
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max())
        throw std::logic_error("girth: graph is acyclic");
    return best;
}

namespace detail {

inline void extend_path(const FactorGraph& g, int cur, int target, int steps_left,
                        std::vector<char>& used, long long& count) {
    if (steps_left == 0) {
        if (cur == target) ++count;
        return;
    }
    for (int w : g.neighbors(cur)) {
        if (used[w]) continue;
        if (w == target && steps_left > 1) continue;  // would close too early
        used[w] = 1;
        extend_path(g, w, target, steps_left - 1, used, count);
        used[w] = 0;
    }
}

}  // namespace detail

// Number of distinct cycles of length exactly len containing the edge (u,v),
// by exhaustive path extension. Window 3..12 keeps this desk-scale.
inline long long count_cycles_through_edge(const FactorGraph& g, int u, int v, int len) {
    if (len < 3 || len > 12)
        throw std::invalid_argument("count_cycles_through_edge: length outside [3,12]");
    if (!g.adjacent(u, v))
        throw std::invalid_argument("count_cycles_through_edge: not an edge");
    // each cycle through (u,v) is the edge plus one simple u-v path of len-1 edges
    long long count = 0;
    std::vector<char> used(g.order(), 0);
    used[u] = 1;
    for (int w : g.neighbors(u)) {
        if (w == v) continue;  // never traverse the edge itself
        used[w] = 1;
        detail::extend_path(g, w, v, len - 2, used, count);
        used[w] = 0;
    }
    return count;
}

// Total number of cycles of length exactly len (each cycle has len edges).
inline long long count_cycles(const FactorGraph& g, int len) {
    long long total = 0;
    for (const auto& [e, cls] : g.edge_classes()) {
        (void)cls;
        total += count_cycles_through_edge(g, e.first, e.second, len);
    }
    return total / len;
}

// Component lengths after deleting a perfect matching from a cubic graph; the
// remainder is 2-regular, so components are cycles. Throws if the given edge
// set is not a perfect matching.
inline std::vector<int> two_factor_cycle_lengths(const FactorGraph& g,
                                                 const std::set<std::pair<int, int>>& matching) {
    const int N = g.order();
    std::vector<int> hit(N, 0);
    for (const auto& [u, v] : matching) {
        if (!g.adjacent(u, v)) throw std::invalid_argument("matching edge not in graph");
        ++hit[u];
        ++hit[v];
    }
    for (int v = 0; v < N; ++v)
        if (hit[v] != 1) throw std::invalid_argument("edge set is not a perfect matching");

    std::vector<char> seen(N, 0);
    std::vector<int> lengths;
    for (int s = 0; s < N; ++s) {
        if (seen[s]) continue;
        int len = 0, v = s, prev = -1;
        while (!seen[v]) {
            seen[v] = 1;
            ++len;
            int next = -1;
            for (int w : g.neighbors(v)) {
                if (w == prev) continue;
                if (matching.count(edge_key(v, w))) continue;
                next = w;
                break;
            }
            prev = v;
            v = next;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

}  // namespace bialt

#endif
