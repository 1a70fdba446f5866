#ifndef BIALT_AUT_SEARCH_HPP
#define BIALT_AUT_SEARCH_HPP

// Independent brute-force oracle: complete automorphism groups and explicit
// isomorphisms of desk-scale graphs, by backtracking over color-refined
// candidate maps. Deliberately self-contained: shares only the Perm type with
// the formula-built machinery it is used to check.

#include <optional>

#include "bialt/group.hpp"
#include "bialt/perm.hpp"

namespace bialt {

struct LimitExceeded : std::runtime_error {
    explicit LimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

using Adjacency = std::vector<std::vector<int>>;

// Joint iterated refinement of two colorings. Signatures combine a vertex's
// color with the multiset of its neighbors' colors; both sides share one
// signature-to-id table so corresponding cells end up with equal ids.
// Returns false when the per-color cell sizes diverge (no bijection can
// respect the colorings).
inline bool refine_pair(const Adjacency& a, const Adjacency& b, std::vector<int>& colA,
                        std::vector<int>& colB) {
    const int N = static_cast<int>(a.size());
    int classes = -1;
    for (;;) {
        std::vector<std::vector<int>> sigA(N), sigB(N);
        for (int v = 0; v < N; ++v) {
            sigA[v].push_back(colA[v]);
            for (int w : a[v]) sigA[v].push_back(colA[w]);
            std::sort(sigA[v].begin() + 1, sigA[v].end());
            sigB[v].push_back(colB[v]);
            for (int w : b[v]) sigB[v].push_back(colB[w]);
            std::sort(sigB[v].begin() + 1, sigB[v].end());
        }
        std::vector<std::vector<int>> pool;
        pool.reserve(2 * N);
        pool.insert(pool.end(), sigA.begin(), sigA.end());
        pool.insert(pool.end(), sigB.begin(), sigB.end());
        std::sort(pool.begin(), pool.end());
        pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
        auto id_of = [&](const std::vector<int>& s) {
            return static_cast<int>(std::lower_bound(pool.begin(), pool.end(), s) - pool.begin());
        };
        std::vector<int> histA(pool.size(), 0), histB(pool.size(), 0);
        for (int v = 0; v < N; ++v) {
            colA[v] = id_of(sigA[v]);
            ++histA[colA[v]];
            colB[v] = id_of(sigB[v]);
            ++histB[colB[v]];
        }
        if (histA != histB) return false;
        const int now = static_cast<int>(pool.size());
        if (now == classes) return true;  // stable
        classes = now;
    }
}

inline bool adjacency_preserved(const Adjacency& a, const Adjacency& b,
                                const std::vector<int>& map) {
    const int N = static_cast<int>(a.size());
    std::vector<char> mark(N, 0);
    for (int v = 0; v < N; ++v) {
        if (a[v].size() != b[map[v]].size()) return false;
        for (int w : b[map[v]]) mark[w] = 1;
        for (int w : a[v])
            if (!mark[map[w]]) {
                for (int x : b[map[v]]) mark[x] = 0;
                return false;
            }
        for (int w : b[map[v]]) mark[w] = 0;
    }
    return true;
}

class IsoSearch {
  public:
    IsoSearch(const Adjacency& a, const Adjacency& b, bool enumerate_all)
        : a_(a), b_(b), all_(enumerate_all) {}

    std::vector<Perm> run() {
        const int N = static_cast<int>(a_.size());
        if (N != static_cast<int>(b_.size())) return {};
        std::vector<int> colA(N, 0), colB(N, 0);
        recurse(colA, colB);
        return std::move(found_);
    }

  private:
    void recurse(std::vector<int> colA, std::vector<int> colB) {
        if (!all_ && !found_.empty()) return;
        if (!refine_pair(a_, b_, colA, colB)) return;
        const int N = static_cast<int>(a_.size());

        // smallest non-singleton cell; -1 when the partition is discrete
        std::vector<int> cell_size(2 * N, 0);
        int max_color = 0;
        for (int v = 0; v < N; ++v) {
            ++cell_size[colA[v]];
            max_color = std::max(max_color, std::max(colA[v], colB[v]));
        }
        int target = -1;
        for (int c = 0; c <= max_color; ++c)
            if (cell_size[c] > 1 && (target == -1 || cell_size[c] < cell_size[target]))
                target = c;

        if (target == -1) {
            std::vector<int> where(max_color + 1, -1), map(N, -1);
            for (int v = 0; v < N; ++v) where[colB[v]] = v;
            for (int v = 0; v < N; ++v) map[v] = where[colA[v]];
            if (adjacency_preserved(a_, b_, map)) found_.emplace_back(std::move(map));
            return;
        }

        int u = -1;
        for (int v = 0; v < N; ++v)
            if (colA[v] == target) {
                u = v;
                break;
            }
        const int fresh = max_color + 1;
        for (int w = 0; w < N; ++w) {
            if (colB[w] != target) continue;
            std::vector<int> nextA = colA, nextB = colB;
            nextA[u] = fresh;
            nextB[w] = fresh;
            recurse(std::move(nextA), std::move(nextB));
            if (!all_ && !found_.empty()) return;
        }
    }

    const Adjacency& a_;
    const Adjacency& b_;
    bool all_;
    std::vector<Perm> found_;
};

}  // namespace detail

struct SearchLimits {
    int max_vertices = 512;
};

// Every automorphism of the graph given by adjacency lists.
inline std::vector<Perm> all_automorphisms(const std::vector<std::vector<int>>& adj,
                                           SearchLimits limits = {}) {
    if (static_cast<int>(adj.size()) > limits.max_vertices)
        throw LimitExceeded("all_automorphisms: graph exceeds vertex limit " +
                            std::to_string(limits.max_vertices));
    detail::IsoSearch search(adj, adj, /*enumerate_all=*/true);
    return search.run();
}

// The complete automorphism group, materialized.
inline PermGroup full_aut(const FactorGraph& g, SearchLimits limits = {}) {
    return PermGroup::from_elements(all_automorphisms(g.adjacency_lists(), limits));
}

// An explicit isomorphism between two graphs, or nullopt. The returned map
// has been verified edge-by-edge.
inline std::optional<Perm> find_isomorphism(const std::vector<std::vector<int>>& a,
                                            const std::vector<std::vector<int>>& b,
                                            SearchLimits limits = {}) {
    if (static_cast<int>(a.size()) > limits.max_vertices ||
        static_cast<int>(b.size()) > limits.max_vertices)
        throw LimitExceeded("find_isomorphism: graph exceeds vertex limit " +
                            std::to_string(limits.max_vertices));
    if (a.size() != b.size()) return std::nullopt;
    detail::IsoSearch search(a, b, /*enumerate_all=*/false);
    auto found = search.run();
    if (found.empty()) return std::nullopt;
    return std::move(found.front());
}

inline std::optional<Perm> are_isomorphic(const FactorGraph& a, const FactorGraph& b,
                                          SearchLimits limits = {}) {
    return find_isomorphism(a.adjacency_lists(), b.adjacency_lists(), limits);
}

}  // namespace bialt

#endif
