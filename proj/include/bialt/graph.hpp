#ifndef BIALT_GRAPH_HPP
#define BIALT_GRAPH_HPP

// Core data model: cubic graphs on an m x n vertex grid whose edge set splits
// into a ring 2-factor (m disjoint n-cycles) and a perfect matching of
// "outside" edges (links between consecutive rings, jumps wrapping from the
// last ring back to the first).

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bialt {

// Least nonnegative residue; works for negative x.
inline int mod(long long x, int n) {
    int r = static_cast<int>(x % n);
    return r < 0 ? r + n : r;
}

inline int gcd_int(int a, int b) {
    while (b != 0) {
        int t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

struct VertexId {
    int i = 0;  // ring index, mod m
    int j = 0;  // position on the ring, mod n
};

inline bool operator==(VertexId a, VertexId b) { return a.i == b.i && a.j == b.j; }

enum class EdgeClass { ring, link, jump };

inline const char* to_string(EdgeClass c) {
    switch (c) {
        case EdgeClass::ring: return "ring";
        case EdgeClass::link: return "link";
        default: return "jump";
    }
}

struct OutsideEdge {
    int u = 0;
    int v = 0;
    EdgeClass cls = EdgeClass::link;
};

// Canonical edge identity: unordered pair of flat indices, smaller first.
inline std::pair<int, int> edge_key(int u, int v) {
    return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
}

// Immutable cubic graph with the ring/link/jump structure. The constructor
// adds the ring edges itself and validates every structural invariant:
// 3-regularity, simplicity, the outside-neighbor involution, and that links
// join consecutive rings while jumps join ring m-1 to ring 0.
class FactorGraph {
  public:
    FactorGraph(int m, int n, std::string family_label,
                const std::vector<OutsideEdge>& outside)
        : m_(m), n_(n), family_(std::move(family_label)) {
        if (m_ < 2) throw std::invalid_argument("FactorGraph: need at least 2 rings");
        if (n_ < 4) throw std::invalid_argument("FactorGraph: ring length must be >= 4");
        const int order = m_ * n_;
        if (static_cast<int>(outside.size()) * 2 != order)
            throw std::invalid_argument("FactorGraph: outside edges must form a perfect matching");

        outside_.assign(order, -1);
        for (const auto& e : outside) {
            if (e.u < 0 || e.u >= order || e.v < 0 || e.v >= order)
                throw std::invalid_argument("FactorGraph: vertex out of range");
            if (e.cls == EdgeClass::ring)
                throw std::invalid_argument("FactorGraph: outside edge tagged as ring");
            const int ri = ring_of(e.u), rj = ring_of(e.v);
            if (ri == rj)
                throw std::invalid_argument("FactorGraph: outside edge inside one ring");
            const bool consecutive =
                (rj == (ri + 1) % m_ && ri <= m_ - 2) || (ri == (rj + 1) % m_ && rj <= m_ - 2);
            const bool wrapping = (ri == m_ - 1 && rj == 0) || (rj == m_ - 1 && ri == 0);
            if (e.cls == EdgeClass::link && !consecutive)
                throw std::invalid_argument("FactorGraph: link must join consecutive rings");
            if (e.cls == EdgeClass::jump && !wrapping)
                throw std::invalid_argument("FactorGraph: jump must join last ring to first");
            if (outside_[e.u] != -1 || outside_[e.v] != -1)
                throw std::invalid_argument("FactorGraph: vertex has two outside edges");
            outside_[e.u] = e.v;
            outside_[e.v] = e.u;
            classes_[edge_key(e.u, e.v)] = e.cls;
        }

        adj_.resize(order);
        for (int i = 0; i < m_; ++i) {
            for (int j = 0; j < n_; ++j) {
                const int v = i * n_ + j;
                std::array<int, 3> nb{flat(i, j - 1), flat(i, j + 1), outside_[v]};
                if (nb[0] == nb[1])
                    throw std::invalid_argument("FactorGraph: ring collapses to a multi-edge");
                classes_[edge_key(v, flat(i, j + 1))] = EdgeClass::ring;
                std::sort(nb.begin(), nb.end());
                adj_[v] = nb;
            }
        }
        if (static_cast<int>(classes_.size()) != order + order / 2)
            throw std::invalid_argument("FactorGraph: outside edge duplicates a ring edge");
    }

    int rings_count() const { return m_; }
    int ring_length() const { return n_; }
    int order() const { return m_ * n_; }
    int edge_count() const { return 3 * order() / 2; }
    const std::string& family_label() const { return family_; }

    // flat index i*n + j is the canonical vertex order used everywhere
    // (permutations, graph6, hashing); indices reduce mod m and mod n.
    int flat(long long i, long long j) const { return mod(i, m_) * n_ + mod(j, n_); }
    int flat(VertexId v) const { return flat(v.i, v.j); }
    VertexId coords(int v) const { return {v / n_, v % n_}; }
    int ring_of(int v) const { return v / n_; }

    const std::array<int, 3>& neighbors(int v) const { return adj_[v]; }

    bool adjacent(int u, int v) const {
        const auto& nb = adj_[u];
        return nb[0] == v || nb[1] == v || nb[2] == v;
    }

    // The unique neighbor of v outside v's ring; an involution.
    int outside_neighbor(int v) const { return outside_[v]; }
    VertexId outside_neighbor(VertexId v) const { return coords(outside_[flat(v)]); }

    EdgeClass edge_class(int u, int v) const {
        auto it = classes_.find(edge_key(u, v));
        if (it == classes_.end()) throw std::invalid_argument("edge_class: not an edge");
        return it->second;
    }

    const std::map<std::pair<int, int>, EdgeClass>& edge_classes() const { return classes_; }

    // The ring partition: vertex sets V_0, ..., V_{m-1} of the 2-factor.
    std::vector<std::vector<int>> ring_partition() const {
        std::vector<std::vector<int>> part(m_);
        for (int i = 0; i < m_; ++i) {
            part[i].resize(n_);
            for (int j = 0; j < n_; ++j) part[i][j] = i * n_ + j;
        }
        return part;
    }

    std::vector<std::vector<int>> adjacency_lists() const {
        std::vector<std::vector<int>> out(order());
        for (int v = 0; v < order(); ++v) out[v].assign(adj_[v].begin(), adj_[v].end());
        return out;
    }

  private:
    int m_;
    int n_;
    std::string family_;
    std::vector<std::array<int, 3>> adj_;
    std::vector<int> outside_;
    std::map<std::pair<int, int>, EdgeClass> classes_;
};

}  // namespace bialt

#endif
