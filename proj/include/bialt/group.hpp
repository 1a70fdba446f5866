#ifndef BIALT_GROUP_HPP
#define BIALT_GROUP_HPP

// Finite permutation groups as fully materialized element sets. Breadth-first
// closure with a hard order bound keeps runaway generator sets diagnosable.

#include <random>
#include <set>

#include "bialt/perm.hpp"

namespace bialt {

struct BoundExceeded : std::runtime_error {
    explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

class PermGroup {
  public:
    static constexpr std::size_t default_bound = 1'000'000;

    // Closure of the generated group; deterministic (elements kept sorted).
    static PermGroup close(std::vector<Perm> gens, std::size_t bound = default_bound) {
        if (gens.empty()) throw std::invalid_argument("PermGroup::close: no generators");
        const int deg = gens.front().degree();
        for (const auto& g : gens)
            if (g.degree() != deg)
                throw std::invalid_argument("PermGroup::close: degree mismatch");

        std::set<std::vector<int>> seen;
        std::vector<std::vector<int>> frontier;
        seen.insert(Perm::identity(deg).img);
        frontier.push_back(Perm::identity(deg).img);
        while (!frontier.empty()) {
            std::vector<std::vector<int>> next;
            for (const auto& h : frontier) {
                for (const auto& g : gens) {
                    std::vector<int> prod(deg);
                    for (int v = 0; v < deg; ++v) prod[v] = g.img[h[v]];
                    if (seen.insert(prod).second) {
                        if (seen.size() > bound)
                            throw BoundExceeded("PermGroup::close: order exceeds bound " +
                                                std::to_string(bound));
                        next.push_back(std::move(prod));
                    }
                }
            }
            frontier = std::move(next);
        }

        PermGroup grp;
        grp.degree_ = deg;
        grp.generators_ = std::move(gens);
        grp.elements_.reserve(seen.size());
        for (const auto& im : seen) grp.elements_.emplace_back(im);
        return grp;
    }

    // Wraps an already-complete element set (e.g. from the exhaustive
    // automorphism search); the set itself doubles as the generator list.
    static PermGroup from_elements(std::vector<Perm> elems) {
        if (elems.empty()) throw std::invalid_argument("PermGroup::from_elements: empty");
        PermGroup grp;
        grp.degree_ = elems.front().degree();
        std::sort(elems.begin(), elems.end());
        grp.generators_ = elems;
        grp.elements_ = std::move(elems);
        return grp;
    }

    int degree() const { return degree_; }
    long long order() const { return static_cast<long long>(elements_.size()); }
    const std::vector<Perm>& generators() const { return generators_; }
    const std::vector<Perm>& elements() const { return elements_; }

    bool contains(const Perm& p) const {
        return std::binary_search(elements_.begin(), elements_.end(), p);
    }

    // Vertex orbits under the generators (equal to the group orbits).
    std::vector<std::vector<int>> orbits() const {
        std::vector<int> owner(degree_, -1);
        std::vector<std::vector<int>> out;
        for (int s = 0; s < degree_; ++s) {
            if (owner[s] != -1) continue;
            std::vector<int> orbit{s};
            owner[s] = static_cast<int>(out.size());
            for (std::size_t k = 0; k < orbit.size(); ++k)
                for (const auto& g : generators_) {
                    int w = g(orbit[k]);
                    if (owner[w] == -1) {
                        owner[w] = owner[s];
                        orbit.push_back(w);
                    }
                }
            std::sort(orbit.begin(), orbit.end());
            out.push_back(std::move(orbit));
        }
        return out;
    }

  private:
    int degree_ = 0;
    std::vector<Perm> generators_;
    std::vector<Perm> elements_;
};

inline bool is_transitive(const PermGroup& grp) {
    return grp.orbits().size() == 1;
}

// Regular action: transitive with order equal to degree.
inline bool is_regular(const PermGroup& grp) {
    return grp.order() == grp.degree() && is_transitive(grp);
}

namespace detail {

inline bool perm_preserves_partition(const Perm& p, const std::vector<std::vector<int>>& parts,
                                     const std::vector<int>& part_of) {
    for (const auto& cell : parts) {
        const int target = part_of[p(cell.front())];
        for (int v : cell)
            if (part_of[p(v)] != target) return false;
    }
    return true;
}

}  // namespace detail

// Every element maps every cell of the partition onto some cell. Checking the
// generators is sufficient; a sample of up to 100 materialized elements is
// re-checked as a guard against closure bugs.
inline bool preserves_partition(const PermGroup& grp, const std::vector<std::vector<int>>& parts) {
    std::vector<int> part_of(grp.degree(), -1);
    for (std::size_t c = 0; c < parts.size(); ++c)
        for (int v : parts[c]) part_of[v] = static_cast<int>(c);
    for (int v = 0; v < grp.degree(); ++v)
        if (part_of[v] == -1) throw std::invalid_argument("preserves_partition: not a partition");

    for (const auto& g : grp.generators())
        if (!detail::perm_preserves_partition(g, parts, part_of)) return false;

    std::mt19937 rng(0x5eed);
    const auto& elems = grp.elements();
    for (int k = 0; k < 100 && !elems.empty(); ++k) {
        const auto& g = elems[rng() % elems.size()];
        if (!detail::perm_preserves_partition(g, parts, part_of))
            throw std::logic_error("preserves_partition: closure produced a violating element");
    }
    return true;
}

inline long long setwise_stabilizer_order(const PermGroup& grp, const std::vector<int>& set) {
    std::vector<char> in_set(grp.degree(), 0);
    for (int v : set) in_set[v] = 1;
    long long count = 0;
    for (const auto& g : grp.elements()) {
        bool stab = true;
        for (int v : set)
            if (!in_set[g(v)]) {
                stab = false;
                break;
            }
        if (stab) ++count;
    }
    return count;
}

inline long long point_stabilizer_order(const PermGroup& grp, int v) {
    long long count = 0;
    for (const auto& g : grp.elements())
        if (g(v) == v) ++count;
    return count;
}

// s-arcs: vertex sequences (v_0..v_s), consecutive vertices adjacent, no
// immediate backtracking. The action is s-arc-regular when it is sharply
// transitive on them.
inline std::vector<std::vector<int>> enumerate_arcs(const FactorGraph& g, int s) {
    if (s < 1 || s > 2) throw std::invalid_argument("enumerate_arcs: s must be 1 or 2");
    std::vector<std::vector<int>> arcs;
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u)) {
            if (s == 1) {
                arcs.push_back({u, v});
                continue;
            }
            for (int w : g.neighbors(v))
                if (w != u) arcs.push_back({u, v, w});
        }
    return arcs;
}

inline bool is_s_arc_regular(const FactorGraph& g, const PermGroup& grp, int s) {
    const auto arcs = enumerate_arcs(g, s);
    if (grp.order() != static_cast<long long>(arcs.size())) return false;
    std::set<std::vector<int>> orbit;
    const auto& base = arcs.front();
    for (const auto& p : grp.elements()) {
        std::vector<int> image(base.size());
        for (std::size_t k = 0; k < base.size(); ++k) image[k] = p(base[k]);
        orbit.insert(std::move(image));
    }
    // transitive (orbit covers all arcs) and free (all images distinct)
    return orbit.size() == arcs.size();
}

}  // namespace bialt

#endif
