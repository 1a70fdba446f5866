#ifndef BIALT_PERM_HPP
#define BIALT_PERM_HPP

// Permutations of the vertex set, stored as total image arrays over the
// canonical flat order.

#include <optional>

#include "bialt/graph.hpp"

namespace bialt {

struct Perm {
    std::vector<int> img;
    std::string label;

    Perm() = default;
    Perm(std::vector<int> images, std::string name = "")
        : img(std::move(images)), label(std::move(name)) {
        std::vector<char> seen(img.size(), 0);
        for (int x : img) {
            if (x < 0 || x >= static_cast<int>(img.size()) || seen[x])
                throw std::invalid_argument("Perm: images are not a bijection");
            seen[x] = 1;
        }
    }

    int degree() const { return static_cast<int>(img.size()); }
    int operator()(int v) const { return img[v]; }

    static Perm identity(int degree, std::string name = "id") {
        std::vector<int> im(degree);
        for (int v = 0; v < degree; ++v) im[v] = v;
        return Perm(std::move(im), std::move(name));
    }

    Perm inverse() const {
        std::vector<int> inv(img.size());
        for (int v = 0; v < degree(); ++v) inv[img[v]] = v;
        return Perm(std::move(inv), label.empty() ? "" : label + "^-1");
    }

    bool is_identity() const {
        for (int v = 0; v < degree(); ++v)
            if (img[v] != v) return false;
        return true;
    }

    bool is_involution() const {
        for (int v = 0; v < degree(); ++v)
            if (img[img[v]] != v) return false;
        return true;
    }

    friend bool operator==(const Perm& a, const Perm& b) { return a.img == b.img; }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img < b.img; }
};

// compose(f, g) applies g first: (f*g)(v) = f(g(v)). Matches the convention
// that a product like alpha*gamma acts by gamma, then alpha.
inline Perm compose(const Perm& f, const Perm& g, std::string name = "") {
    if (f.degree() != g.degree()) throw std::invalid_argument("compose: degree mismatch");
    std::vector<int> im(f.degree());
    for (int v = 0; v < f.degree(); ++v) im[v] = f.img[g.img[v]];
    if (name.empty()) name = f.label + "*" + g.label;
    return Perm(std::move(im), std::move(name));
}

struct AutCheck {
    bool ok = false;
    std::optional<std::pair<int, int>> violating_edge;  // an edge whose image is not an edge
};

// Does p map every edge of g onto an edge of g? On failure reports one
// violating edge for diagnostics.
inline AutCheck check_automorphism(const FactorGraph& g, const Perm& p) {
    if (p.degree() != g.order()) return {false, std::make_pair(-1, -1)};
    for (int v = 0; v < g.order(); ++v)
        for (int w : g.neighbors(v)) {
            if (v > w) continue;
            if (!g.adjacent(p(v), p(w))) return {false, std::make_pair(v, w)};
        }
    return {true, std::nullopt};
}

inline bool is_automorphism(const FactorGraph& g, const Perm& p) {
    return check_automorphism(g, p).ok;
}

// The outside-neighbor map commutes with every ring-preserving automorphism;
// used as a sanity property on constructed maps.
inline bool commutes_with_outside_neighbor(const FactorGraph& g, const Perm& p) {
    for (int v = 0; v < g.order(); ++v)
        if (p(g.outside_neighbor(v)) != g.outside_neighbor(p(v))) return false;
    return true;
}

}  // namespace bialt

#endif
