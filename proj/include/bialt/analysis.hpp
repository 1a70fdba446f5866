#ifndef BIALT_ANALYSIS_HPP
#define BIALT_ANALYSIS_HPP

// Structural predicates one level above the raw graphs: the ring quotient and
// its type, Cayley certificates from regular groups, automorphism orbits on
// edges, and the known full-group profiles for the small exceptional cases.

#include <optional>

#include "bialt/aut_search.hpp"
#include "bialt/construct.hpp"
#include "bialt/cycles.hpp"
#include "bialt/group.hpp"
#include "bialt/maps.hpp"

namespace bialt {

// ---- quotient ----

// Adjacency of the quotient on the m rings: rings adjacent when an outside
// edge joins them.
inline std::vector<std::set<int>> quotient_graph(const FactorGraph& g) {
    std::vector<std::set<int>> q(g.rings_count());
    for (int v = 0; v < g.order(); ++v) {
        const int ri = g.ring_of(v), rj = g.ring_of(g.outside_neighbor(v));
        q[ri].insert(rj);
        q[rj].insert(ri);
    }
    return q;
}

inline bool quotient_is_cycle(const FactorGraph& g) {
    const auto q = quotient_graph(g);
    if (q.size() < 3) return false;
    for (const auto& nb : q)
        if (nb.size() != 2) return false;
    // connected and 2-regular on >= 3 nodes means a single cycle
    std::vector<char> seen(q.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        int r = stack.back();
        stack.pop_back();
        for (int s : q[r])
            if (!seen[s]) {
                seen[s] = 1;
                ++reached;
                stack.push_back(s);
            }
    }
    return reached == q.size();
}

enum class QuotientKind { alternating, bialternating, not_cycle_quotient };

inline const char* to_string(QuotientKind k) {
    switch (k) {
        case QuotientKind::alternating: return "alternating";
        case QuotientKind::bialternating: return "bialternating";
        default: return "not_cycle_quotient";
    }
}

struct QuotientType {
    QuotientKind kind = QuotientKind::not_cycle_quotient;
    std::string evidence;
};

// The dichotomy at the base vertex v(0,0), oriented so that "next" is the
// ring holding its outside neighbor: bialternating when exactly one of
// v(0,1), v(0,-1) has its outside neighbor in that ring, alternating when
// neither does.
inline QuotientType classify_quotient_type(const FactorGraph& g) {
    if (!quotient_is_cycle(g)) return {QuotientKind::not_cycle_quotient, "quotient is not a cycle"};
    const int base = g.flat(0, 0);
    const int next = g.ring_of(g.outside_neighbor(base));
    const int r1 = g.ring_of(g.outside_neighbor(g.flat(0, 1)));
    const int r2 = g.ring_of(g.outside_neighbor(g.flat(0, -1)));
    const int hits = (r1 == next ? 1 : 0) + (r2 == next ? 1 : 0);
    std::string ev = "N(v01) in ring " + std::to_string(r1) + ", N(v0-1) in ring " +
                     std::to_string(r2) + ", next ring " + std::to_string(next);
    if (hits == 1) return {QuotientKind::bialternating, ev};
    if (hits == 0) return {QuotientKind::alternating, ev};
    throw std::domain_error("classify_quotient_type: neighbor pattern matches neither type (" +
                            ev + ")");
}

// ---- Cayley structure ----

struct CayleyCertificate {
    bool ok = false;
    std::vector<Perm> involutions;  // the three elements mapping v(0,0) to its neighbors
    std::string failure;
};

// For a regular ring-preserving group: the three elements sending v(0,0) to
// its neighbors form a connection set of involutions, and the orbit map
// h -> h(v(0,0)) is an isomorphism from the Cayley graph onto g. Both facts
// are certified explicitly.
inline CayleyCertificate cayley_certificate(const FactorGraph& g, const PermGroup& grp) {
    CayleyCertificate cert;
    if (!is_regular(grp) || grp.degree() != g.order()) {
        cert.failure = "group is not regular on the vertex set";
        return cert;
    }
    const int base = g.flat(0, 0);
    for (int nb : g.neighbors(base)) {
        const Perm* hit = nullptr;
        for (const auto& p : grp.elements())
            if (p(base) == nb) {
                hit = &p;
                break;
            }
        if (hit == nullptr) {
            cert.failure = "no group element maps the base vertex to neighbor " +
                           std::to_string(nb);
            return cert;
        }
        if (!hit->is_involution()) {
            cert.failure = "connection element to neighbor " + std::to_string(nb) +
                           " is not an involution";
            cert.involutions.push_back(*hit);
            return cert;
        }
        cert.involutions.push_back(*hit);
    }

    // orbit map: index elements by where they send the base vertex
    std::vector<int> elem_at(g.order(), -1);
    const auto& elems = grp.elements();
    for (std::size_t k = 0; k < elems.size(); ++k) {
        int img = elems[k](base);
        if (elem_at[img] != -1) {
            cert.failure = "orbit map is not injective";
            return cert;
        }
        elem_at[img] = static_cast<int>(k);
    }
    // Cayley edges {h, h*s} must map onto edges of g and exhaust them
    std::size_t edges_seen = 0;
    for (const auto& h : elems)
        for (const auto& s : cert.involutions) {
            const Perm hs = compose(h, s);
            if (!g.adjacent(h(base), hs(base))) {
                cert.failure = "Cayley edge does not map to an edge";
                return cert;
            }
            ++edges_seen;
        }
    if (edges_seen != 2 * static_cast<std::size_t>(g.edge_count())) {
        cert.failure = "Cayley edge count mismatch";
        return cert;
    }
    cert.ok = true;
    return cert;
}

// ---- edge orbits and colorings ----

enum class EdgeColor { green, red, blue };

// red = the outside 1-factor; green = ring edges starting at odd positions;
// blue = the remaining ring edges.
inline EdgeColor edge_color(const FactorGraph& g, int u, int v) {
    if (g.edge_class(u, v) != EdgeClass::ring) return EdgeColor::red;
    const auto cu = g.coords(u), cv = g.coords(v);
    int lo = cu.j, hi = cv.j;
    if ((lo + 1) % g.ring_length() != hi) std::swap(lo, hi);  // lo -> lo+1 edge
    return (lo % 2 == 1) ? EdgeColor::green : EdgeColor::blue;
}

struct EdgeOrbit {
    std::vector<std::pair<int, int>> edges;
    std::pair<int, int> representative;
    std::map<int, long long> cycle_counts;  // length -> cycles through the representative
};

// Orbits of the full automorphism group on the edge set, each annotated with
// short-cycle counts through a representative.
inline std::vector<EdgeOrbit> edge_orbit_report(const FactorGraph& g, const PermGroup& aut,
                                                const std::vector<int>& lengths = {4, 6, 7, 8}) {
    std::set<std::pair<int, int>> remaining;
    for (const auto& [e, cls] : g.edge_classes()) {
        (void)cls;
        remaining.insert(e);
    }
    std::vector<EdgeOrbit> orbits;
    while (!remaining.empty()) {
        const auto seed = *remaining.begin();
        std::set<std::pair<int, int>> orbit;
        for (const auto& p : aut.elements()) orbit.insert(edge_key(p(seed.first), p(seed.second)));
        EdgeOrbit rec;
        rec.representative = seed;
        for (const auto& e : orbit) {
            remaining.erase(e);
            rec.edges.push_back(e);
        }
        for (int len : lengths)
            rec.cycle_counts[len] = count_cycles_through_edge(g, seed.first, seed.second, len);
        orbits.push_back(std::move(rec));
    }
    return orbits;
}

// Deletes the automorphism orbit of the edge v(0,0)v(0,1) (a perfect matching
// in the xb1 family) and returns the cycle lengths of what remains.
inline std::vector<int> green_deletion_cycles(const FactorGraph& g, const PermGroup& aut) {
    const auto seed = edge_key(g.flat(0, 0), g.flat(0, 1));
    std::set<std::pair<int, int>> orbit;
    for (const auto& p : aut.elements()) orbit.insert(edge_key(p(seed.first), p(seed.second)));
    return two_factor_cycle_lengths(g, orbit);
}

// ---- ring invariance of the full group ----

inline PermGroup ring_preserving_subgroup(const PermGroup& aut, const FactorGraph& g) {
    const auto parts = g.ring_partition();
    std::vector<int> part_of(g.order());
    for (std::size_t c = 0; c < parts.size(); ++c)
        for (int v : parts[c]) part_of[v] = static_cast<int>(c);
    std::vector<Perm> kept;
    for (const auto& p : aut.elements())
        if (detail::perm_preserves_partition(p, parts, part_of)) kept.push_back(p);
    return PermGroup::from_elements(std::move(kept));
}

inline bool rings_aut_invariant(const PermGroup& aut, const FactorGraph& g) {
    return preserves_partition(aut, g.ring_partition());
}

// ---- the m odd / l even exception ----

struct EtaExceptionReport {
    XbParams params;
    bool exceptional = false;  // n = 4m, the one tuple with extra symmetry
    long long aut_order = 0;
    long long point_stabilizer = 0;
    bool rings_invariant = false;
    std::optional<Perm> eta;  // fixes v(1,1), swaps v(0,1) and v(1,0)
};

// For odd m and n = 4*n0 with n0 odd, the tuple (m, n, 1, 4, 2*n0+2m-2) has a
// regular full group except when n = 4m, where the stabilizers have order 2
// and the extra involution eta appears.
inline EtaExceptionReport eta_exception_check(int m, int n, SearchLimits limits = {}) {
    if (m < 3 || m % 2 == 0) throw std::invalid_argument("eta_exception_check: m must be odd");
    if (n % 4 != 0 || (n / 4) % 2 == 0)
        throw std::invalid_argument("eta_exception_check: need n = 4*n0 with n0 odd");
    EtaExceptionReport rep;
    rep.params = XbParams::reduced(m, n, 1, 4, 2LL * (n / 4) + 2 * m - 2);
    const FactorGraph g = build_xb(rep.params);
    const PermGroup aut = full_aut(g, limits);
    rep.aut_order = aut.order();
    rep.point_stabilizer = point_stabilizer_order(aut, g.flat(1, 1));
    rep.rings_invariant = rings_aut_invariant(aut, g);
    rep.exceptional = (n == 4 * m);
    if (rep.exceptional) {
        for (const auto& p : aut.elements())
            if (p(g.flat(1, 1)) == g.flat(1, 1) && p(g.flat(0, 1)) == g.flat(1, 0) &&
                p(g.flat(1, 0)) == g.flat(0, 1)) {
                Perm eta = p;
                eta.label = "eta";
                rep.eta = std::move(eta);
                break;
            }
    }
    return rep;
}

// ---- known full-group profiles ----

struct AutProfile {
    std::optional<long long> point_stabilizer;
    std::optional<bool> rings_invariant;
    std::optional<long long> aut_order;
    std::optional<bool> two_arc_regular;
};

// What the classification and the small-case analysis pin down about the full
// automorphism group. Cases without a settled answer yield no expectations.
inline AutProfile expected_aut_profile(const CaseResult& cls, const XbParams& p) {
    AutProfile out;
    const long long mn = static_cast<long long>(p.m) * p.n;
    switch (cls.kind) {
        case TheoremCase::N4_MobiusOrPrism:
            out.point_stabilizer = 2;
            out.rings_invariant = false;
            break;
        case TheoremCase::N8_Xb1:
            out.point_stabilizer = 2;
            out.rings_invariant = false;
            break;
        case TheoremCase::N8_Xb2:
            out.point_stabilizer = 1;
            out.rings_invariant = true;
            out.aut_order = mn;
            break;
        case TheoremCase::N8_b4:
            if (p.a == 5) {  // honeycomb toroidal territory
                if (p.m == 3 && p.l == 3) {
                    out.aut_order = 144;
                    out.point_stabilizer = 6;
                    out.two_arc_regular = true;
                } else {
                    out.point_stabilizer = 2;
                }
                out.rings_invariant = false;
            } else {  // a = 1, m even
                if (p.m == 4 && p.l == 6) {
                    out.point_stabilizer = 4;
                    out.rings_invariant = false;
                } else {
                    out.point_stabilizer = 1;
                    out.rings_invariant = true;
                    out.aut_order = mn;
                }
            }
            break;
        case TheoremCase::OddEven:
            if (p.n == 4 * p.m) {
                out.point_stabilizer = 2;
                out.rings_invariant = false;
                out.aut_order = 2 * mn;
            } else {
                out.point_stabilizer = 1;
                out.rings_invariant = true;
                out.aut_order = mn;
            }
            break;
        case TheoremCase::OddOdd:
        case TheoremCase::EvenEven:
            // settled only for one pinned example
            if (p.m == 5 && p.n == 12 && p.a == 1 && p.b == 8 && p.l == 7) {
                out.point_stabilizer = 1;
                out.rings_invariant = true;
                out.aut_order = mn;
            }
            break;
        case TheoremCase::Invalid:
            break;
    }
    return out;
}

}  // namespace bialt

#endif
