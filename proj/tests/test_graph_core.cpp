#include <catch2/catch_amalgamated.hpp>

#include "bialt/construct.hpp"
#include "bialt/cycles.hpp"
#include "oracles.hpp"

using namespace bialt;

namespace {

void check_well_formed(const FactorGraph& g) {
    const int m = g.rings_count(), n = g.ring_length();
    std::set<std::pair<int, int>> seen;
    for (int v = 0; v < g.order(); ++v) {
        const auto& nb = g.neighbors(v);
        REQUIRE(nb[0] != nb[1]);
        REQUIRE(nb[1] != nb[2]);
        REQUIRE(nb[0] != v);
        REQUIRE(nb[1] != v);
        REQUIRE(nb[2] != v);
        for (int w : nb) {
            REQUIRE(g.adjacent(w, v));  // symmetric
            seen.insert(edge_key(v, w));
        }
        // outside-neighbor involution
        REQUIRE(g.outside_neighbor(g.outside_neighbor(v)) == v);
        REQUIRE(g.ring_of(g.outside_neighbor(v)) != g.ring_of(v));
    }
    REQUIRE(static_cast<int>(seen.size()) == g.edge_count());

    // ring edges decompose into m cycles of length n
    long long rings = 0, outside = 0;
    for (const auto& [e, cls] : g.edge_classes()) {
        if (cls == EdgeClass::ring) {
            REQUIRE(g.ring_of(e.first) == g.ring_of(e.second));
            ++rings;
        } else {
            ++outside;
        }
    }
    REQUIRE(rings == static_cast<long long>(m) * n);
    REQUIRE(outside == static_cast<long long>(m) * n / 2);
}

}  // namespace

TEST_CASE("flat index is a bijection with mod reduction") {
    const FactorGraph g = build_xb(5, 12, 1, 8, 7);
    std::set<int> flats;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 12; ++j) {
            const int v = g.flat(i, j);
            REQUIRE(v == i * 12 + j);
            flats.insert(v);
            const auto c = g.coords(v);
            REQUIRE(c.i == i);
            REQUIRE(c.j == j);
        }
    REQUIRE(flats.size() == 60);
    REQUIRE(g.flat(-1, -1) == g.flat(4, 11));
    REQUIRE(g.flat(5, 12) == 0);
}

TEST_CASE("constructed graphs satisfy every structural invariant") {
    check_well_formed(build_xb(5, 12, 1, 8, 7));
    check_well_formed(build_xb(3, 12, 1, 4, 2));
    check_well_formed(build_xb1(3));
    check_well_formed(build_xb2(6));
    check_well_formed(build_mobius_or_prism(7, LadderKind::mobius));
    check_well_formed(build_mobius_or_prism(7, LadderKind::prism));
    check_well_formed(build_htg(2, 12, 6));
    check_well_formed(build_htg(4, 6, 0));
}

TEST_CASE("outside neighbor formulas on xb(5,12,1,8,7)") {
    const FactorGraph g = build_xb(5, 12, 1, 8, 7);
    REQUIRE(g.outside_neighbor(g.flat(0, 0)) == g.flat(1, 0));
    REQUIRE(g.outside_neighbor(g.flat(0, 4)) == g.flat(1, 8));  // j0=1, d=0: b*1 = 8
    for (int v = 0; v < g.order(); ++v) {
        const int w = g.outside_neighbor(v);
        REQUIRE(g.outside_neighbor(w) == v);
    }
    // links start as N(v(i,2i)) = v(i+1,2i), N(v(i,2i+1)) = v(i+1,2i+a)
    for (int i = 0; i + 1 < 5; ++i) {
        REQUIRE(g.outside_neighbor(g.flat(i, 2 * i)) == g.flat(i + 1, 2 * i));
        REQUIRE(g.outside_neighbor(g.flat(i, 2 * i + 1)) == g.flat(i + 1, 2 * i + 1));
        REQUIRE(g.outside_neighbor(g.flat(i, 2 * i + 4)) == g.flat(i + 1, 2 * i + 8));
    }
    // wrap-around row: v(4, 8+4j0+d) ~ v(0, 7-8j0-d)
    for (int j0 = 0; j0 < 3; ++j0)
        for (int d = 0; d < 2; ++d)
            REQUIRE(g.outside_neighbor(g.flat(4, 8 + 4 * j0 + d)) ==
                    g.flat(0, 7 - 8 * j0 - d));
}

TEST_CASE("constructor rejects malformed input") {
    // missing outside edges
    REQUIRE_THROWS_AS(FactorGraph(3, 4, "bad", {}), std::invalid_argument);
    // a vertex with two outside edges
    std::vector<OutsideEdge> twice;
    for (int j = 0; j < 4; ++j) twice.push_back({j, 4 + (j % 2), EdgeClass::link});
    twice.push_back({8, 1, EdgeClass::jump});
    twice.push_back({9, 2, EdgeClass::jump});
    REQUIRE_THROWS_AS(FactorGraph(3, 4, "bad", twice), std::invalid_argument);
    // link joining non-consecutive rings
    REQUIRE_THROWS_AS(FactorGraph(4, 4, "bad",
                                  {{0, 8, EdgeClass::link},
                                   {1, 9, EdgeClass::link},
                                   {2, 10, EdgeClass::link},
                                   {3, 11, EdgeClass::link},
                                   {4, 12, EdgeClass::link},
                                   {5, 13, EdgeClass::link},
                                   {6, 14, EdgeClass::link},
                                   {7, 15, EdgeClass::link}}),
                      std::invalid_argument);
}

TEST_CASE("girth values and oracle agreement") {
    const FactorGraph prism3 = build_mobius_or_prism(3, LadderKind::prism);
    REQUIRE(girth(prism3) == 4);

    const FactorGraph big = build_xb(5, 12, 1, 8, 7);
    REQUIRE(girth(big) == 4);  // a = 1 gives the v00-v01-v11-v10 square

    const FactorGraph x1 = build_xb1(3);
    REQUIRE(girth(x1) == 6);

    for (const FactorGraph& g :
         {prism3, big, x1, build_xb2(3), build_xb(3, 8, 5, 4, 3), build_htg(4, 6, 0)}) {
        REQUIRE(girth(g) == oracles::girth_by_edge_deletion(oracles::adjacency_of(g)));
    }
}

TEST_CASE("short cycle counts through edges") {
    for (int m : {3, 6}) {
        const FactorGraph g = build_xb1(m);
        REQUIRE(count_cycles_through_edge(g, g.flat(0, 0), g.flat(0, 1), 7) == 6);
        REQUIRE(count_cycles_through_edge(g, g.flat(0, 0), g.flat(1, 0), 7) == 4);
        REQUIRE(count_cycles_through_edge(g, g.flat(0, 0), g.flat(0, 7), 7) == 4);
    }
    for (int m : {3, 6}) {
        const FactorGraph g = build_xb2(m);
        REQUIRE(count_cycles_through_edge(g, g.flat(0, 0), g.flat(0, 1), 4) == 1);
        REQUIRE(count_cycles_through_edge(g, g.flat(0, 0), g.flat(1, 0), 4) == 1);
        REQUIRE(count_cycles_through_edge(g, g.flat(0, 0), g.flat(0, 7), 4) == 0);
    }
    const FactorGraph g = build_xb1(3);
    REQUIRE_THROWS_AS(count_cycles_through_edge(g, 0, 1, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(count_cycles_through_edge(g, 0, 1, 13), std::invalid_argument);
    REQUIRE_THROWS_AS(count_cycles_through_edge(g, 0, 2, 6), std::invalid_argument);
}

TEST_CASE("every ring is one n-cycle of the ring 2-factor") {
    const FactorGraph g = build_xb(3, 12, 1, 4, 10);
    std::set<std::pair<int, int>> outside;
    for (const auto& [e, cls] : g.edge_classes())
        if (cls != EdgeClass::ring) outside.insert(e);
    const auto lengths = two_factor_cycle_lengths(g, outside);
    REQUIRE(lengths == std::vector<int>{12, 12, 12});
}

TEST_CASE("connectivity of accepted graphs") {
    REQUIRE(is_connected(build_xb(5, 12, 1, 8, 7)));
    REQUIRE(is_connected(build_xb(6, 20, 1, 16, 11)));
    REQUIRE(is_connected(build_xb2(6)));
    REQUIRE(is_connected(build_htg(2, 12, 6)));
}
