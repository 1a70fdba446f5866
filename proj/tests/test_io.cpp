#include <catch2/catch_amalgamated.hpp>

#include "bialt/construct.hpp"
#include "bialt/io.hpp"
#include "oracles.hpp"

using namespace bialt;

namespace {

void check_graph6_roundtrip(const FactorGraph& g) {
    const auto dec = oracles::decode_graph6(to_graph6(g));
    REQUIRE(dec.n == g.order());
    std::set<std::pair<int, int>> expect;
    for (const auto& [e, cls] : g.edge_classes()) {
        (void)cls;
        expect.insert(e);
    }
    REQUIRE(dec.edges == expect);
}

}  // namespace

TEST_CASE("graph6 export matches an independent decoder") {
    const FactorGraph prism = build_mobius_or_prism(3, LadderKind::prism);
    const std::string g6 = to_graph6(prism);
    const auto dec = oracles::decode_graph6(g6);
    REQUIRE(dec.n == 12);
    std::vector<int> deg(12, 0);
    for (const auto& [u, v] : dec.edges) {
        ++deg[u];
        ++deg[v];
    }
    for (int d : deg) REQUIRE(d == 3);  // a 12-vertex cubic graph
    check_graph6_roundtrip(prism);
}

TEST_CASE("graph6 uses the extended size form above 62 vertices") {
    const FactorGraph g = build_xb(3, 36, 1, 4, 22);  // 108 vertices
    const std::string g6 = to_graph6(g);
    REQUIRE(g6[0] == '~');
    check_graph6_roundtrip(g);
}

TEST_CASE("edge list JSON round-trips") {
    const FactorGraph g = build_xb(5, 12, 1, 8, 7);
    const FactorGraph back = from_edge_list_json(to_edge_list_json(g));
    REQUIRE(back.order() == g.order());
    REQUIRE(back.family_label() == g.family_label());
    REQUIRE(back.edge_classes() == g.edge_classes());
    for (int v = 0; v < g.order(); ++v) REQUIRE(back.neighbors(v) == g.neighbors(v));
}

TEST_CASE("import validates the ring structure") {
    const FactorGraph g = build_xb1(3);
    auto j = to_edge_list_json(g);
    // swap one ring edge for a chord: import must reject it
    for (auto& e : j["edges"])
        if (e[2] == "ring" && e[0] == 0 && e[1] == 1) {
            e[1] = 2;
            break;
        }
    REQUIRE_THROWS_AS(from_edge_list_json(j), std::invalid_argument);
}

TEST_CASE("dot output carries the class attribute with the right multiplicities") {
    const FactorGraph g = build_xb(3, 12, 1, 4, 10);
    const std::string dot = to_dot(g);
    auto count = [&](const std::string& needle) {
        std::size_t hits = 0, pos = 0;
        while ((pos = dot.find(needle, pos)) != std::string::npos) {
            ++hits;
            pos += needle.size();
        }
        return hits;
    };
    REQUIRE(count("[class=ring") == 36);  // m*n ring edges
    REQUIRE(count("[class=link") == 12);  // (m-1)*n/2
    REQUIRE(count("[class=jump") == 6);   // n/2
    REQUIRE(count("[class=link") + count("[class=jump") == 18);  // the 1-factor, mn/2
}

TEST_CASE("export dispatch and unknown format") {
    const FactorGraph g = build_mobius_or_prism(3, LadderKind::mobius);
    REQUIRE_FALSE(export_graph(g, "graph6").empty());
    REQUIRE_FALSE(export_graph(g, "dot").empty());
    REQUIRE_FALSE(export_graph(g, "edgejson").empty());
    REQUIRE_THROWS_AS(export_graph(g, "png"), std::invalid_argument);
}
