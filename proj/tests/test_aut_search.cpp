#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bialt/aut_search.hpp"
#include "bialt/maps.hpp"
#include "oracles.hpp"

using namespace bialt;

TEST_CASE("full automorphism group orders of the reference tuples") {
    REQUIRE(full_aut(build_xb(3, 12, 1, 4, 2)).order() == 18);
    REQUIRE(full_aut(build_xb(3, 12, 1, 4, 3)).order() == 12);
    REQUIRE(full_aut(build_xb(3, 12, 1, 4, 10)).order() == 72);
    REQUIRE(full_aut(build_xb(5, 12, 1, 8, 7)).order() == 60);
}

TEST_CASE("every formula-built automorphism lies in the full group") {
    for (auto [m, n, a, b, l] :
         {std::tuple{5, 12, 1, 8, 7}, std::tuple{3, 12, 1, 4, 10}, std::tuple{4, 8, 1, 4, 6}}) {
        const XbParams p = XbParams::reduced(m, n, a, b, l);
        const FactorGraph g = build_xb(p);
        const PermGroup aut = full_aut(g);
        for (const Perm& cand : {alpha_of(p), gamma_of(p)})
            if (is_automorphism(g, cand)) REQUIRE(aut.contains(cand));
        if (l % 2 == 0) {
            const Perm beta = beta_of(p);
            if (is_automorphism(g, beta)) REQUIRE(aut.contains(beta));
        }
    }
}

TEST_CASE("search output is conjugation-consistent under relabeling") {
    const FactorGraph g = build_xb(3, 12, 1, 4, 10);
    const PermGroup aut = full_aut(g);
    std::mt19937 rng(7);
    const int N = g.order();
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<int> pi(N);
        for (int v = 0; v < N; ++v) pi[v] = v;
        std::shuffle(pi.begin(), pi.end(), rng);
        std::vector<std::vector<int>> relabeled(N);
        for (int v = 0; v < N; ++v)
            for (int w : g.neighbors(v)) relabeled[pi[v]].push_back(pi[w]);
        const auto conj = all_automorphisms(relabeled);
        REQUIRE(conj.size() == static_cast<std::size_t>(aut.order()));
        std::set<std::vector<int>> got;
        for (const auto& p : conj) got.insert(p.img);
        for (const auto& a : aut.elements()) {
            std::vector<int> expect(N);
            for (int v = 0; v < N; ++v) expect[pi[v]] = pi[a(v)];
            REQUIRE(got.count(expect) == 1);
        }
    }
}

TEST_CASE("isomorphism search returns certified maps and is symmetric") {
    const FactorGraph g = build_xb1(3);
    const auto self = are_isomorphic(g, g);
    REQUIRE(self.has_value());
    REQUIRE(is_automorphism(g, *self));

    const FactorGraph a = build_xb(3, 8, 5, 4, 7);
    const FactorGraph b = build_htg(4, 6, 0);
    const auto fwd = are_isomorphic(a, b);
    const auto bwd = are_isomorphic(b, a);
    REQUIRE(fwd.has_value());
    REQUIRE(bwd.has_value());
    REQUIRE(oracles::permutation_maps_edges(a.adjacency_lists(), b.adjacency_lists(), fwd->img));
    REQUIRE(oracles::permutation_maps_edges(b.adjacency_lists(), a.adjacency_lists(), bwd->img));
}

TEST_CASE("the two n=8 families are not isomorphic") {
    REQUIRE_FALSE(are_isomorphic(build_xb1(3), build_xb2(3)).has_value());
    REQUIRE_FALSE(are_isomorphic(build_xb1(3), build_xb(3, 8, 5, 4, 3)).has_value());
}

TEST_CASE("vertex limit") {
    const FactorGraph g = build_xb(3, 12, 1, 4, 10);
    REQUIRE_THROWS_AS(full_aut(g, SearchLimits{10}), LimitExceeded);
    REQUIRE_THROWS_AS(are_isomorphic(g, g, SearchLimits{10}), LimitExceeded);
}

TEST_CASE("size mismatch is decided without search") {
    REQUIRE_FALSE(are_isomorphic(build_xb1(3), build_xb1(6)).has_value());
}
