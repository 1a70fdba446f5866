#ifndef BIALT_VERIFY_HPP
#define BIALT_VERIFY_HPP

// The full check battery for one graph: build, classify, construct the
// formula symmetries, close them into a group, certify regularity and ring
// invariance, extract the Cayley structure, and (optionally) cross-check
// everything against the exhaustive automorphism oracle.

#include <json.hpp>
#include <random>

#include "bialt/analysis.hpp"
#include "bialt/io.hpp"

namespace bialt {

inline nlohmann::json to_json(const Perm& p) {
    return {{"label", p.label}, {"degree", p.degree()}, {"images", p.img}};
}

inline nlohmann::json orbit_sizes_json(const PermGroup& grp) {
    nlohmann::json sizes = nlohmann::json::array();
    for (const auto& orbit : grp.orbits()) sizes.push_back(orbit.size());
    return sizes;
}

inline nlohmann::json edge_orbit_table_json(const FactorGraph& g,
                                            const std::vector<EdgeOrbit>& orbits) {
    nlohmann::json table = nlohmann::json::array();
    for (const auto& orbit : orbits) {
        nlohmann::json row;
        row["size"] = orbit.edges.size();
        row["representative"] = {orbit.representative.first, orbit.representative.second};
        row["class"] = to_string(g.edge_class(orbit.representative.first,
                                              orbit.representative.second));
        for (const auto& [len, count] : orbit.cycle_counts)
            row["cycles"][std::to_string(len)] = count;
        table.push_back(std::move(row));
    }
    return table;
}

struct VerifyOptions {
    bool oracle = false;
    int oracle_limit = 512;
    unsigned seed = 1;  // drives only the random relabelings of the oracle consistency check
};

struct VerificationReport {
    nlohmann::json json;
    bool contradiction = false;  // some check contradicts a known claim
    bool limited = false;        // oracle skipped because the graph is too large
};

namespace detail {

inline void add_check(nlohmann::json& checks, const std::string& name, bool pass,
                      const std::string& note = "") {
    nlohmann::json c{{"name", name}, {"pass", pass}};
    if (!note.empty()) c["note"] = note;
    checks.push_back(std::move(c));
}

// The explicit 10-cycle present whenever a != 1:
// (v23, v22, v12, v11, v10, v00, v01, v1a, v1a+1, v1a+2).
inline bool ten_cycle_present(const FactorGraph& g, int a) {
    std::vector<int> walk{g.flat(2, 3), g.flat(2, 2), g.flat(1, 2), g.flat(1, 1), g.flat(1, 0),
                          g.flat(0, 0), g.flat(0, 1), g.flat(1, a), g.flat(1, a + 1),
                          g.flat(1, a + 2)};
    std::set<int> distinct(walk.begin(), walk.end());
    if (distinct.size() != walk.size()) return false;
    for (std::size_t k = 0; k < walk.size(); ++k)
        if (!g.adjacent(walk[k], walk[(k + 1) % walk.size()])) return false;
    return true;
}

inline bool oracle_relabel_consistent(const FactorGraph& g, const PermGroup& aut,
                                      unsigned seed, SearchLimits limits) {
    std::mt19937 rng(seed);
    const int N = g.order();
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<int> pi(N);
        for (int v = 0; v < N; ++v) pi[v] = v;
        std::shuffle(pi.begin(), pi.end(), rng);
        std::vector<std::vector<int>> relabeled(N);
        for (int v = 0; v < N; ++v)
            for (int w : g.neighbors(v)) relabeled[pi[v]].push_back(pi[w]);
        auto conj_aut = all_automorphisms(relabeled, limits);
        if (conj_aut.size() != static_cast<std::size_t>(aut.order())) return false;
        std::set<std::vector<int>> got;
        for (const auto& p : conj_aut) got.insert(p.img);
        for (const auto& a : aut.elements()) {
            std::vector<int> conj(N);  // pi * a * pi^-1
            for (int v = 0; v < N; ++v) conj[pi[v]] = pi[a(v)];
            if (!got.count(conj)) return false;
        }
    }
    return true;
}

}  // namespace detail

// Builds the formula generators appropriate for a classified xb tuple.
// Theorem cases with l odd use {alpha, gamma}; l even adds beta.
inline std::vector<Perm> formula_generators(const XbParams& p) {
    std::vector<Perm> gens{alpha_of(p), gamma_of(p)};
    if (p.l % 2 == 0) gens.push_back(beta_of(p));
    return gens;
}

inline VerificationReport verify_xb_tuple(const XbParams& p_in, const VerifyOptions& opt = {}) {
    VerificationReport rep;
    auto& out = rep.json;
    nlohmann::json checks = nlohmann::json::array();
    const XbParams p = XbParams::reduced(p_in.m, p_in.n, p_in.a, p_in.b, p_in.l);

    out["family"] = "xb";
    out["params"] = {{"m", p.m}, {"n", p.n}, {"a", p.a}, {"b", p.b}, {"l", p.l}};
    const auto violations = validate_xb(p);
    out["valid"] = violations.empty();
    out["violations"] = violations;
    if (!violations.empty()) return rep;

    const FactorGraph g = build_xb(p);
    const CaseResult cls = classify_theorem_case(p);
    out["vertices"] = g.order();
    out["theorem_case"] = to_string(cls.kind);
    out["case_detail"] = cls.detail;
    const bool connected = is_connected(g);
    out["connected"] = connected;
    detail::add_check(checks, "connected", connected);
    const int gir = girth(g);
    out["girth"] = gir;
    detail::add_check(checks, "girth at most 10", gir <= 10);
    const auto qt = classify_quotient_type(g);
    out["quotient_type"] = to_string(qt.kind);
    detail::add_check(checks, "bialternating quotient", qt.kind == QuotientKind::bialternating);
    if (p.a != 1)
        detail::add_check(checks, "explicit 10-cycle (a != 1)", detail::ten_cycle_present(g, p.a));

    // gamma/alpha existence matches the algebraic conditions
    const Perm gamma = gamma_of(p);
    const bool gamma_aut = is_automorphism(g, gamma);
    detail::add_check(checks, "gamma automorphy matches its condition",
                      gamma_aut == gamma_condition(p));
    bool alpha_aut = false;
    std::optional<Perm> alpha;
    if (!(p.l % 2 == 1 && p.m % 2 == 0)) {
        alpha = alpha_of(p);
        alpha_aut = is_automorphism(g, *alpha);
    }
    detail::add_check(checks, "alpha automorphy matches its condition",
                      alpha_aut == alpha_condition(p));
    out["gamma_is_automorphism"] = gamma_aut;
    out["alpha_is_automorphism"] = alpha_aut;

    const bool is_case = cls.kind != TheoremCase::Invalid;
    nlohmann::json fg;
    if (is_case) {
        auto gens = formula_generators(p);
        bool all_cert = true;
        for (const auto& perm : gens) {
            const bool ok = is_automorphism(g, perm);
            all_cert = all_cert && ok;
            fg["generators"].push_back(perm.label);
            fg["certified"].push_back(ok);
            if (ok)
                detail::add_check(checks, perm.label + " commutes with outside neighbors",
                                  commutes_with_outside_neighbor(g, perm));
        }
        detail::add_check(checks, "formula generators certified", all_cert);
        if (all_cert) {
            const PermGroup grp = PermGroup::close(gens);
            fg["order"] = grp.order();
            fg["orbit_sizes"] = orbit_sizes_json(grp);
            fg["regular"] = is_regular(grp);
            fg["preserves_rings"] = preserves_partition(grp, g.ring_partition());
            detail::add_check(checks, "formula group regular", is_regular(grp));
            detail::add_check(checks, "formula group preserves rings",
                              preserves_partition(grp, g.ring_partition()));
            detail::add_check(checks, "rho = alpha*gamma is the 2-step rotation",
                              [&] {
                                  rho_of(g, gens[0], gens[1]);
                                  return true;
                              }());
            const auto cay = cayley_certificate(g, grp);
            fg["cayley_ok"] = cay.ok;
            for (const auto& s : cay.involutions)
                fg["cayley_involutions"].push_back(to_json(s));
            detail::add_check(checks, "Cayley certificate: three involutions", cay.ok, cay.failure);
        }
        out["formula_group"] = fg;
    }

    if (opt.oracle) {
        if (g.order() > opt.oracle_limit) {
            rep.limited = true;
            out["oracle"] = {{"skipped", "vertex limit"}};
        } else {
            SearchLimits lim{opt.oracle_limit};
            const PermGroup aut = full_aut(g, lim);
            nlohmann::json oj;
            oj["aut_order"] = aut.order();
            oj["point_stabilizer"] = point_stabilizer_order(aut, 0);
            oj["rings_invariant"] = rings_aut_invariant(aut, g);
            const PermGroup sub = ring_preserving_subgroup(aut, g);
            oj["ring_preserving_order"] = sub.order();
            oj["orbit_sizes"] = orbit_sizes_json(aut);
            oj["edge_orbits"] = edge_orbit_table_json(g, edge_orbit_report(g, aut));
            const bool sub_vt = is_transitive(sub);
            oj["ring_preserving_transitive"] = sub_vt;
            detail::add_check(checks, "ring-preserving subgroup transitive iff theorem case",
                              sub_vt == is_case);
            if (is_case) {
                detail::add_check(checks, "ring-preserving subgroup regular", is_regular(sub));
                if (fg.contains("order"))
                    detail::add_check(checks, "formula group = ring-preserving subgroup",
                                      fg["order"].get<long long>() == sub.order());
            }
            const auto profile = expected_aut_profile(cls, p);
            if (profile.aut_order)
                detail::add_check(checks, "full group order matches settled value",
                                  aut.order() == *profile.aut_order);
            if (profile.point_stabilizer)
                detail::add_check(checks, "point stabilizer matches settled value",
                                  point_stabilizer_order(aut, 0) == *profile.point_stabilizer);
            if (profile.rings_invariant)
                detail::add_check(checks, "ring invariance matches settled value",
                                  rings_aut_invariant(aut, g) == *profile.rings_invariant);
            if (profile.two_arc_regular)
                detail::add_check(checks, "2-arc-regular", is_s_arc_regular(g, aut, 2));
            detail::add_check(checks, "oracle consistent under relabeling",
                              detail::oracle_relabel_consistent(g, aut, opt.seed, lim));
            out["oracle"] = oj;
        }
    }

    out["checks"] = checks;
    for (const auto& c : checks)
        if (!c["pass"].get<bool>()) rep.contradiction = true;
    return rep;
}

// The n = 8 exceptional families and the two ladder families.
inline VerificationReport verify_special_family(const std::string& family, int m,
                                                const VerifyOptions& opt = {}) {
    VerificationReport rep;
    auto& out = rep.json;
    nlohmann::json checks = nlohmann::json::array();
    out["family"] = family;
    out["params"] = {{"m", m}};

    FactorGraph g = build_family(family, {m});
    out["vertices"] = g.order();
    out["connected"] = is_connected(g);
    detail::add_check(checks, "connected", is_connected(g));
    const int gir = girth(g);
    out["girth"] = gir;
    detail::add_check(checks, "girth at most 10", gir <= 10);
    out["quotient_type"] = to_string(classify_quotient_type(g).kind);
    detail::add_check(checks, "bialternating quotient",
                      classify_quotient_type(g).kind == QuotientKind::bialternating);

    CaseResult cls;
    std::optional<PermGroup> formula_grp;
    if (family == "xb1" || family == "xb2") {
        cls.kind = family == "xb1" ? TheoremCase::N8_Xb1 : TheoremCase::N8_Xb2;
        auto gens = n8_exceptional_gens(family == "xb1" ? N8Kind::xb1 : N8Kind::xb2, m);
        for (const auto& perm : gens) {
            out["formula_group"]["generators"].push_back(perm.label);
            detail::add_check(checks, perm.label + " commutes with outside neighbors",
                              commutes_with_outside_neighbor(g, perm));
        }
        formula_grp = PermGroup::close(gens);
    } else {
        cls.kind = TheoremCase::N4_MobiusOrPrism;
    }
    if (formula_grp) {
        out["formula_group"]["order"] = formula_grp->order();
        detail::add_check(checks, "formula group regular", is_regular(*formula_grp));
        detail::add_check(checks, "formula group preserves rings",
                          preserves_partition(*formula_grp, g.ring_partition()));
        const auto cay = cayley_certificate(g, *formula_grp);
        detail::add_check(checks, "Cayley certificate: three involutions", cay.ok, cay.failure);
    }

    if (opt.oracle) {
        if (g.order() > opt.oracle_limit) {
            rep.limited = true;
            out["oracle"] = {{"skipped", "vertex limit"}};
        } else {
            SearchLimits lim{opt.oracle_limit};
            const PermGroup aut = full_aut(g, lim);
            out["oracle"]["aut_order"] = aut.order();
            out["oracle"]["point_stabilizer"] = point_stabilizer_order(aut, 0);
            out["oracle"]["rings_invariant"] = rings_aut_invariant(aut, g);
            out["oracle"]["edge_orbits"] = edge_orbit_table_json(g, edge_orbit_report(g, aut));
            const XbParams fake = XbParams::reduced(m, g.ring_length(), 0, 0, 0);
            const auto profile = expected_aut_profile(cls, fake);
            if (profile.point_stabilizer)
                detail::add_check(checks, "point stabilizer matches settled value",
                                  point_stabilizer_order(aut, 0) == *profile.point_stabilizer);
            if (profile.rings_invariant)
                detail::add_check(checks, "ring invariance matches settled value",
                                  rings_aut_invariant(aut, g) == *profile.rings_invariant);
            if (profile.aut_order)
                detail::add_check(checks, "full group order matches settled value",
                                  aut.order() == *profile.aut_order);
            const PermGroup sub = ring_preserving_subgroup(aut, g);
            detail::add_check(checks, "ring-preserving subgroup regular", is_regular(sub));
            if (formula_grp)
                detail::add_check(checks, "formula group inside full group",
                                  [&] {
                                      for (const auto& e : formula_grp->elements())
                                          if (!aut.contains(e)) return false;
                                      return true;
                                  }());
            detail::add_check(checks, "oracle consistent under relabeling",
                              detail::oracle_relabel_consistent(g, aut, opt.seed, lim));
        }
    }

    out["checks"] = checks;
    for (const auto& c : checks)
        if (!c["pass"].get<bool>()) rep.contradiction = true;
    return rep;
}

inline VerificationReport verify_family(const std::string& family,
                                        const std::vector<long long>& params,
                                        const VerifyOptions& opt = {}) {
    if (family == "xb") {
        if (params.size() != 5) throw BuildError("verify xb takes m,n,a,b,l");
        return verify_xb_tuple(XbParams::reduced(static_cast<int>(params[0]),
                                                 static_cast<int>(params[1]), params[2], params[3],
                                                 params[4]),
                               opt);
    }
    if (family == "xb1" || family == "xb2" || family == "mobius" || family == "prism") {
        if (params.size() != 1) throw BuildError("verify " + family + " takes m");
        return verify_special_family(family, static_cast<int>(params[0]), opt);
    }
    throw BuildError("verify: unknown family '" + family + "'");
}

}  // namespace bialt

#endif
