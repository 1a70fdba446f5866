#ifndef BIALT_SURVEY_HPP
#define BIALT_SURVEY_HPP

// Parameter-space sweeps: one JSON line per admissible tuple, carrying the
// classification, the formula-side verdict, and (in oracle mode) the
// brute-force verdict. The two verdicts agreeing on every line is the machine
// form of the main classification theorem.

#include <atomic>
#include <thread>

#include "bialt/verify.hpp"

namespace bialt {

struct SurveySpec {
    int m_min = 3, m_max = 3;
    int n_min = 8, n_max = 8;
    std::vector<std::string> case_filter;  // empty = all
    bool oracle = false;
    int oracle_limit = 200;
    int jobs = 1;
    std::size_t budget = 200000;  // max tuples enumerated before giving up
};

struct SurveyOutcome {
    std::vector<std::string> lines;       // JSON lines, in (m,n,a,b,l) order
    long long tuples = 0;                  // admissible tuples surveyed
    long long lemma_mismatches = 0;        // formula automorphy vs algebraic condition
    long long theorem_disagreements = 0;   // classification vs oracle verdict
    long long errors = 0;
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline nlohmann::json survey_record(const XbParams& p, bool oracle, int oracle_limit) {
    nlohmann::json rec;
    rec["m"] = p.m;
    rec["n"] = p.n;
    rec["a"] = p.a;
    rec["b"] = p.b;
    rec["l"] = p.l;

    const FactorGraph g = build_xb(p);
    const CaseResult cls = classify_theorem_case(p);
    const bool is_case = cls.kind != TheoremCase::Invalid;
    rec["case"] = to_string(cls.kind);
    rec["detail"] = cls.detail;
    rec["girth"] = girth(g);
    rec["connected"] = is_connected(g);
    rec["ten_cycle_ok"] = (p.a == 1) || ten_cycle_present(g, p.a);

    const Perm gamma = gamma_of(p);
    const bool gamma_aut = is_automorphism(g, gamma);
    rec["gamma_aut"] = gamma_aut;
    rec["gamma_cond"] = gamma_condition(p);
    bool alpha_aut = false;
    if (!(p.l % 2 == 1 && p.m % 2 == 0)) alpha_aut = is_automorphism(g, alpha_of(p));
    rec["alpha_aut"] = alpha_aut;
    rec["alpha_cond"] = alpha_condition(p);
    rec["lemma_agree"] =
        (gamma_aut == gamma_condition(p)) && (alpha_aut == alpha_condition(p));

    bool formula_vt = false;
    if (is_case) {
        auto gens = formula_generators(p);
        bool cert = true;
        for (const auto& perm : gens) cert = cert && is_automorphism(g, perm);
        if (cert) {
            const PermGroup grp = PermGroup::close(gens);
            formula_vt = is_regular(grp) && preserves_partition(grp, g.ring_partition());
        }
    }
    rec["formula_vt"] = formula_vt;
    rec["formula_agree"] = formula_vt == is_case;

    if (oracle && g.order() <= oracle_limit) {
        const PermGroup aut = full_aut(g, SearchLimits{oracle_limit});
        const PermGroup sub = ring_preserving_subgroup(aut, g);
        const bool sub_vt = is_transitive(sub);
        rec["oracle"] = {{"aut_order", aut.order()},
                         {"ring_preserving_order", sub.order()},
                         {"ring_preserving_transitive", sub_vt}};
        rec["theorem_agree"] = sub_vt == is_case;
    }
    return rec;
}

}  // namespace detail

inline std::vector<XbParams> survey_tuples(const SurveySpec& spec) {
    std::vector<XbParams> tuples;
    std::size_t enumerated = 0;
    for (int m = spec.m_min; m <= spec.m_max; ++m)
        for (int n = std::max(8, spec.n_min - spec.n_min % 4); n <= spec.n_max; n += 4) {
            if (n < spec.n_min) continue;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int l = 0; l < n; ++l) {
                        if (++enumerated > spec.budget)
                            throw BudgetExceeded("survey: tuple budget " +
                                                 std::to_string(spec.budget) + " exceeded");
                        const XbParams p = XbParams::reduced(m, n, a, b, l);
                        if (xb_valid(p)) tuples.push_back(p);
                    }
        }
    return tuples;
}

// Lines are produced by a small worker pool but written in spec order.
inline SurveyOutcome run_survey(const SurveySpec& spec) {
    SurveyOutcome out;
    const std::vector<XbParams> tuples = survey_tuples(spec);
    std::vector<nlohmann::json> recs(tuples.size());
    std::atomic<std::size_t> cursor{0};

    auto worker = [&] {
        for (;;) {
            const std::size_t k = cursor.fetch_add(1);
            if (k >= tuples.size()) return;
            try {
                recs[k] = detail::survey_record(tuples[k], spec.oracle, spec.oracle_limit);
            } catch (const std::exception& e) {
                recs[k] = {{"m", tuples[k].m}, {"n", tuples[k].n},     {"a", tuples[k].a},
                           {"b", tuples[k].b}, {"l", tuples[k].l},     {"error", e.what()}};
            }
        }
    };
    const int jobs = std::max(1, spec.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (auto& rec : recs) {
        if (!spec.case_filter.empty() && rec.contains("case")) {
            const std::string c = rec["case"].get<std::string>();
            bool keep = false;
            for (const auto& f : spec.case_filter) keep = keep || f == c;
            if (!keep) continue;
        }
        ++out.tuples;
        if (rec.contains("error")) ++out.errors;
        if (rec.contains("lemma_agree") && !rec["lemma_agree"].get<bool>())
            ++out.lemma_mismatches;
        if (rec.contains("theorem_agree") && !rec["theorem_agree"].get<bool>())
            ++out.theorem_disagreements;
        if (rec.contains("formula_agree") && !rec["formula_agree"].get<bool>())
            ++out.theorem_disagreements;
        out.lines.push_back(rec.dump());
    }
    return out;
}

}  // namespace bialt

#endif
