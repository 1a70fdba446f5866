// Command-line front end: construct and export graphs, verify single tuples
// against the classification and the brute-force oracle, sweep parameter
// ranges, and summarize sweep output.
//
// Exit codes: 0 success, 2 usage or parameter error, 3 a check contradicts a
// settled claim, 4 resource limit exceeded.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "bialt/bialt.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_finding = 3;
constexpr int exit_limit = 4;

std::vector<long long> parse_tuple(const std::string& text) {
    std::vector<long long> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) out.push_back(std::stoll(item));
    return out;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file " + path);
    os << content;
}

bool parse_range(const std::string& text, int& lo, int& hi) {
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, colon));
            hi = std::stoi(text.substr(colon + 1));
        }
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

int run_construct(const std::string& family, const std::string& params,
                  const std::string& format, const std::string& out_path) {
    try {
        const bialt::FactorGraph g = bialt::build_family(family, parse_tuple(params));
        write_output(out_path, bialt::export_graph(g, format));
        return exit_ok;
    } catch (const bialt::BuildError& e) {
        std::cerr << "error: " << e.what() << "\n";
        for (const auto& v : e.violations) std::cerr << "  - " << v << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

int run_verify(const std::string& family, const std::string& params, const std::string& batch,
               const bialt::VerifyOptions& opt, const std::string& out_path) {
    try {
        std::string payload;
        bool contradiction = false, limited = false;
        if (!batch.empty()) {
            std::ifstream is(batch);
            if (!is) throw std::runtime_error("cannot open batch file " + batch);
            nlohmann::json tuples = nlohmann::json::parse(is);
            for (const auto& t : tuples) {
                std::vector<long long> ps = t.get<std::vector<long long>>();
                auto rep = bialt::verify_family(family, ps, opt);
                payload += rep.json.dump() + "\n";
                contradiction = contradiction || rep.contradiction;
                limited = limited || rep.limited;
            }
        } else {
            auto rep = bialt::verify_family(family, parse_tuple(params), opt);
            payload = rep.json.dump(2) + "\n";
            contradiction = rep.contradiction;
            limited = rep.limited;
        }
        write_output(out_path, payload);
        if (contradiction) return exit_finding;
        if (limited) return exit_limit;
        return exit_ok;
    } catch (const bialt::BuildError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const bialt::LimitExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_limit;
    }
}

int run_survey(const std::string& m_range, const std::string& n_range,
               const std::string& cases, bialt::SurveySpec spec, const std::string& out_path) {
    if (!parse_range(m_range, spec.m_min, spec.m_max) ||
        !parse_range(n_range, spec.n_min, spec.n_max)) {
        std::cerr << "error: ranges must be N or LO:HI\n";
        return exit_usage;
    }
    if (!cases.empty() && cases != "all") {
        std::istringstream is(cases);
        std::string item;
        while (std::getline(is, item, ',')) spec.case_filter.push_back(item);
    }
    try {
        const bialt::SurveyOutcome out = bialt::run_survey(spec);
        std::string payload;
        for (const auto& line : out.lines) payload += line + "\n";
        write_output(out_path, payload);
        std::cerr << "surveyed " << out.tuples << " tuples, " << out.lemma_mismatches
                  << " lemma mismatches, " << out.theorem_disagreements << " disagreements, "
                  << out.errors << " errors\n";
        if (out.lemma_mismatches > 0 || out.theorem_disagreements > 0 || out.errors > 0)
            return exit_finding;
        return exit_ok;
    } catch (const bialt::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_limit;
    } catch (const bialt::LimitExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_limit;
    }
}

int run_report(const std::string& path) {
    std::ifstream is(path);
    if (!is) {
        std::cerr << "error: cannot open " << path << "\n";
        return exit_usage;
    }
    std::map<std::string, long long> by_case;
    long long lines = 0, lemma_bad = 0, theorem_bad = 0, errors = 0;
    int max_girth = 0;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        ++lines;
        nlohmann::json rec = nlohmann::json::parse(line);
        if (rec.contains("error")) {
            ++errors;
            continue;
        }
        ++by_case[rec.value("case", "?")];
        if (rec.contains("girth")) max_girth = std::max(max_girth, rec["girth"].get<int>());
        if (rec.contains("lemma_agree") && !rec["lemma_agree"].get<bool>()) ++lemma_bad;
        if (rec.contains("theorem_agree") && !rec["theorem_agree"].get<bool>()) ++theorem_bad;
        if (rec.contains("formula_agree") && !rec["formula_agree"].get<bool>()) ++theorem_bad;
    }
    std::cout << "lines: " << lines << "\n";
    for (const auto& [c, k] : by_case) std::cout << "  " << c << ": " << k << "\n";
    std::cout << "max girth: " << max_girth << "\n";
    std::cout << "lemma mismatches: " << lemma_bad << "\n";
    std::cout << "theorem disagreements: " << theorem_bad << "\n";
    std::cout << "errors: " << errors << "\n";
    return (lemma_bad || theorem_bad || errors) ? exit_finding : exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cubic ring-factor graph families: construction and verification"};
    app.set_config("--config", "", "read options from a TOML-style config file");
    app.require_subcommand(1);

    std::string family, params, format = "edgejson", out_path, batch;
    bialt::VerifyOptions vopt;
    bialt::SurveySpec spec;
    std::string m_range = "3:3", n_range = "8:8", cases = "all", survey_out;

    auto* construct = app.add_subcommand("construct", "build a graph and export it");
    construct->add_option("family", family, "xb | xb1 | xb2 | mobius | prism | htg")->required();
    construct->add_option("params", params, "comma-separated parameters, e.g. 5,12,1,8,7")
        ->required();
    construct->add_option("--format", format, "graph6 | dot | edgejson");
    construct->add_option("--out", out_path, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "run the full check battery on one tuple");
    verify->add_option("family", family, "xb | xb1 | xb2 | mobius | prism")->required();
    verify->add_option("params", params, "comma-separated parameters");
    verify->add_option("--batch", batch, "JSON file with an array of parameter tuples");
    verify->add_flag("--oracle", vopt.oracle, "cross-check against the exhaustive search");
    verify->add_option("--oracle-limit", vopt.oracle_limit, "oracle vertex limit")
        ->envname("BIALT_ORACLE_LIMIT");
    verify->add_option("--seed", vopt.seed, "seed for the oracle relabeling checks");
    verify->add_option("--out", out_path, "output file (default stdout)");

    auto* survey = app.add_subcommand("survey", "sweep a parameter range, one JSON line each");
    survey->add_option("--m", m_range, "ring-count range LO:HI");
    survey->add_option("--n", n_range, "ring-length range LO:HI (multiples of 4)");
    survey->add_option("--case", cases, "comma-separated case filter, or 'all'");
    survey->add_flag("--oracle", spec.oracle, "add the brute-force verdict per tuple");
    survey->add_option("--oracle-limit", spec.oracle_limit, "skip the oracle above this order")
        ->envname("BIALT_ORACLE_LIMIT");
    survey->add_option("--jobs", spec.jobs, "worker threads");
    survey->add_option("--budget", spec.budget, "max tuples enumerated");
    survey->add_option("--out", survey_out, "output file (default stdout)");

    std::string report_path;
    auto* report = app.add_subcommand("report", "summarize a survey output file");
    report->add_option("file", report_path, "survey JSON-lines file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) return run_construct(family, params, format, out_path);
        if (verify->parsed()) {
            if (params.empty() && batch.empty()) {
                std::cerr << "error: verify needs params or --batch\n";
                return exit_usage;
            }
            return run_verify(family, params, batch, vopt, out_path);
        }
        if (survey->parsed()) return run_survey(m_range, n_range, cases, spec, survey_out);
        if (report->parsed()) return run_report(report_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_ok;
}
