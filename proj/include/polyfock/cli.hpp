#pragma once

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "json_io.hpp"
#include "verify.hpp"

namespace polyfock::cli {

/// Exit codes: 0 success, 1 validation error, 2 verification failure.
enum ExitCode : int { exit_ok = 0, exit_validation = 1, exit_verification = 2 };

struct RunConfig {
    Rational m{1};
    int N = 1;
    int s = -1;
    int n = -1;
    int n_max = 10;
    std::vector<Rational> symbol;
    std::string format = "json";
    std::uint64_t seed = 12345;
    bool inject_fault = false;
};

namespace detail {

/// 17 significant digits: enough to round-trip any double.
inline std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
}

inline std::string csv_quote(const std::string& s) {
    std::string r = "\"";
    for (const char ch : s) {
        if (ch == '"') r += '"';
        r += ch;
    }
    r += '"';
    return r;
}

inline std::string scalar_str(const Scalar& s) { return to_json(s).dump(); }

inline std::vector<Rational> parse_symbol_list(const std::string& text) {
    std::vector<Rational> coeffs;
    std::string cur;
    for (const char ch : text) {
        if (ch == ',') {
            coeffs.push_back(parse_rational(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (!cur.empty()) coeffs.push_back(parse_rational(cur));
    if (coeffs.empty()) throw std::invalid_argument("empty symbol coefficient list");
    return coeffs;
}

inline PolyPoly symbol_poly(const std::vector<Rational>& coeffs) {
    PolyPoly g;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        g += PolyPoly::monomial(0, static_cast<int>(k), Scalar(coeffs[k]));
    return g;
}

inline std::string symbol_str(const std::vector<Rational>& coeffs) {
    std::string out;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (k) out += ',';
        out += format_rational(coeffs[k]);
    }
    return out;
}

inline Json config_echo(const RunConfig& cfg) {
    return Json{{"m", format_rational(cfg.m)}, {"N", cfg.N}, {"seed", cfg.seed}};
}

} // namespace detail

inline int run_norms(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.s < 0) {
        err << "norms: --s is required and must be >= 0\n";
        return exit_validation;
    }
    if (cfg.n_max < 0) {
        err << "norms: --n-max must be >= 0\n";
        return exit_validation;
    }
    NormSequence seq;
    try {
        seq = norm_sq_sequence(cfg.s, cfg.N, cfg.n_max);
    } catch (const VerificationError& e) {
        err << e.what() << "\n";
        return exit_verification;
    }
    double sup = 0.0;
    std::vector<double> at_m(seq.values.size());
    for (std::size_t n = 0; n < seq.values.size(); ++n) {
        at_m[n] = seq.values[n].eval(cfg.m);
        if (at_m[n] > sup) sup = at_m[n];
    }
    if (cfg.format == "csv") {
        out << "n,norm_sq_exact,norm_sq_at_m,source,agree\n";
        for (std::size_t n = 0; n < seq.values.size(); ++n)
            out << n << ',' << detail::csv_quote(detail::scalar_str(seq.values[n])) << ','
                << detail::fmt17(at_m[n]) << ",closed,true\n";
    } else {
        Json payload{{"command", "norms"}, {"config", detail::config_echo(cfg)}};
        payload["config"]["s"] = cfg.s;
        payload["config"]["n_max"] = cfg.n_max;
        Json rows = Json::array();
        for (std::size_t n = 0; n < seq.values.size(); ++n)
            rows.push_back(Json{{"n", n},
                                {"norm_sq_exact", to_json(seq.values[n])},
                                {"norm_sq_at_m", at_m[n]},
                                {"source", "closed"},
                                {"agree", true}});
        payload["rows"] = rows;
        payload["observed_sup_at_m"] = sup;
        out << payload.dump(2) << "\n";
    }
    return exit_ok;
}

inline int run_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.symbol.empty()) {
        err << "classify: --symbol is required\n";
        return exit_validation;
    }
    const PolyPoly g = detail::symbol_poly(cfg.symbol);
    const Classification tilde = classify(g, cfg.N, OperatorKind::tilde);
    const Classification middle = classify(g, cfg.N, OperatorKind::middleY);
    if (cfg.format == "csv") {
        out << "operator_kind,symbol_degree,N,verdict,growth_degree\n";
        for (const Classification* c : {&tilde, &middle}) {
            out << kind_name(c->operator_kind) << ',' << c->symbol_degree << ',' << c->N << ','
                << verdict_name(c->verdict) << ',';
            if (c->growth_degree) out << *c->growth_degree;
            out << "\n";
        }
    } else {
        Json payload{{"command", "classify"}, {"config", detail::config_echo(cfg)}};
        payload["config"]["symbol"] = detail::symbol_str(cfg.symbol);
        payload["tilde"] = to_json(tilde);
        payload["middleY"] = to_json(middle);
        out << payload.dump(2) << "\n";
    }
    return exit_ok;
}

inline int run_solve_dbar(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.symbol.empty()) {
        err << "solve-dbar: --symbol (the analytic right-hand side) is required\n";
        return exit_validation;
    }
    const PolyPoly f = detail::symbol_poly(cfg.symbol);
    const SolutionReport rep = solve_min_norm(f, cfg.N);
    const int trials = 100;
    const bool minimal = verify_minimality(rep, cfg.N, trials, cfg.seed);
    const bool ok = rep.residual_ok && rep.orthogonal_ok && minimal;
    if (cfg.format == "csv") {
        out << "key,value\n";
        out << "residual_ok," << (rep.residual_ok ? "true" : "false") << "\n";
        out << "orthogonal_ok," << (rep.orthogonal_ok ? "true" : "false") << "\n";
        out << "minimality_ok," << (minimal ? "true" : "false") << "\n";
        out << "minimality_trials," << trials << "\n";
        out << "norm_sq," << detail::csv_quote(detail::scalar_str(rep.norm_sq)) << "\n";
        out << "norm_sq_at_m," << detail::fmt17(rep.norm_sq.eval(cfg.m)) << "\n";
        out << "u," << detail::csv_quote(to_json(rep.u).dump()) << "\n";
    } else {
        Json payload{{"command", "solve-dbar"}, {"config", detail::config_echo(cfg)}};
        payload["config"]["rhs"] = detail::symbol_str(cfg.symbol);
        payload["report"] = to_json(rep);
        payload["norm_sq_at_m"] = rep.norm_sq.eval(cfg.m);
        payload["minimality_trials"] = trials;
        payload["minimality_ok"] = minimal;
        out << payload.dump(2) << "\n";
    }
    return ok ? exit_ok : exit_verification;
}

inline int run_verify(const RunConfig& cfg, bool n_max_given, std::ostream& out,
                      std::ostream& err) {
    VerifyBounds bounds = VerifyBounds::scaled(n_max_given ? cfg.n_max : -1);
    bounds.seed = cfg.seed;
    bounds.inject_fault = cfg.inject_fault;
    const std::vector<CheckResult> checks = run_verification(bounds);
    long long cases = 0, failures = 0;
    for (const auto& c : checks) {
        cases += c.cases;
        failures += c.failures;
    }
    const bool vacuous = cases == 0;
    if (cfg.format == "csv") {
        out << "check,cases,failures,status\n";
        for (const auto& c : checks)
            out << c.name << ',' << c.cases << ',' << c.failures << ','
                << (c.passed() ? "pass" : "fail") << "\n";
    } else {
        Json payload{{"command", "verify"}, {"config", detail::config_echo(cfg)}};
        Json rows = Json::array();
        for (const auto& c : checks)
            rows.push_back(Json{{"name", c.name},
                                {"cases", c.cases},
                                {"failures", c.failures},
                                {"status", c.passed() ? "pass" : "fail"}});
        payload["checks"] = rows;
        payload["total_cases"] = cases;
        payload["total_failures"] = failures;
        payload["vacuous"] = vacuous;
        payload["passed"] = failures == 0;
        out << payload.dump(2) << "\n";
    }
    if (vacuous) err << "warning: all sweeps empty, pass is vacuous\n";
    return failures == 0 ? exit_ok : exit_verification;
}

inline int run_project(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.s < 0 || cfg.n < 0) {
        err << "project: --s and --n are required and must be >= 0\n";
        return exit_validation;
    }
    const PolyPoly closed = project_monomial_F(cfg.s, cfg.n, cfg.N);
    const PolyPoly generic = project_F_generic(PolyPoly::monomial(cfg.s, cfg.n), cfg.N);
    const bool agree = closed == generic;
    if (cfg.format == "csv") {
        out << "j,k,scalar,coeff_at_m,agree\n";
        for (const auto& [key, c] : closed.terms())
            out << key.first << ',' << key.second << ','
                << detail::csv_quote(detail::scalar_str(c)) << ',' << detail::fmt17(c.eval(cfg.m))
                << ',' << (agree ? "true" : "false") << "\n";
    } else {
        Json payload{{"command", "project"}, {"config", detail::config_echo(cfg)}};
        payload["config"]["s"] = cfg.s;
        payload["config"]["n"] = cfg.n;
        payload["projection"] = to_json(closed);
        Json at_m = Json::array();
        for (const auto& [key, c] : closed.terms())
            at_m.push_back(Json::array({key.first, key.second, c.eval(cfg.m)}));
        payload["projection_at_m"] = at_m;
        payload["agree"] = agree;
        out << payload.dump(2) << "\n";
    }
    if (!agree) {
        err << "project: closed form and basis expansion disagree\n";
        return exit_verification;
    }
    return exit_ok;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations in polyanalytic Fock spaces"};
    app.require_subcommand(1);

    std::string m_str = "1";
    std::string symbol_str;
    std::string format = "json";
    std::string config_file;
    int N = 1, s = -1, n = -1, n_max = 10;
    std::uint64_t seed = 12345;
    bool inject_fault = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--m", m_str, "weight parameter m, as p/q or integer");
        sub->add_option("--N", N, "polyanalytic order N >= 1");
        sub->add_option("--format", format, "output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--seed", seed, "seed for randomized checks");
        sub->add_option("--config", config_file, "JSON config file; explicit flags override it");
        return sub;
    };

    CLI::App* norms = add_common(app.add_subcommand(
        "norms", "norm sequence n -> ||Htilde^N_{zbar^s} e_n||^2, closed form vs Gram path"));
    norms->add_option("--s", s, "symbol exponent s >= 0");
    norms->add_option("--n-max", n_max, "largest n in the table");

    CLI::App* classify_cmd = add_common(
        app.add_subcommand("classify", "boundedness/compactness verdicts for both operators"));
    classify_cmd->add_option("--symbol", symbol_str, "analytic symbol coefficients c0,c1,...");

    CLI::App* solve = add_common(
        app.add_subcommand("solve-dbar", "minimal-norm solution of dbar^N u = f"));
    solve->add_option("--symbol", symbol_str, "right-hand side coefficients c0,c1,...");

    CLI::App* verify_cmd =
        add_common(app.add_subcommand("verify", "run the exact/oracle invariant battery"));
    verify_cmd->add_option("--n-max", n_max, "cap the sweep ranges (0 empties every sweep)");
    verify_cmd->add_flag("--inject-fault", inject_fault, "corrupt one oracle comparison")
        ->group("");

    CLI::App* project = add_common(
        app.add_subcommand("project", "P_{F^{N,m}}(zbar^s z^n), closed form vs basis expansion"));
    project->add_option("--s", s, "zbar exponent");
    project->add_option("--n", n, "z exponent");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_validation;
    }

    CLI::App* active = app.get_subcommands().front();
    bool n_max_given = active->get_option_no_throw("--n-max") != nullptr &&
                       active->count("--n-max") > 0;

    // Config-file values fill every field whose flag was not given.
    if (!config_file.empty()) {
        std::ifstream in(config_file);
        if (!in) {
            err << "cannot open config file: " << config_file << "\n";
            return exit_validation;
        }
        Json file_cfg = Json::parse(in, nullptr, false);
        if (file_cfg.is_discarded() || !file_cfg.is_object()) {
            err << "config file is not a JSON object\n";
            return exit_validation;
        }
        try {
            auto absent = [&](const char* flag) { return active->count(flag) == 0; };
            if (absent("--m") && file_cfg.contains("m")) {
                const Json& v = file_cfg["m"];
                m_str = v.is_string() ? v.get<std::string>()
                                      : std::to_string(v.get<long long>());
            }
            if (absent("--N") && file_cfg.contains("N")) N = file_cfg["N"].get<int>();
            if (active->get_option_no_throw("--s") != nullptr && absent("--s") &&
                file_cfg.contains("s"))
                s = file_cfg["s"].get<int>();
            if (active->get_option_no_throw("--n") != nullptr && absent("--n") &&
                file_cfg.contains("n"))
                n = file_cfg["n"].get<int>();
            if (active->get_option_no_throw("--n-max") != nullptr && absent("--n-max") &&
                file_cfg.contains("n_max")) {
                n_max = file_cfg["n_max"].get<int>();
                n_max_given = true; // a config-supplied bound counts as given
            }
            if (active->get_option_no_throw("--symbol") != nullptr && absent("--symbol") &&
                file_cfg.contains("symbol")) {
                const Json& v = file_cfg["symbol"];
                if (v.is_string()) {
                    symbol_str = v.get<std::string>();
                } else if (v.is_array()) {
                    symbol_str.clear();
                    for (const auto& item : v) {
                        if (!symbol_str.empty()) symbol_str += ',';
                        symbol_str += item.is_string() ? item.get<std::string>()
                                                       : std::to_string(item.get<long long>());
                    }
                }
            }
            if (absent("--format") && file_cfg.contains("format")) {
                format = file_cfg["format"].get<std::string>();
                if (format != "csv" && format != "json") {
                    err << "config: format must be csv or json\n";
                    return exit_validation;
                }
            }
            if (absent("--seed") && file_cfg.contains("seed"))
                seed = file_cfg["seed"].get<std::uint64_t>();
            if (active == verify_cmd && file_cfg.contains("inject_fault") &&
                active->count("--inject-fault") == 0)
                inject_fault = file_cfg["inject_fault"].get<bool>();
        } catch (const Json::exception& e) {
            err << "config file: " << e.what() << "\n";
            return exit_validation;
        }
    }

    RunConfig cfg;
    try {
        cfg.m = parse_rational(m_str);
        if (!symbol_str.empty()) cfg.symbol = detail::parse_symbol_list(symbol_str);
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return exit_validation;
    }
    if (cfg.m <= 0) {
        err << "m must be positive\n";
        return exit_validation;
    }
    if (N < 1) {
        err << "N must be >= 1\n";
        return exit_validation;
    }
    cfg.N = N;
    cfg.s = s;
    cfg.n = n;
    cfg.n_max = n_max;
    cfg.format = format;
    cfg.seed = seed;
    cfg.inject_fault = inject_fault;

    try {
        if (active == norms) return run_norms(cfg, out, err);
        if (active == classify_cmd) return run_classify(cfg, out, err);
        if (active == solve) return run_solve_dbar(cfg, out, err);
        if (active == verify_cmd) return run_verify(cfg, n_max_given, out, err);
        if (active == project) return run_project(cfg, out, err);
    } catch (const VerificationError& e) {
        err << e.what() << "\n";
        return exit_verification;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return exit_validation;
    }
    err << "unknown subcommand\n";
    return exit_validation;
}

} // namespace polyfock::cli
