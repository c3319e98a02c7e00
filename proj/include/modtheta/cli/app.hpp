#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "modtheta/modtheta.hpp"
#include "modtheta/io/format.hpp"
#include "modtheta/io/report_io.hpp"

namespace modtheta::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// "RE,IM" or a bare real "RE".
inline Complex parse_complex(const std::string& text) {
    const auto to_double = [&text](const std::string& part) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(part, &used);
        } catch (const std::exception&) {
            throw UsageError("not a number pair RE,IM: '" + text + "'");
        }
        if (used != part.size() || !std::isfinite(v)) throw UsageError("not a number pair RE,IM: '" + text + "'");
        return v;
    };
    const auto comma = text.find(',');
    if (comma == std::string::npos) return {to_double(text), 0.0};
    return {to_double(text.substr(0, comma)), to_double(text.substr(comma + 1))};
}

/// Default tail tolerance, overridable through IK_TAIL_EPS.
inline double default_tail_eps() {
    const char* env = std::getenv("IK_TAIL_EPS");
    if (env == nullptr || *env == '\0') return SeriesConfig{}.tail_eps;
    std::size_t used = 0;
    double v = 0.0;
    const std::string s(env);
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw UsageError("IK_TAIL_EPS is not a number: '" + s + "'");
    }
    if (used != s.size() || !(v > 0.0) || !std::isfinite(v)) throw UsageError("IK_TAIL_EPS must be a positive number");
    return v;
}

struct RunConfig {
    std::optional<double> tail_eps;
    int max_terms = SeriesConfig{}.max_terms;
    std::string format;  // empty: per-command default
    std::string output;
    std::uint64_t seed = SampleSpec{}.seed;
    std::size_t count = SampleSpec{}.count;

    [[nodiscard]] SeriesConfig series() const {
        SeriesConfig cfg;
        cfg.tail_eps = tail_eps ? *tail_eps : default_tail_eps();
        cfg.max_terms = max_terms;
        try {
            cfg.validate();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        return cfg;
    }
};

namespace detail {

inline std::string eval_json(const char* what, Complex value, int terms) {
    nlohmann::ordered_json j;
    j["function"] = what;
    j["value"] = format_complex(value);
    j["terms_used"] = terms;
    return j.dump(2);
}

}  // namespace detail

/// Full command-line front end. Writes results to `out` (or the --output
/// file) and diagnostics to `err`; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Modular theta, eta and Iseki identities: evaluation and verification", "modtheta"};
    app.require_subcommand(1);
    RunConfig rc;
    double tail_eps_flag = 0.0;
    auto* tail_opt = app.add_option("--tail-eps", tail_eps_flag, "series tail tolerance (default 1e-18, or IK_TAIL_EPS)");
    app.add_option("--max-terms", rc.max_terms, "term budget per series")->check(CLI::PositiveNumber);
    app.add_option("--format", rc.format, "output format (verify: json, table: csv, eval: plain text)")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output", rc.output, "output file (default standard output)");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a single function");
    eval->require_subcommand(1);
    eval->fallthrough();

    std::string tau_s, z_s, w_s, method = "product", form = "dedekind";
    double alpha = 0, beta = 0, theta = 0;
    long long h = 0, k = 0, a = 0, b = 0, c = 0, d = 0;

    auto* e_eta = eval->add_subcommand("eta", "Dedekind eta(tau)");
    e_eta->add_option("--tau", tau_s, "RE,IM")->required();
    e_eta->fallthrough();

    auto* e_theta = eval->add_subcommand("theta1", "Jacobi theta_1(z, tau)");
    e_theta->add_option("--z", z_s, "RE,IM")->required();
    e_theta->add_option("--tau", tau_s, "RE,IM")->required();
    e_theta->add_option("--method", method, "product|series")->check(CLI::IsMember({"product", "series"}));
    e_theta->fallthrough();

    auto* e_lambda = eval->add_subcommand("lambda", "Lambda(alpha, beta, theta, w)");
    e_lambda->add_option("--alpha", alpha)->required();
    e_lambda->add_option("--beta", beta)->required();
    e_lambda->add_option("--theta", theta)->required();
    e_lambda->add_option("--w", w_s, "RE,IM")->required();
    e_lambda->fallthrough();

    auto* e_ds = eval->add_subcommand("dedekind-sum", "exact Dedekind sum s(h, k)");
    e_ds->set_help_flag("--help", "print this help message and exit");  // frees -h for --h
    e_ds->add_option("--h", h)->required();
    e_ds->add_option("--k", k)->required();
    e_ds->fallthrough();

    auto* e_char = eval->add_subcommand("eta-char", "eta multiplier eps(A) as an exact phase");
    e_char->add_option("--a", a)->required();
    e_char->add_option("--b", b)->required();
    e_char->add_option("--c", c)->required();
    e_char->add_option("--d", d)->required();
    e_char->add_option("--form", form, "dedekind|rademacher")->check(CLI::IsMember({"dedekind", "rademacher"}));
    e_char->fallthrough();

    // verify
    auto* verify = app.add_subcommand("verify", "run identity checks");
    std::string target;
    verify->add_option("target", target, "iseki|theta1|eta|quasiperiod|eq29 (alias endpoint-shift)|characters|reciprocity|fourier|sawtooth|all")
        ->required();
    verify->add_option("--seed", rc.seed, "sampling seed");
    verify->add_option("--count", rc.count, "draws per randomized family");
    verify->fallthrough();

    // table
    auto* table = app.add_subcommand("table", "exact tables");
    table->require_subcommand(1);
    table->fallthrough();
    long long k_max = 0;
    auto* t_ded = table->add_subcommand("dedekind", "s(h, k) for coprime 0 < h < k <= k-max");
    t_ded->add_option("--k-max", k_max)->required()->check(CLI::PositiveNumber);
    t_ded->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream os;
        const int code = app.exit(e, out, os);
        err << os.str();
        return code == 0 ? exit_ok : exit_usage;
    }

    std::ostringstream body;
    int code = exit_ok;
    try {
        if (*tail_opt) rc.tail_eps = tail_eps_flag;
        const SeriesConfig cfg = rc.series();
        const bool json = rc.format == "json" || (rc.format.empty() && *verify);

        if (*e_eta) {
            const UpperHalfPoint tau(parse_complex(tau_s));
            const SeriesResult r = eta(tau, cfg);
            body << (json ? detail::eval_json("eta", r.value, r.terms_used) : format_complex(r.value)) << '\n';
        } else if (*e_theta) {
            const Complex z = parse_complex(z_s);
            const UpperHalfPoint tau(parse_complex(tau_s));
            const SeriesResult r = method == "series" ? theta1_series(z, tau, cfg) : theta1_product(z, tau, cfg);
            body << (json ? detail::eval_json("theta1", r.value, r.terms_used) : format_complex(r.value)) << '\n';
        } else if (*e_lambda) {
            LambdaParams p{alpha, beta, Complex{theta, 0.0}, parse_complex(w_s)};
            const SeriesResult r = lambda_series(p, cfg);
            body << (json ? detail::eval_json("lambda", r.value, r.terms_used) : format_complex(r.value)) << '\n';
        } else if (*e_ds) {
            const Rational s = dedekind_sum(h, k);
            if (json) {
                nlohmann::ordered_json j;
                j["function"] = "dedekind-sum";
                j["h"] = h;
                j["k"] = k;
                j["value"] = s.str();
                j["approx"] = format_double(s.to_double());
                body << j.dump(2) << '\n';
            } else {
                body << s.str() << '\n';
            }
        } else if (*e_char) {
            const ModularMatrix m(a, b, c, d);
            const ExactPhase e = form == "rademacher" ? eta_character_rademacher(m) : eta_character_dedekind(m);
            if (json) {
                nlohmann::ordered_json j;
                j["function"] = "eta-char";
                j["form"] = form;
                j["t"] = e.t().str();
                j["value"] = format_complex(e.to_complex());
                body << j.dump(2) << '\n';
            } else {
                body << "t=" << e.t().str() << " value=" << format_complex(e.to_complex()) << '\n';
            }
        } else if (*verify) {
            std::set<SuiteTarget> targets;
            if (target == "all") {
                targets.insert(all_targets.begin(), all_targets.end());
            } else if (auto t = parse_target(target)) {
                targets.insert(*t);
            } else {
                throw UsageError("unknown verify target '" + target + "'");
            }
            SampleSpec spec;
            spec.seed = rc.seed;
            spec.count = rc.count;
            const SuiteResult result = run_suite(spec, cfg, targets);
            if (json)
                body << to_json(result).dump(2) << '\n';
            else
                write_csv(body, result);
            code = result.ok() ? exit_ok : exit_failure;
        } else if (*t_ded) {
            if (json) {
                nlohmann::ordered_json rows = nlohmann::ordered_json::array();
                for (Int kk = 2; kk <= k_max; ++kk)
                    for (Int hh = 1; hh < kk; ++hh)
                        if (gcd(hh, kk) == 1)
                            rows.push_back({{"h", hh}, {"k", kk}, {"s", dedekind_sum(hh, kk).str()}});
                body << rows.dump(2) << '\n';
            } else {
                write_dedekind_table(body, k_max);
            }
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const GuardViolation& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }

    if (rc.output.empty()) {
        out << body.str();
    } else {
        std::ofstream file(rc.output, std::ios::binary);
        file << body.str();
        if (!file) {
            err << "error: cannot write " << rc.output << '\n';
            return exit_failure;
        }
    }
    return code;
}

}  // namespace modtheta::cli
