#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "modtheta/verify/checks.hpp"
#include "modtheta/verify/report.hpp"
#include "modtheta/verify/sampling.hpp"

namespace modtheta {

enum class SuiteTarget { iseki, theta1, eta, quasiperiod, endpoint_shift, characters, reciprocity, fourier, sawtooth };

inline constexpr std::array<SuiteTarget, 9> all_targets{
    SuiteTarget::iseki,          SuiteTarget::theta1,     SuiteTarget::eta,
    SuiteTarget::quasiperiod,    SuiteTarget::endpoint_shift, SuiteTarget::characters,
    SuiteTarget::reciprocity,    SuiteTarget::fourier,    SuiteTarget::sawtooth};

inline std::string_view target_name(SuiteTarget t) noexcept {
    switch (t) {
        case SuiteTarget::iseki: return "iseki";
        case SuiteTarget::theta1: return "theta1";
        case SuiteTarget::eta: return "eta";
        case SuiteTarget::quasiperiod: return "quasiperiod";
        case SuiteTarget::endpoint_shift: return "eq29";  // command-line token fixed by the interface
        case SuiteTarget::characters: return "characters";
        case SuiteTarget::reciprocity: return "reciprocity";
        case SuiteTarget::fourier: return "fourier";
        case SuiteTarget::sawtooth: return "sawtooth";
    }
    return "";
}

inline std::optional<SuiteTarget> parse_target(std::string_view name) noexcept {
    if (name == "endpoint-shift") return SuiteTarget::endpoint_shift;
    for (SuiteTarget t : all_targets)
        if (target_name(t) == name) return t;
    return std::nullopt;
}

struct CheckCounts {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
};

struct SuiteResult {
    std::vector<VerificationReport> reports;
    std::map<std::string, CheckCounts> summary;

    [[nodiscard]] std::size_t failures() const noexcept {
        std::size_t n = 0;
        for (const auto& [id, c] : summary) n += c.failed;
        return n;
    }
    [[nodiscard]] bool ok() const noexcept { return failures() == 0; }
};

/// Every normalized matrix with 1 <= c <= c_max, |a| <= a_max, |d| <= d_max
/// (b = (a d - 1) / c must be an integer), ordered by (c, a, d).
inline std::vector<ModularMatrix> matrix_sweep(long c_max, long a_max, long d_max) {
    std::vector<ModularMatrix> out;
    for (Int c = 1; c <= c_max; ++c)
        for (Int a = -a_max; a <= a_max; ++a)
            for (Int d = -d_max; d <= d_max; ++d) {
                const Int num = a * d - 1;
                if (num % c != 0) continue;
                out.emplace_back(a, num / c, c, d);
            }
    return out;
}

namespace detail {

inline LambdaParams draw_lambda(SampleStream& s, const SampleSpec& spec, bool complex_theta) {
    LambdaParams p;
    p.alpha = s.uniform(spec.alpha);
    const double theta = s.uniform(spec.theta);
    const double strip = s.uniform(spec.beta_plus_theta);
    p.beta = strip - theta;
    p.w = Complex{s.uniform(spec.w_re), s.uniform(spec.w_im)};
    p.theta = Complex{theta, complex_theta ? s.uniform(spec.theta_im) : 0.0};
    return p;
}

inline UpperHalfPoint draw_tau(SampleStream& s, Range re, Range im) {
    const double x = s.uniform(re);
    const double y = s.uniform(im);
    return UpperHalfPoint(x, y);
}

inline void run_iseki(const SampleSpec& spec, const SeriesConfig& cfg, std::vector<VerificationReport>& out) {
    VerificationReport instance = check_iseki({0.5, 0.25, 0.0, 1.0}, cfg, tolerance::iseki_instance);
    instance.index = 0;
    out.push_back(std::move(instance));
    for (std::size_t i = 0; i < spec.count; ++i) {
        SampleStream s(spec.seed, "iseki", i);
        VerificationReport r = check_iseki(draw_lambda(s, spec, false), cfg);
        r.index = i + 1;
        out.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < spec.count; ++i) {
        SampleStream s(spec.seed, "iseki_complex_theta", i);
        VerificationReport r = check_iseki_continued(draw_lambda(s, spec, true), cfg);
        r.index = i;
        out.push_back(std::move(r));
    }
}

template <class Check>
void run_matrix_family(const char* id, const SampleSpec& spec, const std::vector<ModularMatrix>& matrices,
                       Check&& check, std::vector<VerificationReport>& out) {
    for (std::size_t mi = 0; mi < matrices.size(); ++mi) {
        const ModularMatrix& m = matrices[mi];
        std::vector<VerificationReport> draws;
        draws.reserve(spec.draws_per_matrix);
        for (std::size_t j = 0; j < spec.draws_per_matrix; ++j) {
            // Same (z, tau) draws for every family so the routes see identical inputs.
            SampleStream s(spec.seed, "modular_sweep", mi * spec.draws_per_matrix + j);
            const UpperHalfPoint tau = draw_tau(s, spec.tau_re, spec.tau_im);
            const Complex z = s.disc(spec.z_radius);
            draws.push_back(check(m, z, tau));
        }
        VerificationReport head;
        head.check_id = id;
        head.index = mi;
        add_matrix(head, m);
        out.push_back(aggregate_draws(std::move(head), draws));
    }
}

/// 100 fixed points: tau over a 5 x 4 lattice of the sampled strip, z over five points of the unit disc.
inline std::vector<std::pair<Complex, UpperHalfPoint>> oracle_grid() {
    std::vector<std::pair<Complex, UpperHalfPoint>> out;
    const std::array<double, 5> re{-2.0, -1.0, 0.0, 1.0, 2.0};
    const std::array<double, 4> im{0.3, 0.55, 1.0, 3.0};
    for (double x : re)
        for (double y : im)
            for (int j = 0; j < 5; ++j) {
                const Complex z = std::polar(0.2 * (j + 1) * 0.95 + 0.05, 2.0 * pi * j / 5.0 + 0.3);
                out.emplace_back(z, UpperHalfPoint(x, y));
            }
    return out;
}

inline void run_theta1(const SampleSpec& spec, const SeriesConfig& cfg, std::vector<VerificationReport>& out) {
    const auto matrices = matrix_sweep(spec.c_max, spec.a_max, spec.d_max);
    run_matrix_family("theta1_transform", spec, matrices,
                      [&cfg](const ModularMatrix& m, Complex z, const UpperHalfPoint& tau) {
                          return check_theta1_transform(m, z, tau, cfg);
                      },
                      out);
    run_matrix_family("theta1_log_form", spec, matrices,
                      [&cfg](const ModularMatrix& m, Complex z, const UpperHalfPoint& tau) {
                          return check_theta1_log_form(m, z, tau, cfg);
                      },
                      out);

    std::size_t idx = 0;
    for (const auto& [z, tau] : oracle_grid()) {
        VerificationReport r = check_theta1_oracle(z, tau, cfg);
        r.index = idx++;
        out.push_back(std::move(r));
    }
    {
        VerificationReport r = check_theta1_oracle(Complex{0.5, 0.0}, UpperHalfPoint(0.0, 1.0), cfg,
                                                   tolerance::theta1_reference);
        r.check_id = "theta1_reference";
        out.push_back(std::move(r));
    }

    const std::array<Int, 5> shifts{0, 1, -3, 8, 24};
    idx = 0;
    for (Int b : shifts) {
        VerificationReport r = check_theta1_translate(Complex{0.5, 0.0}, UpperHalfPoint(0.0, 1.0), b, cfg);
        r.index = idx++;
        out.push_back(std::move(r));
        VerificationReport r2 = check_theta1_translate(Complex{0.3, -0.2}, UpperHalfPoint(0.25, 0.8), b, cfg);
        r2.index = idx++;
        out.push_back(std::move(r2));
    }
}

inline void run_eta(const SampleSpec& spec, const SeriesConfig& cfg, std::vector<VerificationReport>& out) {
    const auto matrices = matrix_sweep(spec.c_max, spec.a_max, spec.d_max);
    run_matrix_family("eta_transform", spec, matrices,
                      [&cfg](const ModularMatrix& m, Complex, const UpperHalfPoint& tau) {
                          return check_eta_transform(m, tau, cfg);
                      },
                      out);
    const std::array<Int, 5> shifts{0, 1, -5, 12, 24};
    std::size_t idx = 0;
    for (Int b : shifts) {
        VerificationReport r = check_eta_translate(UpperHalfPoint(0.0, 1.0), b, cfg);
        r.index = idx++;
        out.push_back(std::move(r));
        VerificationReport r2 = check_eta_translate(UpperHalfPoint(-0.4, 0.7), b, cfg);
        r2.index = idx++;
        out.push_back(std::move(r2));
    }
}

inline void run_quasiperiod(const SampleSpec& spec, const SeriesConfig& cfg, std::vector<VerificationReport>& out) {
    std::vector<std::pair<Complex, UpperHalfPoint>> draws;
    draws.reserve(spec.count);
    for (std::size_t i = 0; i < spec.count; ++i) {
        SampleStream s(spec.seed, "quasiperiod", i);
        const UpperHalfPoint tau = draw_tau(s, spec.tau_re, spec.quasi_tau_im);
        draws.emplace_back(s.disc(spec.z_radius), tau);
    }
    std::size_t idx = 0;
    for (int m = -spec.m_max; m <= spec.m_max; ++m) {
        std::vector<VerificationReport> per_m;
        per_m.reserve(draws.size());
        for (const auto& [u, tau] : draws) per_m.push_back(check_quasiperiod(u, tau, m, cfg));
        VerificationReport head;
        head.check_id = "quasiperiod";
        head.index = idx++;
        head.input("m", m);
        out.push_back(aggregate_draws(std::move(head), per_m));
    }
}

inline void run_endpoint_shift(const SampleSpec& spec, const SeriesConfig& cfg, std::vector<VerificationReport>& out) {
    for (Int c = 1; c <= spec.endpoint_c_max; ++c) {
        std::vector<VerificationReport> per_c;
        // Fixed anchors, then seeded draws with Im tau small enough for e^{4 pi i c^2 tau}.
        if (c == 1) per_c.push_back(check_endpoint_shift(c, UpperHalfPoint(0.0, 1.0), cfg));
        if (c == 2) per_c.push_back(check_endpoint_shift(c, UpperHalfPoint(0.0, 0.5), cfg));
        for (std::size_t j = 0; j < spec.endpoint_draws; ++j) {
            SampleStream s(spec.seed, "endpoint_shift", static_cast<std::uint64_t>(c) * 1000 + j);
            per_c.push_back(check_endpoint_shift(c, draw_tau(s, spec.tau_re, spec.endpoint_tau_im), cfg));
        }
        VerificationReport head;
        head.check_id = "endpoint_shift";
        head.index = static_cast<std::size_t>(c);
        head.input("c", c);
        out.push_back(aggregate_draws(std::move(head), per_c));

        VerificationReport exact = check_endpoint_shift_exact(c);
        exact.index = static_cast<std::size_t>(c);
        out.push_back(std::move(exact));
    }
}

inline void run_characters(const SampleSpec& spec, std::vector<VerificationReport>& out) {
    std::size_t idx = 0;
    for (Int c = 1; c <= spec.character_c_max; ++c)
        for (Int d = -c; d <= c; ++d) {
            if (gcd(c, d) != 1) continue;
            VerificationReport r = check_character_consistency(c, d);
            r.index = idx++;
            out.push_back(std::move(r));
        }
}

inline void run_reciprocity(const SampleSpec& spec, std::vector<VerificationReport>& out) {
    for (Int k = 2; k <= spec.reciprocity_k_max; ++k) {
        VerificationReport r = check_dedekind_reciprocity(k);
        r.index = static_cast<std::size_t>(k);
        out.push_back(std::move(r));
    }
}

inline void run_fourier(std::vector<VerificationReport>& out) {
    constexpr long M = 100'000;
    std::size_t idx = 0;
    const std::array<std::pair<Int, double>, 6> pf{{{-1, 0.5}, {-1, 0.25}, {-2, 0.3}, {1, 0.5}, {1, 0.25}, {2, 0.7}}};
    for (const auto& [m, alpha] : pf) {
        VerificationReport r = check_partial_fraction(m, alpha, Complex{1.0, 0.0}, M);
        r.index = idx++;
        out.push_back(std::move(r));
    }
    {
        VerificationReport r = check_partial_fraction(-1, 0.4, Complex{0.8, 0.5}, M);
        r.index = idx++;
        out.push_back(std::move(r));
    }
    {
        VerificationReport r = check_partial_fraction_slope(-1, 0.25, Complex{1.0, 0.0}, M);
        out.push_back(std::move(r));
    }
    idx = 0;
    const std::array<double, 5> xs{0.5, 0.25, 0.1, 0.3, 0.85};
    for (int n : {1, 2})
        for (double x : xs) {
            VerificationReport r = check_fourier_bernoulli(n, x, M);
            r.index = idx++;
            out.push_back(std::move(r));
        }
    out.push_back(check_fourier_slope(0.25, M));
}

inline void run_sawtooth(const SampleSpec& spec, std::vector<VerificationReport>& out) {
    std::size_t idx = 0;
    for (Int k = 1; k <= spec.sawtooth_k_max; ++k)
        for (Int h = 0; h < k; ++h) {
            if (gcd(h, k) != 1) continue;
            VerificationReport r = check_sawtooth_sums(k, h);
            r.index = idx++;
            out.push_back(std::move(r));
        }
}

}  // namespace detail

/// Runs the requested families. Deterministic in (spec, cfg); reports are
/// ordered by (check_id, index). count == 0 yields an empty run.
inline SuiteResult run_suite(const SampleSpec& spec, const SeriesConfig& cfg,
                             const std::set<SuiteTarget>& targets = {all_targets.begin(), all_targets.end()}) {
    spec.validate();
    cfg.validate();
    SuiteResult result;
    if (spec.count == 0) return result;

    auto& out = result.reports;
    for (SuiteTarget t : targets) {
        switch (t) {
            case SuiteTarget::iseki: detail::run_iseki(spec, cfg, out); break;
            case SuiteTarget::theta1: detail::run_theta1(spec, cfg, out); break;
            case SuiteTarget::eta: detail::run_eta(spec, cfg, out); break;
            case SuiteTarget::quasiperiod: detail::run_quasiperiod(spec, cfg, out); break;
            case SuiteTarget::endpoint_shift: detail::run_endpoint_shift(spec, cfg, out); break;
            case SuiteTarget::characters: detail::run_characters(spec, out); break;
            case SuiteTarget::reciprocity: detail::run_reciprocity(spec, out); break;
            case SuiteTarget::fourier: detail::run_fourier(out); break;
            case SuiteTarget::sawtooth: detail::run_sawtooth(spec, out); break;
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const VerificationReport& x, const VerificationReport& y) {
        if (x.check_id != y.check_id) return x.check_id < y.check_id;
        return x.index < y.index;
    });
    for (const auto& r : out) {
        auto& c = result.summary[r.check_id];
        switch (r.status) {
            case Status::passed: ++c.passed; break;
            case Status::failed: ++c.failed; break;
            case Status::skipped: ++c.skipped; break;
        }
    }
    return result;
}

}  // namespace modtheta
