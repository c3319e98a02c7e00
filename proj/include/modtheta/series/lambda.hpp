#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "modtheta/exact/bernoulli.hpp"
#include "modtheta/numeric.hpp"
#include "modtheta/series/config.hpp"
#include "modtheta/series/products.hpp"

namespace modtheta {

/// Smallest allowed distance of a log argument's exponential from the unit circle.
inline constexpr double lambda_guard_margin = 1e-6;

/// Parameters (alpha, beta, theta, w) of the four-variable log series.
///
/// Only finiteness and Re w > 0 are enforced here: the swapped parameter set
/// (1 - beta, alpha, 1/w, -i theta / w) has complex theta and may have alpha
/// outside (0, 1) while its series still converges. Convergence of a concrete
/// evaluation is enforced by the log-argument guard in lambda_series.
struct LambdaParams {
    double alpha = 0.5;
    double beta = 0.5;
    Complex theta{0.0, 0.0};
    Complex w{1.0, 0.0};

    void validate() const {
        if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(theta.real()) ||
            !std::isfinite(theta.imag()) || !std::isfinite(w.real()) || !std::isfinite(w.imag()))
            throw std::invalid_argument("LambdaParams: non-finite parameter");
        if (!(w.real() > 0.0)) throw std::invalid_argument("LambdaParams: Re(w) must be positive");
    }

    /// 0 < alpha < 1, theta real, 0 < beta + theta < 1.
    [[nodiscard]] bool satisfies_strip_hypotheses() const noexcept {
        const double s = beta + theta.real();
        return alpha > 0.0 && alpha < 1.0 && theta.imag() == 0.0 && s > 0.0 && s < 1.0;
    }

    /// (1 - beta, alpha, 1/w, -i theta / w).
    [[nodiscard]] LambdaParams swapped() const { return {1.0 - beta, alpha, -I * theta / w, 1.0 / w}; }
};

namespace detail {

// Half-turn exponents: the two families are e^{pi i t} with
//   t_plus(n)  =  2 (theta + beta) + 2 i (n + alpha) w
//   t_minus(n) = -2 (theta + beta) + 2 i (n + 1 - alpha) w
inline Complex lambda_plus_base(const LambdaParams& p) { return 2.0 * (p.theta + p.beta) + 2.0 * I * p.alpha * p.w; }
inline Complex lambda_minus_base(const LambdaParams& p) {
    return -2.0 * (p.theta + p.beta) + 2.0 * I * (1.0 - p.alpha) * p.w;
}

}  // namespace detail

/// Largest |x| over the n = 0 log arguments 1 - x; every later term is smaller.
inline double lambda_leading_modulus(const LambdaParams& p) {
    const double plus = std::exp(-pi * detail::lambda_plus_base(p).imag());
    const double minus = std::exp(-pi * detail::lambda_minus_base(p).imag());
    return std::max(plus, minus);
}

inline bool lambda_guard_ok(const LambdaParams& p) {
    return lambda_leading_modulus(p) <= 1.0 - lambda_guard_margin;
}

/// Lambda(alpha, beta, w, theta) =
///   -sum_{n>=0} [ log(1 - e^{2 pi i theta} e^{-2 pi ((n + alpha) w - i beta)})
///               + log(1 - e^{-2 pi i theta} e^{-2 pi ((n + 1 - alpha) w + i beta)}) ]
/// with principal logarithms; the leading minus covers both logs.
///
/// Throws GuardViolation when an n = 0 log argument 1 - x has |x| > 1 - 1e-6.
inline SeriesResult lambda_series(const LambdaParams& p, const SeriesConfig& cfg = {}) {
    p.validate();
    cfg.validate();
    const double lead = lambda_leading_modulus(p);
    if (!(lead <= 1.0 - lambda_guard_margin))
        throw GuardViolation("lambda_series: leading log argument too close to the unit circle (|x| = " +
                             std::to_string(lead) + ")");

    const Complex plus = detail::lambda_plus_base(p);
    const Complex minus = detail::lambda_minus_base(p);
    const Complex step = 2.0 * I * p.w;
    const double decay = pi * step.imag();  // = 2 pi Re w
    // |log(1 - x)| <= |x| / (1 - |x|) and |x| shrinks geometrically with ratio e^{-decay}.
    const double log_geometric = -std::log(-std::expm1(-decay)) - std::log1p(-lead);
    const double log_lead = detail::log_add_exp(-pi * plus.imag(), -pi * minus.imag());
    const double log_eps = std::log(cfg.tail_eps);

    Complex sum{0.0, 0.0};
    int n = 0;
    for (;; ++n) {
        if (log_lead - decay * n + log_geometric < log_eps) break;
        if (n >= cfg.max_terms)
            throw ConvergenceError("lambda_series: tail bound not reached within " + std::to_string(cfg.max_terms) +
                                   " terms");
        const double nd = static_cast<double>(n);
        sum += log_one_minus_exp_pi_i(detail::affine_argument(plus, nd, step));
        sum += log_one_minus_exp_pi_i(detail::affine_argument(minus, nd, step));
    }
    return {-sum, n};
}

/// Correction term (pi / w) B2(beta + theta) - pi w B2(alpha) + 2 pi i B1(alpha) B1(beta + theta).
inline Complex g0(const LambdaParams& p) {
    p.validate();
    const Complex s = p.beta + p.theta;
    const Complex a{p.alpha, 0.0};
    return pi / p.w * bernoulli_b2(s) - pi * p.w * bernoulli_b2(a) + 2.0 * pi * I * bernoulli_b1(a) * bernoulli_b1(s);
}

}  // namespace modtheta
