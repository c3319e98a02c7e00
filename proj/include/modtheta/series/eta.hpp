#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "modtheta/exact/phase.hpp"
#include "modtheta/modular/matrix.hpp"
#include "modtheta/series/config.hpp"
#include "modtheta/series/products.hpp"

namespace modtheta {

/// Dedekind eta: e^{pi i tau / 12} prod_{n>=1} (1 - e^{2 pi i n tau}).
inline SeriesResult eta(const UpperHalfPoint& tau, const SeriesConfig& cfg = {}) {
    const Complex t = tau.value();
    SeriesResult prod = detail::geometric_product(2.0 * t, cfg);
    prod.value *= exp_pi_i(t / 12.0);
    return prod;
}

/// Dedekind eta from the pentagonal-number series
///   sum_{n in Z} (-1)^n e^{pi i tau (6n+1)^2 / 12}.
/// Gaussian decay makes this the practical route when Im tau is small
/// enough that the product would need more than max_terms factors.
inline SeriesResult eta_series(const UpperHalfPoint& tau, const SeriesConfig& cfg = {}) {
    cfg.validate();
    const Complex t = tau.value();
    const auto term = [&t](double n) {
        const double e = (6.0 * n + 1.0) * (6.0 * n + 1.0) / 12.0;
        // (-1)^n folded into the half-turn argument
        const Complex arg{detail::reduce_mod2(detail::mul_reduce_mod2(e, t.real()) + n), e * t.imag()};
        return exp_pi_i(arg);
    };
    Complex sum = term(0.0);
    int n = 1;
    for (;; ++n) {
        // |terms at +-n| <= 2 e^{-pi Im tau (6n-1)^2 / 12}, and the bound decreases from here on
        const double m = 6.0 * n - 1.0;
        const double log_bound = std::log(2.0) - pi * t.imag() * m * m / 12.0;
        if (log_bound < std::log(cfg.tail_eps * std::max(1.0, std::abs(sum)))) break;
        if (n >= cfg.max_terms)
            throw ConvergenceError("eta_series: term bound not reached within " + std::to_string(cfg.max_terms) +
                                   " terms");
        sum += term(static_cast<double>(n)) + term(-static_cast<double>(n));
    }
    return {sum, n};
}

inline SeriesResult eta_translate(const UpperHalfPoint& tau, Int b, const SeriesConfig& cfg = {}) {
    SeriesResult r = eta(tau, cfg);
    r.value *= ExactPhase(Rational(b, 12)).to_complex();
    return r;
}

}  // namespace modtheta
