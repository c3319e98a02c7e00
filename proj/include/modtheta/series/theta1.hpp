#pragma once

#include <cmath>
#include <string>

#include "modtheta/exact/phase.hpp"
#include "modtheta/modular/matrix.hpp"
#include "modtheta/numeric.hpp"
#include "modtheta/series/config.hpp"
#include "modtheta/series/products.hpp"

namespace modtheta {

/// prod_{n>=1} (1 - w^2 q^{2n}) (1 - w^{-2} q^{2n-2}) with w = e^{pi i z}, q = e^{pi i tau}.
inline SeriesResult theta1_core_product(Complex z, const UpperHalfPoint& tau, const SeriesConfig& cfg = {}) {
    return detail::paired_product(2.0 * z, -2.0 * z, 2.0 * tau.value(), cfg);
}

/// Jacobi theta_1 from its product expansion:
/// -i w q^{1/4} prod_{n>=1} (1 - q^{2n}) (1 - w^2 q^{2n}) (1 - w^{-2} q^{2n-2}).
///
/// The n = 1 factor (1 - w^{-2}) is always included, so theta_1(0, tau) is exactly 0.
inline SeriesResult theta1_product(Complex z, const UpperHalfPoint& tau, const SeriesConfig& cfg = {}) {
    const Complex t = tau.value();
    const SeriesResult core = theta1_core_product(z, tau, cfg);
    const SeriesResult q_part = detail::geometric_product(2.0 * t, cfg);
    const Complex value = -I * exp_pi_i(z + 0.25 * t) * q_part.value * core.value;
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
        throw std::overflow_error("theta1_product: value not representable in double precision");
    return {value, std::max(core.terms_used, q_part.terms_used)};
}

/// Jacobi theta_1 from the classical sine series
/// 2 sum_{n>=0} (-1)^n q^{(n+1/2)^2} sin((2n+1) pi z).
///
/// Independent of the product route; used as its oracle. Each term is formed as
/// a difference of two exponentials so that large |Im z| cannot overflow a
/// factor whose product with the Gaussian weight is representable.
inline SeriesResult theta1_series(Complex z, const UpperHalfPoint& tau, const SeriesConfig& cfg = {}) {
    cfg.validate();
    const Complex t = tau.value();
    const double im_tau = t.imag();
    const double abs_im_z = std::abs(z.imag());
    // The term bound exp(-pi Im tau (n+1/2)^2 + pi (2n+1) |Im z|) peaks at n + 1/2 = |Im z| / Im tau.
    const double peak = abs_im_z / im_tau;

    Complex sum{0.0, 0.0};
    int n = 0;
    for (;; ++n) {
        const double half = n + 0.5;
        const double log_bound = std::log(2.0) - pi * im_tau * half * half + pi * (2.0 * half) * abs_im_z;
        if (half > peak + 1.0) {
            const double scale = std::max(1.0, std::abs(sum));
            if (log_bound < std::log(cfg.tail_eps * scale)) break;
        }
        if (n >= cfg.max_terms)
            throw ConvergenceError("theta1_series: term bound not reached within " +
                                   std::to_string(cfg.max_terms) + " terms");
        // q^{(n+1/2)^2} e^{+-(2n+1) pi i z} = e^{pi i (tau (n+1/2)^2 +- (2n+1) z)}
        const double sq = half * half;
        const double odd = 2.0 * n + 1.0;
        const Complex gauss{detail::mul_reduce_mod2(sq, t.real()), sq * im_tau};
        const Complex shift{detail::mul_reduce_mod2(odd, z.real()), odd * z.imag()};
        const Complex up = exp_pi_i(gauss + shift);
        const Complex down = exp_pi_i(gauss - shift);
        // 2 sin(x) = (e^{ix} - e^{-ix}) / i
        const Complex term = (up - down) / I;
        sum += (n % 2 == 0) ? term : -term;
    }
    if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag()))
        throw std::overflow_error("theta1_series: value not representable in double precision");
    return {sum, n};
}

/// theta_1(z, tau + b) from theta_1(z, tau) and the exact phase e^{pi i b / 4}.
inline SeriesResult theta1_translate(Complex z, const UpperHalfPoint& tau, Int b, const SeriesConfig& cfg = {}) {
    SeriesResult r = theta1_product(z, tau, cfg);
    r.value *= ExactPhase(Rational(b, 4)).to_complex();
    return r;
}

/// Principal square root of -i (c tau + d); its real part is positive.
inline Complex principal_sqrt_factor(const ModularMatrix& m, const UpperHalfPoint& tau) {
    if (m.c <= 0) throw std::domain_error("principal_sqrt_factor: matrix must be normalized with c > 0");
    return std::sqrt(v_of(m, tau));
}

}  // namespace modtheta
