#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "modtheta/numeric.hpp"
#include "modtheta/series/config.hpp"

namespace modtheta::detail {

/// e^{pi i (base + n step)} needs Re(base + n step) mod 2; keep it accurate for large n.
inline Complex affine_argument(Complex base, double n, Complex step) noexcept {
    const double re = reduce_mod2(reduce_mod2(base.real()) + mul_reduce_mod2(n, step.real()));
    return {re, base.imag() + n * step.imag()};
}

/// log(e^x + e^y) without overflow.
inline double log_add_exp(double x, double y) noexcept {
    const double hi = std::max(x, y);
    const double lo = std::min(x, y);
    if (hi == -std::numeric_limits<double>::infinity()) return hi;
    return hi + std::log1p(std::exp(lo - hi));
}

/// prod_{n>=1} (1 - e^{pi i (plus + n step)}) (1 - e^{pi i (minus + (n-1) step)}).
///
/// Requires Im(step) > 0. Factors are taken while the bound on the remaining
/// tail, sum_{m>=n} |e^{pi i (plus + m step)}| + |e^{pi i (minus + (m-1) step)}|,
/// is at least tail_eps.
inline SeriesResult paired_product(Complex plus, Complex minus, Complex step, const SeriesConfig& cfg) {
    cfg.validate();
    const double decay = pi * step.imag();  // each n multiplies the factor magnitudes by e^{-decay}
    const double log_geometric = -std::log(-std::expm1(-decay));
    const double log_lead = log_add_exp(-pi * plus.imag(), -pi * minus.imag() + decay);
    const double log_eps = std::log(cfg.tail_eps);

    Complex acc{1.0, 0.0};
    int n = 1;
    for (;; ++n) {
        const double log_tail = log_lead - decay * n + log_geometric;
        if (log_tail < log_eps) break;
        if (n > cfg.max_terms)
            throw ConvergenceError("product did not reach tail bound within " + std::to_string(cfg.max_terms) +
                                   " terms");
        const double nd = static_cast<double>(n);
        acc *= one_minus_exp_pi_i(affine_argument(plus, nd, step));
        acc *= one_minus_exp_pi_i(affine_argument(minus, nd - 1.0, step));
    }
    return {acc, n - 1};
}

/// prod_{n>=1} (1 - e^{pi i n step}).
inline SeriesResult geometric_product(Complex step, const SeriesConfig& cfg) {
    cfg.validate();
    const double decay = pi * step.imag();
    const double log_geometric = -std::log(-std::expm1(-decay));
    const double log_eps = std::log(cfg.tail_eps);

    Complex acc{1.0, 0.0};
    int n = 1;
    for (;; ++n) {
        if (-decay * n + log_geometric < log_eps) break;
        if (n > cfg.max_terms)
            throw ConvergenceError("product did not reach tail bound within " + std::to_string(cfg.max_terms) +
                                   " terms");
        acc *= one_minus_exp_pi_i(affine_argument(Complex{}, static_cast<double>(n), step));
    }
    return {acc, n - 1};
}

}  // namespace modtheta::detail
