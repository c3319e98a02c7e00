#pragma once

#include <stdexcept>

#include "modtheta/numeric.hpp"

namespace modtheta {

/// Symmetric partial sum sum_{0 < |m| <= M} e^{2 pi i m x} / m^n for n in {1, 2}, 0 < x < 1.
///
/// Summed from the small tail terms upward.
inline Complex fourier_F_partial(int n, double x, long M) {
    if (n != 1 && n != 2) throw std::invalid_argument("fourier_F_partial: n must be 1 or 2");
    if (!(x > 0.0 && x < 1.0)) throw std::domain_error("fourier_F_partial: x must lie in (0, 1)");
    if (M <= 0) throw std::invalid_argument("fourier_F_partial: M must be positive");
    double acc = 0.0;
    for (long m = M; m >= 1; --m) {
        const double md = static_cast<double>(m);
        const auto [c, s] = detail::cos_sin_pi(detail::mul_reduce_mod2(2.0 * md, x));
        // m and -m pair up: 2 cos / m^2 for n = 2, 2 i sin / m for n = 1.
        acc += n == 2 ? 2.0 * c / (md * md) : 2.0 * s / md;
    }
    return n == 2 ? Complex{acc, 0.0} : Complex{0.0, acc};
}

}  // namespace modtheta
