#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <utility>

namespace modtheta {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr Complex I{0.0, 1.0};

namespace detail {

/// x reduced modulo 2 into [-1, 1]. std::remainder is exact in IEEE arithmetic.
inline double reduce_mod2(double x) noexcept { return std::remainder(x, 2.0); }

/// n*x reduced modulo 2, using the exact rounding error of the product so the
/// result stays accurate to one ulp of the reduced value even for large n.
inline double mul_reduce_mod2(double n, double x) noexcept {
    const double p = n * x;
    const double err = std::fma(n, x, -p);
    return reduce_mod2(reduce_mod2(p) + err);
}

/// (cos(pi r), sin(pi r)), exact at multiples of 1/2.
inline std::pair<double, double> cos_sin_pi(double r) noexcept {
    r = reduce_mod2(r);
    const double j = std::nearbyint(2.0 * r);
    const double f = r - 0.5 * j;  // exact, |f| <= 1/4
    const double s = std::sin(pi * f);
    const double c = std::cos(pi * f);
    switch (static_cast<int>(j) & 3) {
        case 0: return {c, s};
        case 1: return {-s, c};
        case 2: return {-c, -s};
        default: return {s, -c};
    }
}

/// e^u - 1 without cancellation near u = 0.
inline Complex expm1(Complex u) noexcept {
    const double x = u.real();
    const double y = u.imag();
    const double half_sin = std::sin(0.5 * y);
    return {std::expm1(x) * std::cos(y) - 2.0 * half_sin * half_sin, std::exp(x) * std::sin(y)};
}

}  // namespace detail

/// e^{pi i t}, with Re t reduced modulo 2 before the trigonometric evaluation.
inline Complex exp_pi_i(Complex t) noexcept {
    const auto [c, s] = detail::cos_sin_pi(t.real());
    const double mag = std::exp(-pi * t.imag());
    return {mag * c, mag * s};
}

/// 1 - e^{pi i t}, accurate also when e^{pi i t} is close to 1.
inline Complex one_minus_exp_pi_i(Complex t) noexcept {
    const double r = detail::reduce_mod2(t.real());
    return -detail::expm1(Complex{-pi * t.imag(), pi * r});
}

/// Principal log(1 - e^{pi i t}). Requires |e^{pi i t}| < 1.
inline Complex log_one_minus_exp_pi_i(Complex t) noexcept {
    const Complex x = exp_pi_i(t);
    if (std::abs(x) < 0.5) {
        // log1p(-x): real part via log1p(|1-x|^2 - 1), imaginary part via atan2.
        const double a = -x.real();
        const double b = -x.imag();
        return {0.5 * std::log1p(2.0 * a + a * a + b * b), std::atan2(b, 1.0 + a)};
    }
    return std::log(one_minus_exp_pi_i(t));
}

/// |lhs - rhs| / (1 + |lhs|), the residual used by every floating-point check.
inline double relative_residual(Complex lhs, Complex rhs) noexcept {
    return std::abs(lhs - rhs) / (1.0 + std::abs(lhs));
}

}  // namespace modtheta
