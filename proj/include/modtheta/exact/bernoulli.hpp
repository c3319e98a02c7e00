#pragma once

namespace modtheta {

// Works for double, std::complex<double> and Rational alike.

template <class T>
constexpr T bernoulli_b1(const T& x) {
    return x - T(1) / T(2);
}

template <class T>
constexpr T bernoulli_b2(const T& x) {
    return x * x - x + T(1) / T(6);
}

}  // namespace modtheta
