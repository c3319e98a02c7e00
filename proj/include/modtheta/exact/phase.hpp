#pragma once

#include <ostream>
#include <stdexcept>
#include <string>

#include "modtheta/exact/rational.hpp"
#include "modtheta/numeric.hpp"

namespace modtheta {

/// The unit complex number e^{i pi t}, with t held exactly and reduced into [0, 2).
///
/// Multiplying phases adds their exponents modulo 2, so products and powers of
/// roots of unity compare exactly.
class ExactPhase {
public:
    constexpr ExactPhase() noexcept = default;
    explicit constexpr ExactPhase(const Rational& t) : t_(reduce(t)) {}

    /// i^m, i.e. t = m/2.
    static constexpr ExactPhase i_power(Int m) { return ExactPhase(Rational(m, 2)); }

    /// +1 -> t = 0, -1 -> t = 1.
    static constexpr ExactPhase sign(int s) {
        if (s == 1) return ExactPhase{};
        if (s == -1) return ExactPhase(Rational(1));
        throw std::invalid_argument("ExactPhase::sign: expected +1 or -1");
    }

    [[nodiscard]] constexpr const Rational& t() const noexcept { return t_; }
    [[nodiscard]] constexpr bool is_one() const noexcept { return t_.is_zero(); }

    [[nodiscard]] constexpr ExactPhase pow(Int n) const { return ExactPhase(t_ * Rational(n)); }
    [[nodiscard]] constexpr ExactPhase inverse() const { return ExactPhase(-t_); }

    [[nodiscard]] Complex to_complex() const noexcept {
        // Reduce to [-1, 1) first so the double conversion keeps full accuracy.
        const Rational centered = t_ >= Rational(1) ? t_ - Rational(2) : t_;
        const auto [c, s] = detail::cos_sin_pi(centered.to_double());
        return {c, s};
    }

    [[nodiscard]] std::string str() const { return t_.str(); }

    friend constexpr ExactPhase operator*(const ExactPhase& x, const ExactPhase& y) {
        return ExactPhase(x.t_ + y.t_);
    }
    friend constexpr ExactPhase operator/(const ExactPhase& x, const ExactPhase& y) {
        return ExactPhase(x.t_ - y.t_);
    }
    constexpr ExactPhase& operator*=(const ExactPhase& o) { return *this = *this * o; }

    friend constexpr bool operator==(const ExactPhase&, const ExactPhase&) noexcept = default;

    friend std::ostream& operator<<(std::ostream& os, const ExactPhase& p) {
        return os << "exp(i*pi*" << p.t_ << ")";
    }

private:
    static constexpr Rational reduce(const Rational& t) {
        // t - 2*floor(t/2)
        const Int whole = floor_div(t.num(), 2 * t.den());
        return t - Rational(2 * whole);
    }

    Rational t_{};
};

}  // namespace modtheta
