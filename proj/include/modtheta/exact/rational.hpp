#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include "modtheta/exact/integer.hpp"

namespace modtheta {

/// Exact fraction num/den, always reduced with den > 0. Zero is 0/1.
///
/// Arithmetic is carried out in 128-bit intermediates and narrowed back to
/// 64 bits; a result that does not fit throws std::overflow_error rather than
/// wrapping.
class Rational {
public:
    constexpr Rational() noexcept = default;
    constexpr Rational(Int n) noexcept : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    constexpr Rational(Int n, Int d) { assign(n, d); }

    [[nodiscard]] constexpr Int num() const noexcept { return num_; }
    [[nodiscard]] constexpr Int den() const noexcept { return den_; }

    [[nodiscard]] constexpr bool is_zero() const noexcept { return num_ == 0; }
    [[nodiscard]] constexpr bool is_integer() const noexcept { return den_ == 1; }

    [[nodiscard]] constexpr double to_double() const noexcept {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    [[nodiscard]] constexpr Int floor() const { return floor_div(num_, den_); }

    /// *this minus floor(*this), in [0, 1).
    [[nodiscard]] constexpr Rational fractional_part() const {
        return Rational::from_wide(static_cast<Wide>(floor_mod(num_, den_)), den_);
    }

    [[nodiscard]] std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    constexpr Rational operator-() const {
        if (num_ == INT64_MIN) throw std::overflow_error("Rational: negation overflow");
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend constexpr Rational operator+(const Rational& x, const Rational& y) {
        using W = Wide;
        return from_wide(W(x.num_) * y.den_ + W(y.num_) * x.den_, W(x.den_) * y.den_);
    }
    friend constexpr Rational operator-(const Rational& x, const Rational& y) {
        using W = Wide;
        return from_wide(W(x.num_) * y.den_ - W(y.num_) * x.den_, W(x.den_) * y.den_);
    }
    friend constexpr Rational operator*(const Rational& x, const Rational& y) {
        using W = Wide;
        return from_wide(W(x.num_) * y.num_, W(x.den_) * y.den_);
    }
    friend constexpr Rational operator/(const Rational& x, const Rational& y) {
        using W = Wide;
        if (y.num_ == 0) throw std::domain_error("Rational: division by zero");
        return from_wide(W(x.num_) * y.den_, W(x.den_) * y.num_);
    }

    constexpr Rational& operator+=(const Rational& o) { return *this = *this + o; }
    constexpr Rational& operator-=(const Rational& o) { return *this = *this - o; }
    constexpr Rational& operator*=(const Rational& o) { return *this = *this * o; }
    constexpr Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend constexpr bool operator==(const Rational&, const Rational&) noexcept = default;

    friend constexpr std::strong_ordering operator<=>(const Rational& x, const Rational& y) noexcept {
        using W = Wide;
        W lhs = W(x.num_) * y.den_;
        W rhs = W(y.num_) * x.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    /// Reduces a 128-bit fraction; throws std::overflow_error if the reduced
    /// form does not fit in 64 bits.
    static constexpr Rational from_wide(Wide n, Wide d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        Wide g = wide_gcd(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n == 0) d = 1;
        if (n > INT64_MAX || n < -INT64_MAX || d > INT64_MAX)
            throw std::overflow_error("Rational: result does not fit in 64 bits");
        Rational r;
        r.num_ = static_cast<Int>(n);
        r.den_ = static_cast<Int>(d);
        return r;
    }

private:
    static constexpr Wide wide_gcd(Wide a, Wide b) noexcept {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            Wide t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    constexpr void assign(Int n, Int d) { *this = from_wide(n, d); }

    Int num_ = 0;
    Int den_ = 1;
};

}  // namespace modtheta
