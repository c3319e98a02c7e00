#pragma once

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "modtheta/exact/integer.hpp"
#include "modtheta/numeric.hpp"

namespace modtheta {

/// Integer 2x2 matrix (a b; c d) with determinant 1.
struct ModularMatrix {
    Int a = 1;
    Int b = 0;
    Int c = 0;
    Int d = 1;

    constexpr ModularMatrix() noexcept = default;
    constexpr ModularMatrix(Int a_, Int b_, Int c_, Int d_) : a(a_), b(b_), c(c_), d(d_) {
        const Wide det = static_cast<Wide>(a) * d - static_cast<Wide>(b) * c;
        if (det != 1)
            throw std::invalid_argument("ModularMatrix: determinant must be 1, got (" + std::to_string(a) +
                                        "," + std::to_string(b) + ";" + std::to_string(c) + "," +
                                        std::to_string(d) + ")");
    }

    /// c > 0, or c == 0 and d > 0.
    [[nodiscard]] constexpr bool is_normalized() const noexcept { return c > 0 || (c == 0 && d > 0); }

    [[nodiscard]] constexpr ModularMatrix negated() const { return {-a, -b, -c, -d}; }

    [[nodiscard]] std::string str() const {
        return "(" + std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(c) + "," +
               std::to_string(d) + ")";
    }

    friend constexpr ModularMatrix operator*(const ModularMatrix& x, const ModularMatrix& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }

    friend constexpr bool operator==(const ModularMatrix&, const ModularMatrix&) noexcept = default;

    friend std::ostream& operator<<(std::ostream& os, const ModularMatrix& m) { return os << m.str(); }
};

/// A or -A, whichever has c > 0 (or c == 0 and d > 0).
constexpr ModularMatrix normalize(const ModularMatrix& m) { return m.is_normalized() ? m : m.negated(); }

class UpperHalfPoint {
public:
    explicit UpperHalfPoint(Complex tau) : tau_(tau) {
        if (!std::isfinite(tau.real()) || !std::isfinite(tau.imag()))
            throw std::domain_error("UpperHalfPoint: non-finite coordinate");
        if (!(tau.imag() > 0.0)) throw std::domain_error("UpperHalfPoint: Im(tau) must be positive");
    }
    UpperHalfPoint(double re, double im) : UpperHalfPoint(Complex{re, im}) {}

    [[nodiscard]] Complex value() const noexcept { return tau_; }
    [[nodiscard]] double re() const noexcept { return tau_.real(); }
    [[nodiscard]] double im() const noexcept { return tau_.imag(); }

    [[nodiscard]] UpperHalfPoint translated(Int b) const {
        return UpperHalfPoint(tau_ + static_cast<double>(b));
    }

private:
    Complex tau_;
};

inline Complex automorphy_denominator(const ModularMatrix& m, const UpperHalfPoint& tau) noexcept {
    return static_cast<double>(m.c) * tau.value() + static_cast<double>(m.d);
}

/// (a tau + b) / (c tau + d).
inline UpperHalfPoint mobius_apply(const ModularMatrix& m, const UpperHalfPoint& tau) {
    const Complex t = tau.value();
    const Complex num = static_cast<double>(m.a) * t + static_cast<double>(m.b);
    const Complex den = static_cast<double>(m.c) * t + static_cast<double>(m.d);
    return UpperHalfPoint(num / den);
}

/// Change of variables H = a, k = c, h = -d; satisfies H h == -1 (mod k).
struct HHkFrame {
    Int H = 0;
    Int h = 0;
    Int k = 1;

    friend constexpr bool operator==(const HHkFrame&, const HHkFrame&) noexcept = default;
};

inline HHkFrame decompose(const ModularMatrix& m) {
    if (m.c <= 0) throw std::domain_error("decompose: matrix must be normalized with c > 0");
    HHkFrame f{m.a, -m.d, m.c};
    // a d - b c = 1  =>  H h = -a d = -1 - b c == -1 (mod c)
    if (floor_mod(f.H * f.h + 1, f.k) != 0 || gcd(f.h, f.k) != 1 || gcd(f.H, f.k) != 1)
        throw std::logic_error("decompose: congruence H h == -1 (mod k) violated");
    return f;
}

/// v = -i (c tau + d); Re v = c Im tau > 0 when c > 0.
inline Complex v_of(const ModularMatrix& m, const UpperHalfPoint& tau) {
    if (m.c <= 0) throw std::domain_error("v_of: matrix must be normalized with c > 0");
    return -I * automorphy_denominator(m, tau);
}

/// tau = (i v + h) / k.
inline Complex tau_from_frame(const HHkFrame& f, Complex v) noexcept {
    return (I * v + static_cast<double>(f.h)) / static_cast<double>(f.k);
}

/// A tau = (H + i / v) / k.
inline Complex image_from_frame(const HHkFrame& f, Complex v) noexcept {
    return (static_cast<double>(f.H) + I / v) / static_cast<double>(f.k);
}

}  // namespace modtheta
