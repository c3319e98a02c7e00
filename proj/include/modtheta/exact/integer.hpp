#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace modtheta {

using Int = std::int64_t;
/// Wide intermediate for products of two Int values.
__extension__ using Wide = __int128;

/// Nonnegative greatest common divisor; gcd(0, 0) == 0.
constexpr Int gcd(Int a, Int b) noexcept {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Floor division (rounds toward negative infinity). Requires b != 0.
constexpr Int floor_div(Int a, Int b) {
    if (b == 0) throw std::domain_error("floor_div: division by zero");
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

/// Least nonnegative residue of a modulo m (m > 0).
constexpr Int floor_mod(Int a, Int m) {
    if (m <= 0) throw std::domain_error("floor_mod: modulus must be positive");
    Int r = a % m;
    return r < 0 ? r + m : r;
}

/// Jacobi symbol (a/n) for odd n >= 1. Conventions: (a/1) = 1, (0/n) = 0 for n > 1.
constexpr int jacobi_symbol(Int a, Int n) {
    if (n <= 0 || n % 2 == 0)
        throw std::invalid_argument("jacobi_symbol: n must be a positive odd integer");
    a = floor_mod(a, n);
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            Int r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

/// Extended Euclid: returns (g, x, y) with a*x + b*y == g == gcd(a, b).
struct BezoutResult {
    Int g;
    Int x;
    Int y;
};

constexpr BezoutResult extended_gcd(Int a, Int b) noexcept {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

}  // namespace modtheta
