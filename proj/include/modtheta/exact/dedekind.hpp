#pragma once

#include <stdexcept>

#include "modtheta/exact/integer.hpp"
#include "modtheta/exact/rational.hpp"

namespace modtheta {

/// Dedekind sum s(h, k) = sum_{r=1}^{k-1} (r/k) (hr/k - floor(hr/k) - 1/2).
///
/// Requires k >= 1 and gcd(h, k) == 1. h may be negative; the floor is the
/// true floor, so s(h + k, k) == s(h, k) without pre-reduction. Since
/// gcd(h, k) == 1, hr/k is never an integer inside the range and the sum
/// collapses to the integer expression sum r * (2 (hr mod k) - k) / (2 k^2).
inline Rational dedekind_sum(Int h, Int k) {
    if (k <= 0) throw std::domain_error("dedekind_sum: k must be positive");
    if (gcd(h, k) != 1) throw std::domain_error("dedekind_sum: gcd(h, k) must be 1");
    const Int hm = floor_mod(h, k);
    Wide acc = 0;
    Int residue = 0;  // h*r mod k, updated incrementally
    for (Int r = 1; r < k; ++r) {
        residue += hm;
        if (residue >= k) residue -= k;
        acc += static_cast<Wide>(r) * (2 * residue - k);
    }
    return Rational::from_wide(acc, static_cast<Wide>(2) * k * k);
}

}  // namespace modtheta
