#pragma once

#include <stdexcept>
#include <string>

#include "modtheta/numeric.hpp"

namespace modtheta {

/// Truncation control shared by every series and product.
struct SeriesConfig {
    /// Stop once the bound on everything not yet summed drops below this.
    double tail_eps = 1e-18;
    /// Hard cap on the number of terms; exceeding it throws ConvergenceError.
    int max_terms = 10'000;

    void validate() const {
        if (!(tail_eps > 0.0)) throw std::invalid_argument("SeriesConfig: tail_eps must be positive");
        if (max_terms <= 0) throw std::invalid_argument("SeriesConfig: max_terms must be positive");
    }
};

struct SeriesResult {
    Complex value;
    int terms_used = 0;
};

/// The tail bound was not reached within max_terms.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parameters sit too close to the boundary of the region where the
/// evaluation is well conditioned; callers treat this as "skip", not "fail".
class GuardViolation : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace modtheta
