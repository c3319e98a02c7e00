#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string_view>

#include "modtheta/numeric.hpp"

namespace modtheta {

struct Range {
    double lo;
    double hi;
};

/// Seed, sample count and parameter domains for the randomized checks.
///
/// Identical specs produce identical draws: every sample is generated from
/// (seed, family, index) alone, with no shared generator state.
struct SampleSpec {
    std::uint64_t seed = 42;
    std::size_t count = 200;

    // Four-variable log series.
    Range alpha{0.05, 0.95};
    Range theta{-0.4, 0.4};
    Range beta_plus_theta{0.05, 0.95};
    Range w_re{0.3, 3.0};
    Range w_im{-2.0, 2.0};
    Range theta_im{-0.05, 0.05};  // continued (complex theta) family only

    // Modular transformation sweeps.
    Range tau_re{-2.0, 2.0};
    Range tau_im{0.3, 3.0};
    double z_radius = 1.0;
    long c_max = 10;
    long a_max = 10;
    long d_max = 10;
    std::size_t draws_per_matrix = 20;
    std::size_t oracle_grid = 100;

    // Lattice shifts.
    int m_max = 8;
    Range quasi_tau_im{0.3, 1.5};
    long endpoint_c_max = 8;
    Range endpoint_tau_im{0.3, 0.6};
    std::size_t endpoint_draws = 5;

    // Exact sweeps.
    long character_c_max = 50;
    long reciprocity_k_max = 300;
    long sawtooth_k_max = 30;

    void validate() const {
        auto ok = [](Range r) { return std::isfinite(r.lo) && std::isfinite(r.hi) && r.lo <= r.hi; };
        if (!ok(alpha) || !ok(theta) || !ok(beta_plus_theta) || !ok(w_re) || !ok(w_im) || !ok(theta_im) ||
            !ok(tau_re) || !ok(tau_im) || !ok(quasi_tau_im) || !ok(endpoint_tau_im))
            throw std::invalid_argument("SampleSpec: invalid range");
        if (!(tau_im.lo > 0.0) || !(quasi_tau_im.lo > 0.0) || !(endpoint_tau_im.lo > 0.0))
            throw std::invalid_argument("SampleSpec: tau ranges must lie in the upper half-plane");
        if (!(w_re.lo > 0.0)) throw std::invalid_argument("SampleSpec: Re(w) range must be positive");
        if (c_max < 1 || endpoint_c_max < 1 || character_c_max < 1 || reciprocity_k_max < 1 || sawtooth_k_max < 1)
            throw std::invalid_argument("SampleSpec: sweep bounds must be positive");
        if (m_max < 0 || m_max > 8) throw std::invalid_argument("SampleSpec: m_max must be in [0, 8]");
        if (endpoint_c_max > 8) throw std::invalid_argument("SampleSpec: endpoint_c_max must be at most 8");
    }
};

/// Independent stream of uniforms for one (seed, family, index) triple.
class SampleStream {
public:
    SampleStream(std::uint64_t seed, std::string_view family, std::uint64_t index) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          fnv1a(family), static_cast<std::uint32_t>(index),
                          static_cast<std::uint32_t>(index >> 32)};
        engine_.seed(seq);
    }

    /// Uniform in [0, 1) with 53 random bits; independent of the standard library's distributions.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(Range r) { return r.lo + (r.hi - r.lo) * unit(); }

    /// Uniform point in the closed disc of the given radius.
    Complex disc(double radius) {
        const double rho = radius * std::sqrt(unit());
        const double angle = 2.0 * pi * unit();
        return std::polar(rho, angle);
    }

private:
    static constexpr std::uint32_t fnv1a(std::string_view s) noexcept {
        std::uint32_t h = 2166136261u;
        for (char ch : s) {
            h ^= static_cast<unsigned char>(ch);
            h *= 16777619u;
        }
        return h;
    }

    std::mt19937_64 engine_;
};

}  // namespace modtheta
