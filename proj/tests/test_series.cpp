#include <gtest/gtest.h>

#include <random>

#include "modtheta/exact/bernoulli.hpp"
#include "modtheta/series/eta.hpp"
#include "modtheta/series/fourier.hpp"
#include "modtheta/series/lambda.hpp"
#include "modtheta/series/theta1.hpp"

using namespace modtheta;

namespace {

// Reference values computed at 40 digits with an arbitrary-precision library.
constexpr double eta_at_i = 0.76822542232605665900;
constexpr double theta1_half_at_i = 0.91357913815611682141;

double rel(Complex a, Complex b) { return std::abs(a - b) / (1.0 + std::abs(a)); }

// Naive truncated products with std::exp, long past double precision.
Complex eta_naive(Complex tau, int terms = 400) {
    Complex p = std::exp(I * pi * tau / 12.0);
    for (int n = 1; n <= terms; ++n) p *= 1.0 - std::exp(2.0 * pi * I * double(n) * tau);
    return p;
}

Complex theta1_naive(Complex z, Complex tau, int terms = 400) {
    const Complex w = std::exp(pi * I * z);
    const Complex q = std::exp(pi * I * tau);
    Complex p = -I * w * std::exp(pi * I * tau / 4.0);
    Complex q2n = 1.0;
    for (int n = 1; n <= terms; ++n) {
        const Complex prev = q2n;
        q2n *= q * q;
        p *= (1.0 - q2n) * (1.0 - w * w * q2n) * (1.0 - prev / (w * w));
    }
    return p;
}

// Lambda as a single sum over m >= 1 obtained by expanding each log geometrically and summing over n first.
Complex lambda_single_sum(const LambdaParams& p, int terms = 2000) {
    const Complex s = p.theta + p.beta;
    Complex total = 0.0;
    for (int m = 1; m <= terms; ++m) {
        const double md = m;
        const Complex num = std::exp(2.0 * pi * I * md * s - 2.0 * pi * md * p.alpha * p.w) +
                            std::exp(-2.0 * pi * I * md * s - 2.0 * pi * md * (1.0 - p.alpha) * p.w);
        total += num / (md * (1.0 - std::exp(-2.0 * pi * md * p.w)));
    }
    return total;
}

struct Draw {
    Complex z;
    UpperHalfPoint tau;
};

Draw random_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> re(-2.0, 2.0), im(0.3, 3.0), unit(-0.7, 0.7);
    const double x = re(rng), y = im(rng);
    const double zr = unit(rng), zi = unit(rng);
    return {Complex(zr, zi), UpperHalfPoint(x, y)};
}

}  // namespace

TEST(SeriesConfig, RejectsNonpositiveControls) {
    EXPECT_THROW((SeriesConfig{0.0, 10}.validate()), std::invalid_argument);
    EXPECT_THROW((SeriesConfig{1e-18, 0}.validate()), std::invalid_argument);
    EXPECT_EQ(SeriesConfig{}.tail_eps, 1e-18);
    EXPECT_EQ(SeriesConfig{}.max_terms, 10000);
}

TEST(Eta, AtI) {
    const SeriesResult r = eta(UpperHalfPoint(0.0, 1.0));
    EXPECT_NEAR(r.value.real(), eta_at_i, 1e-15);
    EXPECT_NEAR(r.value.imag(), 0.0, 1e-15);
    EXPECT_GT(r.terms_used, 0);
}

TEST(Eta, TranslationRotatesByTwelfthRoot) {
    const Complex shifted = eta(UpperHalfPoint(1.0, 1.0)).value;
    const Complex expected = std::exp(I * pi / 12.0) * eta_at_i;
    EXPECT_LT(rel(shifted, expected), 1e-15);
}

TEST(Eta, PrefactorDominatesHighInTheHalfPlane) {
    const Complex v = eta(UpperHalfPoint(0.0, 10.0)).value;
    EXPECT_NEAR(v.real() / std::exp(-10.0 * pi / 12.0), 1.0, 1e-11);
}

TEST(Eta, MatchesNaiveProduct) {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 200; ++i) {
        const Draw d = random_point(rng);
        EXPECT_LT(rel(eta(d.tau).value, eta_naive(d.tau.value())), 1e-13);
    }
}

TEST(Eta, SeriesRouteAgreesWithProduct) {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 200; ++i) {
        const Draw d = random_point(rng);
        EXPECT_LT(rel(eta(d.tau).value, eta_series(d.tau).value), 1e-13);
    }
}

TEST(Eta, SeriesReachesPointsTooLowForTheProduct) {
    const UpperHalfPoint low(0.37, 5e-4);
    EXPECT_THROW((void)eta(low), ConvergenceError);
    // Inversion as the reference: eta(tau) = eta(-1/tau) / sqrt(-i tau), and -1/tau is high enough for the product.
    const UpperHalfPoint inverted(-1.0 / low.value());
    const Complex expected = eta(inverted).value / std::sqrt(-I * low.value());
    EXPECT_LT(rel(eta_series(low).value, expected), 1e-11);
}

TEST(Eta, NeverZero) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) EXPECT_GT(std::abs(eta(random_point(rng).tau).value), 0.0);
}

TEST(Eta, FailsLoudlyPastTermBudget) {
    SeriesConfig tight;
    tight.max_terms = 5;
    EXPECT_THROW((void)eta(UpperHalfPoint(0.0, 0.3), tight), ConvergenceError);
}

TEST(Theta1, ZeroAtOrigin) {
    EXPECT_EQ(theta1_product(0.0, UpperHalfPoint(0.3, 0.9)).value, Complex(0.0, 0.0));
    EXPECT_EQ(theta1_series(0.0, UpperHalfPoint(0.3, 0.9)).value, Complex(0.0, 0.0));
}

TEST(Theta1, HalfAtI) {
    const UpperHalfPoint i(0.0, 1.0);
    const Complex p = theta1_product(0.5, i).value;
    const Complex s = theta1_series(0.5, i).value;
    EXPECT_NEAR(p.real(), theta1_half_at_i, 1e-15);
    EXPECT_NEAR(s.real(), theta1_half_at_i, 1e-15);
    EXPECT_NEAR(p.imag(), 0.0, 1e-15);
}

TEST(Theta1, ProductMatchesNaiveProductAndSeries) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 300; ++i) {
        const Draw d = random_point(rng);
        const Complex p = theta1_product(d.z, d.tau).value;
        EXPECT_LT(rel(p, theta1_naive(d.z, d.tau.value())), 1e-12);
        EXPECT_LT(rel(p, theta1_series(d.z, d.tau).value), 1e-12);
    }
}

TEST(Theta1, PeriodTwoAntiperiodOne) {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 200; ++i) {
        const Draw d = random_point(rng);
        const Complex base = theta1_product(d.z, d.tau).value;
        EXPECT_LT(rel(theta1_product(d.z + 1.0, d.tau).value, -base), 1e-12);
        EXPECT_LT(rel(theta1_product(d.z + 2.0, d.tau).value, base), 1e-12);
        EXPECT_LT(rel(theta1_series(d.z + 1.0, d.tau).value, -theta1_series(d.z, d.tau).value), 1e-12);
    }
}

TEST(Theta1, OddInZ) {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 100; ++i) {
        const Draw d = random_point(rng);
        EXPECT_LT(rel(theta1_product(-d.z, d.tau).value, -theta1_product(d.z, d.tau).value), 1e-12);
    }
}

TEST(Theta1, ZerosOnTheLattice) {
    for (double im : {0.8, 1.0, 1.7})
        for (int m = -2; m <= 2; ++m)
            for (int n = -1; n <= 1; ++n) {
                const UpperHalfPoint tau(0.25, im);
                const Complex z = double(m) + double(n) * tau.value();
                EXPECT_LE(std::abs(theta1_product(z, tau).value), 1e-10) << m << " " << n;
                EXPECT_LE(std::abs(theta1_series(z, tau).value), 1e-10) << m << " " << n;
            }
}

TEST(Theta1, DerivativeAtOriginIsTwoPiEtaCubed) {
    std::mt19937_64 rng(34);
    for (int i = 0; i < 50; ++i) {
        const UpperHalfPoint tau = random_point(rng).tau;
        const double h = 1e-5;
        const Complex deriv = (theta1_product(h, tau).value - theta1_product(-h, tau).value) / (2.0 * h);
        const Complex e = eta(tau).value;
        EXPECT_LT(rel(deriv, 2.0 * pi * e * e * e), 1e-8);
    }
}

TEST(Theta1, SeriesRejectsRunawayImaginaryPart) {
    EXPECT_THROW((void)theta1_series(Complex(0.1, 5000.0), UpperHalfPoint(0.0, 0.1)), ConvergenceError);
}

TEST(Theta1, Translation) {
    const UpperHalfPoint i(0.0, 1.0);
    EXPECT_EQ(theta1_translate(0.5, i, 0).value, theta1_product(0.5, i).value);
    EXPECT_LT(rel(theta1_translate(0.5, i, 1).value, theta1_product(0.5, i.translated(1)).value), 1e-12);
    EXPECT_LT(rel(eta_translate(i, 24).value, eta(i.translated(24)).value), 1e-12);
    EXPECT_EQ(eta_translate(i, 24).value, eta(i).value);
}

TEST(Lambda, VanishesForLargeW) {
    const SeriesResult r = lambda_series({0.5, 0.25, 0.0, 20.0});
    EXPECT_LT(std::abs(r.value), 1e-25);
}

TEST(Lambda, HalfQuarterInstance) {
    const Complex lhs = lambda_series({0.5, 0.25, 0.0, 1.0}).value;
    const Complex rhs = lambda_series({0.75, 0.5, 0.0, 1.0}).value + pi / 16.0;
    EXPECT_LT(std::abs(lhs - rhs), 1e-10);
}

TEST(Lambda, RealForSymmetricParameters) {
    for (double w : {0.3, 0.7, 1.0, 2.5}) {
        const Complex v = lambda_series({0.5, 0.5, 0.0, w}).value;
        EXPECT_LT(std::abs(v.imag()), 1e-15 * (1.0 + std::abs(v)));
    }
}

TEST(Lambda, EqualsSingleSumExpansion) {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> a(0.05, 0.95), t(-0.4, 0.4), wr(0.3, 3.0), wi(-2.0, 2.0);
    int compared = 0;
    for (int i = 0; i < 200; ++i) {
        LambdaParams p;
        p.alpha = a(rng);
        const double theta = t(rng);
        p.beta = a(rng) - theta;
        p.theta = theta;
        const double x = wr(rng), y = wi(rng);
        p.w = Complex(x, y);
        if (!lambda_guard_ok(p)) continue;
        ++compared;
        EXPECT_LT(std::abs(lambda_series(p).value - lambda_single_sum(p)), 1e-12);
    }
    EXPECT_GT(compared, 150);
}

TEST(Lambda, GuardRejectsNearBoundary) {
    EXPECT_THROW((void)lambda_series({1e-7, 0.5, 0.0, 1.0}), GuardViolation);
    EXPECT_THROW((void)lambda_series({0.5, 0.5, 0.0, Complex(-1.0, 0.0)}), std::invalid_argument);
}

TEST(G0, Examples) {
    EXPECT_LT(std::abs(g0({0.5, 0.5, 0.0, 1.0})), 1e-15);
    EXPECT_LT(std::abs(g0({0.5, 0.25, 0.0, 1.0}) - pi / 16.0), 1e-15);
    // B2(1/4) = -1/48 and B1(1/4) = -1/4 give pi/32 + pi i/8.
    EXPECT_LT(std::abs(g0({0.25, 0.25, 0.0, 2.0}) - Complex(0.098174770424681035, 0.39269908169872414)), 1e-15);
}

TEST(G0, AntisymmetricUnderSwap) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(0.05, 0.95), t(-0.4, 0.4), wr(0.3, 3.0), wi(-2.0, 2.0);
    for (int i = 0; i < 300; ++i) {
        const double theta = t(rng);
        const double x = wr(rng), y = wi(rng);
        const double ti = 0.05 * t(rng);
        const LambdaParams p{u(rng), u(rng) - theta, Complex(theta, ti), Complex(x, y)};
        EXPECT_LT(std::abs(g0(p) + g0(p.swapped())), 1e-12 * (1.0 + std::abs(g0(p))));
    }
}

TEST(Lambda, DoubleSwapPreservesValue) {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(0.1, 0.9), wr(0.5, 2.0), wi(-1.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double x = wr(rng), y = wi(rng);
        const LambdaParams p{u(rng), u(rng), 0.0, Complex(x, y)};
        const LambdaParams twice = p.swapped().swapped();
        EXPECT_NEAR(twice.alpha, 1.0 - p.alpha, 1e-15);
        EXPECT_NEAR(twice.beta, 1.0 - p.beta, 1e-15);
        EXPECT_LT(std::abs(twice.w - p.w), 1e-14);
        EXPECT_LT(std::abs(lambda_series(twice).value - lambda_series(p).value), 1e-12);
    }
}

TEST(Fourier, SecondOrderAtHalf) {
    const double expected = -pi * pi / 6.0;
    for (long M : {1000L, 10000L, 100000L}) {
        const Complex f = fourier_F_partial(2, 0.5, M);
        EXPECT_EQ(f.imag(), 0.0);
        EXPECT_LT(std::abs(f.real() - expected), 2.5 / M);
    }
}

TEST(Fourier, FirstOrderCancelsAtHalf) {
    for (long M : {1L, 2L, 17L, 1000L}) EXPECT_EQ(fourier_F_partial(1, 0.5, M), Complex(0.0, 0.0));
}

TEST(Fourier, FirstOrderAtQuarter) {
    const Complex f = fourier_F_partial(1, 0.25, 100000);
    EXPECT_LT(std::abs(f - Complex(0.0, pi / 2.0)), 1e-3);
    EXPECT_LT(std::abs(f + 2.0 * pi * I * bernoulli_b1(0.25)), 1e-3);
}

TEST(Fourier, RejectsBadArguments) {
    EXPECT_THROW((void)fourier_F_partial(3, 0.5, 10), std::invalid_argument);
    EXPECT_THROW((void)fourier_F_partial(1, 1.0, 10), std::domain_error);
    EXPECT_THROW((void)fourier_F_partial(1, 0.5, 0), std::invalid_argument);
}
