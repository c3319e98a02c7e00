#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "modtheta/exact/bernoulli.hpp"
#include "modtheta/exact/dedekind.hpp"
#include "modtheta/exact/eta_character.hpp"
#include "modtheta/exact/integer.hpp"
#include "modtheta/exact/phase.hpp"
#include "modtheta/exact/rational.hpp"

using namespace modtheta;

namespace {

// Euler's criterion per prime factor; an oracle sharing no code with the reciprocity-based implementation.
int legendre_by_squares(Int a, Int p) {
    const Int r = floor_mod(a, p);
    if (r == 0) return 0;
    for (Int x = 1; x < p; ++x)
        if ((x * x) % p == r) return 1;
    return -1;
}

int jacobi_by_factoring(Int a, Int n) {
    int result = 1;
    Int m = n;
    for (Int p = 3; p <= m; p += 2) {
        while (m % p == 0) {
            result *= legendre_by_squares(a, p);
            m /= p;
        }
    }
    return result;
}

// s(h,k) straight from the sawtooth definition, in Rational arithmetic.
Rational dedekind_by_definition(Int h, Int k) {
    Rational s;
    for (Int r = 1; r < k; ++r) {
        const Rational x(h * r, k);
        s += Rational(r, k) * (x - Rational(x.floor()) - Rational(1, 2));
    }
    return s;
}

}  // namespace

TEST(Gcd, Examples) {
    EXPECT_EQ(gcd(12, 18), 6);
    EXPECT_EQ(gcd(0, 7), 7);
    EXPECT_EQ(gcd(-4, 6), 2);
    EXPECT_EQ(gcd(0, 0), 0);
    EXPECT_EQ(gcd(-9, -6), 3);
}

TEST(FloorDiv, RoundsTowardNegativeInfinity) {
    EXPECT_EQ(floor_div(7, 2), 3);
    EXPECT_EQ(floor_div(-7, 2), -4);
    EXPECT_EQ(floor_div(7, -2), -4);
    EXPECT_EQ(floor_mod(-7, 3), 2);
    EXPECT_EQ(floor_mod(6, 3), 0);
}

TEST(ExtendedGcd, BezoutIdentityHolds) {
    for (Int a = -30; a <= 30; ++a)
        for (Int b = -30; b <= 30; ++b) {
            const BezoutResult r = extended_gcd(a, b);
            EXPECT_EQ(r.g, gcd(a, b));
            EXPECT_EQ(a * r.x + b * r.y, r.g) << a << " " << b;
        }
}

TEST(Jacobi, Examples) {
    EXPECT_EQ(jacobi_symbol(2, 3), -1);
    EXPECT_EQ(jacobi_symbol(1, 1), 1);
    EXPECT_EQ(jacobi_symbol(3, 9), 0);
    EXPECT_EQ(jacobi_symbol(0, 1), 1);
    EXPECT_EQ(jacobi_symbol(0, 5), 0);
    EXPECT_EQ(jacobi_symbol(-1, 7), -1);
}

TEST(Jacobi, RejectsEvenOrNonpositiveModulus) {
    EXPECT_THROW((void)jacobi_symbol(1, 4), std::invalid_argument);
    EXPECT_THROW((void)jacobi_symbol(1, 0), std::invalid_argument);
    EXPECT_THROW((void)jacobi_symbol(1, -3), std::invalid_argument);
}

TEST(Jacobi, MatchesFactorizationOracle) {
    for (Int n = 1; n <= 99; n += 2)
        for (Int a = -60; a <= 60; ++a) EXPECT_EQ(jacobi_symbol(a, n), jacobi_by_factoring(a, n)) << a << "/" << n;
}

TEST(Jacobi, MultiplicativeInNumerator) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Int> val(-1000, 1000);
    std::uniform_int_distribution<Int> mod(0, 400);
    for (int i = 0; i < 2000; ++i) {
        const Int a = val(rng), b = val(rng), n = 2 * mod(rng) + 1;
        EXPECT_EQ(jacobi_symbol(a, n) * jacobi_symbol(b, n), jacobi_symbol(a * b, n));
    }
}

TEST(Rational, ReducedWithPositiveDenominator) {
    const Rational r(6, -8);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 4);
    EXPECT_EQ(Rational(0, -5).den(), 1);
    EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, ArithmeticAndOrdering) {
    EXPECT_EQ(Rational(1, 6) + Rational(1, 3), Rational(1, 2));
    EXPECT_EQ(Rational(1, 6) - Rational(1, 3), Rational(-1, 6));
    EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
    EXPECT_EQ(Rational(2, 3) / Rational(-4, 9), Rational(-3, 2));
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
    EXPECT_LT(Rational(-1, 3), Rational(-1, 4));
    EXPECT_EQ(Rational(-7, 2).floor(), -4);
    EXPECT_EQ(Rational(-7, 2).fractional_part(), Rational(1, 2));
    EXPECT_EQ(Rational(1, 18).str(), "1/18");
    EXPECT_EQ(Rational(-4, 2).str(), "-2");
    std::ostringstream os;
    os << Rational(-1, 18);
    EXPECT_EQ(os.str(), "-1/18");
}

TEST(Rational, OverflowIsReported) {
    const Rational big(std::numeric_limits<Int>::max() / 2 + 1);
    EXPECT_THROW(big * Rational(4), std::overflow_error);
}

TEST(Bernoulli, Examples) {
    EXPECT_EQ(bernoulli_b1(Rational(1, 2)), Rational(0));
    EXPECT_EQ(bernoulli_b2(Rational(1, 2)), Rational(-1, 12));
    EXPECT_EQ(bernoulli_b2(Rational(1, 4)), Rational(-1, 48));
    EXPECT_DOUBLE_EQ(bernoulli_b2(0.25), -1.0 / 48.0);
}

TEST(Bernoulli, ReflectionSymmetries) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 500; ++i) {
        const double x = u(rng);
        EXPECT_NEAR(bernoulli_b2(x) - bernoulli_b2(1.0 - x), 0.0, 1e-12);
        EXPECT_NEAR(bernoulli_b1(x) + bernoulli_b1(1.0 - x), 0.0, 1e-12);
    }
    for (Int n = -20; n <= 20; ++n) {
        const Rational x(n, 7);
        EXPECT_EQ(bernoulli_b2(x), bernoulli_b2(Rational(1) - x));
        EXPECT_EQ(bernoulli_b1(x), -bernoulli_b1(Rational(1) - x));
    }
}

TEST(DedekindSum, Examples) {
    EXPECT_EQ(dedekind_sum(0, 1), Rational(0));
    EXPECT_EQ(dedekind_sum(1, 3), Rational(1, 18));
    EXPECT_EQ(dedekind_sum(2, 3), Rational(-1, 18));
    EXPECT_EQ(dedekind_sum(3, 5), Rational(0));
}

TEST(DedekindSum, RejectsBadArguments) {
    EXPECT_THROW((void)dedekind_sum(2, 4), std::domain_error);
    EXPECT_THROW((void)dedekind_sum(1, 0), std::domain_error);
    EXPECT_THROW((void)dedekind_sum(1, -3), std::domain_error);
}

TEST(DedekindSum, MatchesDefinitionIncludingNegativeH) {
    for (Int k = 1; k <= 40; ++k)
        for (Int h = -2 * k; h <= 2 * k; ++h) {
            if (gcd(h, k) != 1) continue;
            EXPECT_EQ(dedekind_sum(h, k), dedekind_by_definition(h, k)) << h << "," << k;
        }
}

TEST(DedekindSum, OddPeriodicAndReciprocal) {
    for (Int k = 1; k <= 120; ++k)
        for (Int h = 1; h < k; ++h) {
            if (gcd(h, k) != 1) continue;
            const Rational s = dedekind_sum(h, k);
            EXPECT_EQ(dedekind_sum(-h, k), -s);
            EXPECT_EQ(dedekind_sum(h + k, k), s);
            const Rational rhs =
                Rational(-1, 4) + (Rational(h, k) + Rational(k, h) + Rational(1, h * k)) / Rational(12);
            EXPECT_EQ(s + dedekind_sum(k, h), rhs) << h << "," << k;
        }
}

TEST(ExactPhase, ReductionAndArithmetic) {
    EXPECT_EQ(ExactPhase(Rational(5, 2)).t(), Rational(1, 2));
    EXPECT_EQ(ExactPhase(Rational(-1, 3)).t(), Rational(5, 3));
    EXPECT_TRUE(ExactPhase(Rational(4)).is_one());
    EXPECT_EQ(ExactPhase::i_power(-1).t(), Rational(3, 2));
    EXPECT_EQ(ExactPhase::sign(-1).t(), Rational(1));
    EXPECT_EQ(ExactPhase(Rational(1, 12)).pow(24), ExactPhase());
    const ExactPhase p(Rational(7, 12));
    EXPECT_EQ(p * p.inverse(), ExactPhase());
    EXPECT_EQ(p / p, ExactPhase());
}

TEST(ExactPhase, ComplexValueOnUnitCircle) {
    for (Int n = -48; n <= 48; ++n) {
        const ExactPhase p(Rational(n, 24));
        const Complex z = p.to_complex();
        EXPECT_NEAR(std::abs(z), 1.0, 1e-15);
        EXPECT_NEAR(std::abs(z - std::exp(Complex(0.0, pi * n / 24.0))), 0.0, 1e-14);
    }
    EXPECT_EQ(ExactPhase(Rational(1, 2)).to_complex(), Complex(0.0, 1.0));
    EXPECT_EQ(ExactPhase(Rational(1)).to_complex(), Complex(-1.0, 0.0));
}

TEST(EtaCharacter, DedekindFormExamples) {
    EXPECT_EQ(eta_character_dedekind({0, -1, 1, 0}).t(), Rational(0));
    EXPECT_EQ(eta_character_dedekind({1, 0, 1, 1}).t(), Rational(1, 6));
    EXPECT_THROW((void)eta_character_dedekind({1, 1, 0, 1}), std::domain_error);
    EXPECT_THROW((void)eta_character_dedekind({0, 1, -1, 0}), std::domain_error);
}

TEST(EtaCharacter, RademacherFormExamples) {
    EXPECT_EQ(eta_character_rademacher({0, -1, 1, 0}).t(), Rational(0));
    EXPECT_EQ(eta_character_rademacher({1, 0, 1, 1}).t(), Rational(1, 6));
    EXPECT_THROW((void)eta_character_rademacher({1, 1, 0, 1}), std::domain_error);
}

TEST(EtaCharacter, Theta1MultiplierExamples) {
    EXPECT_EQ(theta1_multiplier({0, -1, 1, 0}).t(), Rational(3, 2));
    EXPECT_EQ(theta1_multiplier({1, 0, 1, 1}).t(), Rational(0));
}

TEST(EtaCharacter, ClosedFormsAgreeAndHaveOrderDividing24) {
    for (Int c = 1; c <= 30; ++c)
        for (Int d = -3 * c; d <= 3 * c; ++d) {
            if (gcd(c, d) != 1) continue;
            const BezoutResult br = extended_gcd(d, -c);  // a d - b c = 1
            const ModularMatrix m(br.x, br.y, c, d);
            const ExactPhase e = eta_character_dedekind(m);
            EXPECT_EQ(e, eta_character_rademacher(m)) << m;
            EXPECT_EQ(e, eta_character_dedekind_negated_sum(m)) << m;
            EXPECT_TRUE(e.pow(24).is_one());
            EXPECT_TRUE(theta1_multiplier(m).pow(8).is_one());
            if (c % 2 != 0 && d % 2 != 0) {
                EXPECT_EQ(eta_character_c_odd(m), eta_character_d_odd(m)) << m;
            }
        }
}

TEST(EtaCharacter, IndependentOfCompletion) {
    // Changing a by c (and b by d) keeps the bottom row, hence the Mobius image up to a translation by 1.
    for (Int c = 1; c <= 20; ++c)
        for (Int d = -c; d <= c; ++d) {
            if (gcd(c, d) != 1) continue;
            const BezoutResult br = extended_gcd(d, -c);
            const ModularMatrix m(br.x, br.y, c, d);
            const ModularMatrix t(1, 1, 0, 1);
            EXPECT_EQ(eta_character_dedekind(t * m), eta_character_dedekind(m) * ExactPhase(Rational(1, 12)));
        }
}
