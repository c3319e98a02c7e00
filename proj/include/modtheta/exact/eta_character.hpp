#pragma once

#include <stdexcept>

#include "modtheta/exact/dedekind.hpp"
#include "modtheta/exact/integer.hpp"
#include "modtheta/exact/phase.hpp"
#include "modtheta/exact/rational.hpp"
#include "modtheta/modular/matrix.hpp"

namespace modtheta {

namespace detail {

inline void require_positive_c(const ModularMatrix& m, const char* who) {
    if (m.c <= 0) throw std::domain_error(std::string(who) + ": matrix must be normalized with c > 0");
}

inline ExactPhase jacobi_phase(int symbol) {
    if (symbol == 0) throw std::logic_error("eta character: Jacobi symbol vanished for coprime arguments");
    return ExactPhase::sign(symbol);
}

}  // namespace detail

/// Eta multiplier via Dedekind sums: exp(pi i ((a + d) / 12c + s(-d, c))).
inline ExactPhase eta_character_dedekind(const ModularMatrix& m) {
    detail::require_positive_c(m, "eta_character_dedekind");
    return ExactPhase(Rational(m.a + m.d, 12 * m.c) + dedekind_sum(-m.d, m.c));
}

/// Same multiplier written with -s(d, c); equal to the above because s is odd in h.
inline ExactPhase eta_character_dedekind_negated_sum(const ModularMatrix& m) {
    detail::require_positive_c(m, "eta_character_dedekind_negated_sum");
    return ExactPhase(Rational(m.a + m.d, 12 * m.c) - dedekind_sum(m.d, m.c));
}

/// Rademacher's branch for odd c:
/// (d/c) i^{(1-c)/2} exp((pi i / 12) (b d (1 - c^2) + c (a + d))).
inline ExactPhase eta_character_c_odd(const ModularMatrix& m) {
    detail::require_positive_c(m, "eta_character_c_odd");
    if (m.c % 2 == 0) throw std::domain_error("eta_character_c_odd: c must be odd");
    const Rational exponent =
        Rational(m.b) * Rational(m.d) * Rational(1 - m.c * m.c) + Rational(m.c) * Rational(m.a + m.d);
    return detail::jacobi_phase(jacobi_symbol(m.d, m.c)) * ExactPhase::i_power((1 - m.c) / 2) *
           ExactPhase(exponent / Rational(12));
}

/// Rademacher's branch for odd d:
/// (c/|d|) exp((pi i / 12) (a c (1 - d^2) + d (b - c + 3))).
///
/// The d/4 part of the exponent is the familiar e^{pi i d / 4} factor; there is
/// no separate power of i in this branch.
inline ExactPhase eta_character_d_odd(const ModularMatrix& m) {
    detail::require_positive_c(m, "eta_character_d_odd");
    if (m.d % 2 == 0) throw std::domain_error("eta_character_d_odd: d must be odd");
    const Int abs_d = m.d < 0 ? -m.d : m.d;
    const Rational exponent =
        Rational(m.a) * Rational(m.c) * Rational(1 - m.d * m.d) + Rational(m.d) * Rational(m.b - m.c);
    return detail::jacobi_phase(jacobi_symbol(m.c, abs_d)) * ExactPhase(Rational(m.d, 4)) *
           ExactPhase(exponent / Rational(12));
}

/// Closed-form multiplier with Jacobi symbols. Uses the odd-c branch whenever c
/// is odd (including when d is odd too), the odd-d branch otherwise.
inline ExactPhase eta_character_rademacher(const ModularMatrix& m) {
    detail::require_positive_c(m, "eta_character_rademacher");
    if (gcd(m.c, m.d) != 1) throw std::domain_error("eta_character_rademacher: gcd(c, d) must be 1");
    return m.c % 2 != 0 ? eta_character_c_odd(m) : eta_character_d_odd(m);
}

/// Multiplier of theta_1: -i * eps(A)^3.
inline ExactPhase theta1_multiplier(const ModularMatrix& m) {
    return eta_character_dedekind(m).pow(3) * ExactPhase::i_power(-1);
}

}  // namespace modtheta
