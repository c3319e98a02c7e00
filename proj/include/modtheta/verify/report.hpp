#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "modtheta/io/format.hpp"
#include "modtheta/numeric.hpp"

namespace modtheta {

enum class Status { passed, failed, skipped };

inline const char* to_string(Status s) noexcept {
    switch (s) {
        case Status::passed: return "pass";
        case Status::failed: return "fail";
        case Status::skipped: return "skip";
    }
    return "?";
}

/// Outcome of one identity check.
///
/// For evaluated reports, status is passed exactly when residual <= tolerance.
/// Exact checks use residual 0 (equal) or 1 (unequal) with tolerance 0.
/// Skipped reports (guard rejections) carry residual 0 and never count as failures.
struct VerificationReport {
    std::string check_id;
    std::size_t index = 0;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::string lhs;
    std::string rhs;
    double residual = 0.0;
    double tolerance = 0.0;
    Status status = Status::passed;
    int terms_used = 0;
    std::string note;

    [[nodiscard]] bool passed() const noexcept { return status == Status::passed; }
    [[nodiscard]] bool failed() const noexcept { return status == Status::failed; }
    [[nodiscard]] bool skipped() const noexcept { return status == Status::skipped; }

    VerificationReport& input(std::string key, std::string value) {
        inputs.emplace_back(std::move(key), std::move(value));
        return *this;
    }
    VerificationReport& input(std::string key, double value) { return input(std::move(key), format_double(value)); }
    VerificationReport& input(std::string key, Complex value) { return input(std::move(key), format_complex(value)); }
    VerificationReport& input(std::string key, long long value) {
        return input(std::move(key), std::to_string(value));
    }
    VerificationReport& input(std::string key, long value) { return input(std::move(key), static_cast<long long>(value)); }
    VerificationReport& input(std::string key, int value) { return input(std::move(key), static_cast<long long>(value)); }
    VerificationReport& input(std::string key, std::size_t value) {
        return input(std::move(key), std::to_string(value));
    }

    /// Sets residual, tolerance and status for a floating-point comparison.
    void judge(double r, double tol) {
        tolerance = tol;
        if (!std::isfinite(r)) {
            residual = std::numeric_limits<double>::max();
            status = Status::failed;
            note += note.empty() ? "non-finite residual" : "; non-finite residual";
            return;
        }
        residual = r;
        status = r <= tol ? Status::passed : Status::failed;
    }

    void judge_complex(Complex l, Complex r, double res, double tol) {
        lhs = format_complex(l);
        rhs = format_complex(r);
        judge(res, tol);
    }

    /// Exact comparison: residual 0 if equal, 1 otherwise.
    void judge_exact(bool equal) {
        tolerance = 0.0;
        residual = equal ? 0.0 : 1.0;
        status = equal ? Status::passed : Status::failed;
    }

    void skip(std::string reason) {
        status = Status::skipped;
        residual = 0.0;
        note = std::move(reason);
    }
};

/// Folds per-draw reports into one: worst residual, max terms, number of skipped
/// draws. Fails if any draw failed; skipped only if every draw was skipped.
inline VerificationReport aggregate_draws(VerificationReport head, const std::vector<VerificationReport>& draws) {
    std::size_t skipped = 0;
    std::size_t failed = 0;
    double worst = 0.0;
    double tol = 0.0;
    int terms = 0;
    const VerificationReport* worst_draw = nullptr;
    for (const auto& d : draws) {
        tol = std::max(tol, d.tolerance);
        if (d.skipped()) {
            ++skipped;
            continue;
        }
        if (d.failed()) ++failed;
        terms = std::max(terms, d.terms_used);
        if (worst_draw == nullptr || d.residual > worst) {
            worst = d.residual;
            worst_draw = &d;
        }
    }
    head.input("draws", draws.size());
    head.input("skipped_draws", skipped);
    head.tolerance = tol;
    head.terms_used = terms;
    if (worst_draw == nullptr) {
        head.skip(draws.empty() ? "no draws" : "all draws rejected by guard");
        return head;
    }
    head.residual = worst;
    head.lhs = worst_draw->lhs;
    head.rhs = worst_draw->rhs;
    std::string where;
    for (const auto& [k, v] : worst_draw->inputs) where += (where.empty() ? "" : " ") + k + "=" + v;
    head.note = "worst draw: " + where;
    if (!worst_draw->note.empty()) head.note += "; " + worst_draw->note;
    head.status = failed > 0 ? Status::failed : Status::passed;
    return head;
}

}  // namespace modtheta
