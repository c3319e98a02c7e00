#pragma once

#include <ostream>
#include <string>

#include "json.hpp"

#include "modtheta/io/format.hpp"
#include "modtheta/verify/suite.hpp"

namespace modtheta {

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.inputs) inputs[k] = v;
    nlohmann::ordered_json j;
    j["check_id"] = r.check_id;
    j["index"] = r.index;
    j["inputs"] = std::move(inputs);
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["residual"] = r.residual;
    j["tolerance"] = r.tolerance;
    j["passed"] = r.passed();
    j["status"] = to_string(r.status);
    j["terms_used"] = r.terms_used;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

/// {"reports": [...], "summary": {"checks": {id: {passed, failed, skipped}}, totals...}}
inline nlohmann::ordered_json to_json(const SuiteResult& s) {
    nlohmann::ordered_json reports = nlohmann::ordered_json::array();
    for (const auto& r : s.reports) reports.push_back(to_json(r));
    nlohmann::ordered_json checks = nlohmann::ordered_json::object();
    std::size_t passed = 0, failed = 0, skipped = 0;
    for (const auto& [id, c] : s.summary) {
        checks[id] = {{"passed", c.passed}, {"failed", c.failed}, {"skipped", c.skipped}};
        passed += c.passed;
        failed += c.failed;
        skipped += c.skipped;
    }
    nlohmann::ordered_json summary;
    summary["checks"] = std::move(checks);
    summary["passed"] = passed;
    summary["failed"] = failed;
    summary["skipped"] = skipped;
    summary["ok"] = failed == 0;
    nlohmann::ordered_json j;
    j["reports"] = std::move(reports);
    j["summary"] = std::move(summary);
    return j;
}

/// RFC 4180 field quoting.
inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

inline void write_csv(std::ostream& os, const SuiteResult& s) {
    os << "check_id,index,status,residual,tolerance,terms_used,inputs,lhs,rhs,note\r\n";
    for (const auto& r : s.reports) {
        std::string inputs;
        for (const auto& [k, v] : r.inputs) inputs += (inputs.empty() ? "" : ";") + k + "=" + v;
        os << csv_field(r.check_id) << ',' << r.index << ',' << to_string(r.status) << ','
           << format_double(r.residual) << ',' << format_double(r.tolerance) << ',' << r.terms_used << ','
           << csv_field(inputs) << ',' << csv_field(r.lhs) << ',' << csv_field(r.rhs) << ','
           << csv_field(r.note) << "\r\n";
    }
}

/// Header h,k,s, one row per coprime 0 < h < k <= k_max, s as num/den.
inline void write_dedekind_table(std::ostream& os, Int k_max) {
    os << "h,k,s\r\n";
    for (Int k = 2; k <= k_max; ++k)
        for (Int h = 1; h < k; ++h)
            if (gcd(h, k) == 1) os << h << ',' << k << ',' << dedekind_sum(h, k).str() << "\r\n";
}

}  // namespace modtheta
