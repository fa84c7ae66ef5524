// Copyright 2026 The numstate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "numstate/json_io.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <utility>

namespace numstate {

std::string format_digits(const DigitString& s) {
    std::string text;
    for (std::size_t i = 0; i < s.digits().size(); ++i) {
        if (i > 0) text += ',';
        text += std::to_string(s.digits()[i]);
    }
    return text;
}

DigitString parse_digits(const std::string& text, const Radix& radix) {
    std::vector<int> digits;
    digits.reserve(static_cast<std::size_t>(radix.length()));
    const char* cursor = text.data();
    const char* end = text.data() + text.size();
    while (true) {
        int value = 0;
        auto [next, error] = std::from_chars(cursor, end, value);
        if (error != std::errc{} || next == cursor) {
            throw std::invalid_argument("malformed digit string '" + text + "'");
        }
        digits.push_back(value);
        cursor = next;
        if (cursor == end) break;
        if (*cursor != ',') {
            throw std::invalid_argument("malformed digit string '" + text + "'");
        }
        ++cursor;
        if (cursor == end) {
            throw std::invalid_argument("malformed digit string '" + text + "'");
        }
    }
    return DigitString(radix, std::move(digits));  // validates length and range
}

nlohmann::json matrix_json(const DenseOperator& op, bool as_permutation) {
    nlohmann::json dump;
    dump["dim"] = op.dim();
    if (as_permutation) {
        if (!op.permutation.has_value()) {
            throw std::invalid_argument(
                "operator carries no exact permutation form");
        }
        dump["permutation"] = op.permutation->image();
        return dump;
    }
    nlohmann::json entries = nlohmann::json::array();
    for (Eigen::Index row = 0; row < op.dim(); ++row) {
        for (Eigen::Index col = 0; col < op.entries.cols(); ++col) {
            const auto& entry = op.entries(row, col);
            entries.push_back({entry.real(), entry.imag()});
        }
    }
    dump["entries"] = std::move(entries);
    return dump;
}

nlohmann::json hermitian_json(const HermitianGenerator& generator,
                              double hermiticity, double round_trip) {
    nlohmann::json dump;
    dump["dim"] = generator.entries.rows();
    nlohmann::json entries = nlohmann::json::array();
    for (Eigen::Index row = 0; row < generator.entries.rows(); ++row) {
        for (Eigen::Index col = 0; col < generator.entries.cols(); ++col) {
            const auto& entry = generator.entries(row, col);
            entries.push_back({entry.real(), entry.imag()});
        }
    }
    dump["entries"] = std::move(entries);
    dump["time"] = generator.time;
    dump["hermiticity_residual"] = hermiticity;
    dump["roundtrip_residual"] = round_trip;
    return dump;
}

nlohmann::json relabeling_json(const Relabeling& map) {
    return nlohmann::json{{"A", map.labels().sites},
                          {"B", map.labels().states},
                          {"g", map.site_perm()},
                          {"d", map.state_perm()}};
}

nlohmann::json phys_state_json(const PhysState& t) {
    nlohmann::json assignment = nlohmann::json::object();
    for (std::size_t site = 0; site < t.labels.sites.size(); ++site) {
        assignment[t.labels.sites[site]] =
            t.labels.states[static_cast<std::size_t>(t.state_at_site[site])];
    }
    return nlohmann::json{{"assignment", std::move(assignment)}};
}

nlohmann::json resource_report_json(const std::vector<ResourceEntry>& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const ResourceEntry& entry : report) {
        rows.push_back({{"j", entry.component},
                        {"direct", entry.direct_cost},
                        {"iterated", entry.iterated_cost},
                        {"ratio",
                         {{"num", entry.ratio.numerator},
                          {"den", entry.ratio.denominator}}},
                        {"verdict",
                         entry.iterated_efficient ? "efficient" : "inefficient"}});
    }
    return rows;
}

std::string resource_report_table(const std::vector<ResourceEntry>& report) {
    std::string table =
        "  j      direct    iterated       ratio  verdict";
    char row[128];
    for (const ResourceEntry& entry : report) {
        const std::string ratio = std::to_string(entry.ratio.numerator) + "/" +
                                  std::to_string(entry.ratio.denominator);
        std::snprintf(row, sizeof(row), "\n%3d  %10llu  %10llu  %10s  %s",
                      entry.component,
                      static_cast<unsigned long long>(entry.direct_cost),
                      static_cast<unsigned long long>(entry.iterated_cost),
                      ratio.c_str(),
                      entry.iterated_efficient ? "efficient" : "inefficient");
        table += row;
    }
    return table;
}

nlohmann::json axiom_checks_json(const AxiomSuiteReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const AxiomCheck& check : report.checks) {
        std::string detail = "cases=" + std::to_string(check.cases_checked);
        if (!check.passed) {
            detail += "; counterexample: " + check.detail;
        }
        checks.push_back({{"name", check.name},
                          {"status", check.passed ? "pass" : "fail"},
                          {"detail", detail}});
    }
    return checks;
}

nlohmann::json axiom_summary_json(const AxiomSuiteReport& report) {
    return nlohmann::json{{"all_passed", report.all_passed()},
                          {"mode", report.exhaustive ? "exhaustive" : "sampled"},
                          {"samples", report.samples}};
}

nlohmann::json report_envelope(const std::string& command, const Radix& radix,
                               std::uint64_t seed, nlohmann::json result,
                               nlohmann::json checks) {
    return nlohmann::json{{"command", command}, {"k", radix.base()},
                          {"L", radix.length()}, {"seed", seed},
                          {"result", std::move(result)},
                          {"checks", std::move(checks)}};
}

}  // namespace numstate
