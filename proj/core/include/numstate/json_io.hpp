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

#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "numstate/axioms.hpp"
#include "numstate/hamiltonian.hpp"
#include "numstate/operator_matrix.hpp"
#include "numstate/phys_space.hpp"
#include "numstate/radix.hpp"
#include "numstate/resource_model.hpp"

namespace numstate {

// Wire formats. Digit strings travel as comma-separated decimal digit values
// in least-significant-first order ("0,1,1"); relabelings as index
// permutations over the declared label order; matrices row-major as [re, im]
// pairs. All emitted JSON has alphabetically ordered keys, so identical
// inputs serialize to identical bytes.

std::string format_digits(const DigitString& s);

/// Parses "d1,d2,...,dL". Throws std::invalid_argument on malformed input,
/// wrong length, or out-of-range digits.
DigitString parse_digits(const std::string& text, const Radix& radix);

/// {"dim": n, "entries": [[re, im], ...]} row-major; with as_permutation and
/// a permutation-backed operator, {"dim": n, "permutation": [...]} instead.
nlohmann::json matrix_json(const DenseOperator& op, bool as_permutation = false);

nlohmann::json hermitian_json(const HermitianGenerator& generator,
                              double hermiticity, double round_trip);

/// {"A": [...sites], "B": [...states], "g": [...], "d": [...]}.
nlohmann::json relabeling_json(const Relabeling& map);

/// {"assignment": {site: state, ...}}.
nlohmann::json phys_state_json(const PhysState& t);

nlohmann::json resource_report_json(const std::vector<ResourceEntry>& report);

/// Aligned text rendering of the same report.
std::string resource_report_table(const std::vector<ResourceEntry>& report);

/// The checks array for the report envelope: [{name, status, detail}, ...].
/// Case counts are folded into the detail text.
nlohmann::json axiom_checks_json(const AxiomSuiteReport& report);

/// {"all_passed", "mode", "samples"} summary for the envelope's result slot.
nlohmann::json axiom_summary_json(const AxiomSuiteReport& report);

/// The common report envelope:
/// {"command", "k", "L", "seed", "result", "checks": [{name, status, detail}]}.
nlohmann::json report_envelope(const std::string& command, const Radix& radix,
                               std::uint64_t seed, nlohmann::json result,
                               nlohmann::json checks = nlohmann::json::array());

}  // namespace numstate
