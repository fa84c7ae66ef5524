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

#include <stdexcept>

#include "doctest.h"
#include "numstate/json_io.hpp"
#include "numstate/oracle.hpp"
#include "numstate/rng.hpp"

using namespace numstate;
using nlohmann::json;

TEST_SUITE("json-io") {

TEST_CASE("digit strings serialize least-significant first") {
    const Radix radix(2, 3);
    CHECK(format_digits(encode_number(6, radix)) == "0,1,1");
    CHECK(format_digits(DigitString::zero(radix)) == "0,0,0");
    CHECK(parse_digits("0,1,1", radix) == encode_number(6, radix));
}

TEST_CASE("digit parsing rejects malformed input") {
    const Radix radix(2, 3);
    CHECK_THROWS_AS(parse_digits("", radix), std::invalid_argument);
    CHECK_THROWS_AS(parse_digits("0,1", radix), std::invalid_argument);
    CHECK_THROWS_AS(parse_digits("0,1,1,0", radix), std::invalid_argument);
    CHECK_THROWS_AS(parse_digits("0,2,0", radix), std::invalid_argument);
    CHECK_THROWS_AS(parse_digits("0,,1", radix), std::invalid_argument);
    CHECK_THROWS_AS(parse_digits("0,1,", radix), std::invalid_argument);
    CHECK_THROWS_AS(parse_digits("a,b,c", radix), std::invalid_argument);
}

TEST_CASE("format and parse round-trip on random labels") {
    Rng rng(11);
    for (const Radix radix : {Radix(2, 8), Radix(10, 3), Radix(16, 2)}) {
        for (int i = 0; i < 200; ++i) {
            const DigitString s =
                encode_number(rng.uniform_below(radix.modulus()), radix);
            CHECK(parse_digits(format_digits(s), radix) == s);
        }
    }
}

TEST_CASE("matrix dumps") {
    const DenseOperator op = successor_matrix(1, Radix(2, 1));
    const json dense = matrix_json(op);
    CHECK(dense["dim"] == 2);
    CHECK(dense["entries"].size() == 4);
    CHECK(dense["entries"][1] == json::array({1.0, 0.0}));  // row 0, col 1

    const json perm = matrix_json(op, true);
    CHECK(perm["dim"] == 2);
    CHECK(perm["permutation"] == json::array({1, 0}));
    CHECK_FALSE(perm.contains("entries"));

    const DenseOperator literal = successor_matrix_literal(1, Radix(2, 1));
    CHECK_THROWS_AS(matrix_json(literal, true), std::invalid_argument);
}

TEST_CASE("relabeling and assignment dumps") {
    const Radix radix(2, 2);
    const Relabeling map(LabelSets::defaults(radix), {1, 0}, {0, 1});
    const json dumped = relabeling_json(map);
    CHECK(dumped["A"] == json::array({"a1", "a2"}));
    CHECK(dumped["B"] == json::array({"b0", "b1"}));
    CHECK(dumped["g"] == json::array({1, 0}));
    CHECK(dumped["d"] == json::array({0, 1}));

    const PhysState t = to_physical(map, DigitString(radix, {1, 0}));
    const json state = phys_state_json(t);
    CHECK(state["assignment"]["a1"] == "b0");
    CHECK(state["assignment"]["a2"] == "b1");
}

TEST_CASE("resource report dumps") {
    const auto report = efficiency_report(Radix(2, 4));
    const json rows = resource_report_json(report);
    CHECK(rows.size() == 4);
    CHECK(rows[3]["j"] == 4);
    CHECK(rows[3]["direct"] == 1);
    CHECK(rows[3]["iterated"] == 32);
    CHECK(rows[3]["ratio"]["num"] == 32);
    CHECK(rows[3]["ratio"]["den"] == 1);
    CHECK(rows[3]["verdict"] == "efficient");

    const std::string table = resource_report_table(report);
    CHECK(table.find("verdict") != std::string::npos);
    CHECK(table.find("32/1") != std::string::npos);
}

TEST_CASE("axiom report dumps") {
    const AxiomSuiteReport report = run_axiom_suite(Radix(2, 2));
    const json checks = axiom_checks_json(report);
    CHECK(checks.size() == 12);
    CHECK(checks[0]["name"] == "add-associativity");
    CHECK(checks[0]["status"] == "pass");
    CHECK(checks[0]["detail"] == "cases=64");
    const json summary = axiom_summary_json(report);
    CHECK(summary["all_passed"] == true);
    CHECK(summary["mode"] == "exhaustive");
}

TEST_CASE("report envelope carries the sidecar fields") {
    const json envelope =
        report_envelope("succ", Radix(10, 2), 0, "0,0");
    CHECK(envelope["command"] == "succ");
    CHECK(envelope["k"] == 10);
    CHECK(envelope["L"] == 2);
    CHECK(envelope["seed"] == 0);
    CHECK(envelope["result"] == "0,0");
    CHECK(envelope["checks"].is_array());
    CHECK(envelope["checks"].empty());
}

}  // TEST_SUITE
