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

// Command-line front end. Every command is a thin adapter over the core
// library: parse flags, call one library entry point, serialize. Output is
// byte-deterministic for a fixed invocation and seed.

#include <charconv>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "numstate/arith_space.hpp"
#include "numstate/axioms.hpp"
#include "numstate/hamiltonian.hpp"
#include "numstate/json_io.hpp"
#include "numstate/operator_matrix.hpp"
#include "numstate/oracle.hpp"
#include "numstate/phys_space.hpp"
#include "numstate/radix.hpp"
#include "numstate/resource_model.hpp"

namespace {

using nlohmann::json;

struct CommonFlags {
    int base = 2;
    int length = 3;
    std::string format;  // "text" or "json"; empty means per-command default
    std::uint64_t seed = 0;
};

void add_common_flags(CLI::App* cmd, CommonFlags* flags) {
    cmd->add_option("--k", flags->base, "Digit alphabet size (>= 2)")
        ->capture_default_str();
    cmd->add_option("--L", flags->length, "Number of components (>= 1)")
        ->capture_default_str();
    cmd->add_option("--format", flags->format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--seed", flags->seed, "Seed for sampled checks")
        ->capture_default_str();
}

bool use_json(const CommonFlags& flags, bool default_json) {
    if (flags.format.empty()) return default_json;
    return flags.format == "json";
}

void emit(const std::string& command, const CommonFlags& flags,
          const numstate::Radix& radix, json result, json checks,
          bool default_json, const std::string& text_form) {
    if (use_json(flags, default_json)) {
        std::cout << numstate::report_envelope(command, radix, flags.seed,
                                               std::move(result),
                                               std::move(checks))
                         .dump(2)
                  << "\n";
    } else {
        std::cout << text_form << "\n";
    }
}

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> indices;
    const char* cursor = text.data();
    const char* end = text.data() + text.size();
    while (true) {
        int value = 0;
        auto [next, error] = std::from_chars(cursor, end, value);
        if (error != std::errc{} || next == cursor) {
            throw std::invalid_argument("malformed index list '" + text + "'");
        }
        indices.push_back(value);
        cursor = next;
        if (cursor == end) break;
        if (*cursor != ',' || ++cursor == end) {
            throw std::invalid_argument("malformed index list '" + text + "'");
        }
    }
    return indices;
}

std::vector<std::string> parse_label_list(const std::string& text) {
    std::vector<std::string> labels;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        labels.push_back(text.substr(
            start, comma == std::string::npos ? comma : comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return labels;
}

numstate::Relabeling build_relabeling(const numstate::Radix& radix,
                                      const std::string& sites_text,
                                      const std::string& states_text,
                                      const std::string& g_text,
                                      const std::string& d_text) {
    numstate::LabelSets labels = numstate::LabelSets::defaults(radix);
    if (!sites_text.empty()) labels.sites = parse_label_list(sites_text);
    if (!states_text.empty()) labels.states = parse_label_list(states_text);
    labels.validate(radix);

    std::vector<int> site_perm(labels.sites.size());
    std::vector<int> state_perm(labels.states.size());
    for (std::size_t i = 0; i < site_perm.size(); ++i) site_perm[i] = (int)i;
    for (std::size_t i = 0; i < state_perm.size(); ++i) state_perm[i] = (int)i;
    if (!g_text.empty()) site_perm = parse_index_list(g_text);
    if (!d_text.empty()) state_perm = parse_index_list(d_text);
    return numstate::Relabeling(std::move(labels), std::move(site_perm),
                                std::move(state_perm));
}

/// Parses "a1=b0,a2=b1" into a physical assignment over `labels`.
numstate::PhysState parse_assignment(const std::string& text,
                                     const numstate::LabelSets& labels) {
    std::vector<int> state_at_site(labels.sites.size(), -1);
    for (const std::string& pair : parse_label_list(text)) {
        const std::size_t eq = pair.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("malformed assignment entry '" + pair +
                                        "'");
        }
        const std::string site = pair.substr(0, eq);
        const std::string state = pair.substr(eq + 1);
        std::size_t site_index = labels.sites.size();
        for (std::size_t i = 0; i < labels.sites.size(); ++i) {
            if (labels.sites[i] == site) site_index = i;
        }
        std::size_t state_index = labels.states.size();
        for (std::size_t i = 0; i < labels.states.size(); ++i) {
            if (labels.states[i] == state) state_index = i;
        }
        if (site_index == labels.sites.size()) {
            throw std::invalid_argument("unknown site label '" + site + "'");
        }
        if (state_index == labels.states.size()) {
            throw std::invalid_argument("unknown state label '" + state + "'");
        }
        if (state_at_site[site_index] != -1) {
            throw std::invalid_argument("site '" + site + "' assigned twice");
        }
        state_at_site[site_index] = static_cast<int>(state_index);
    }
    for (std::size_t i = 0; i < state_at_site.size(); ++i) {
        if (state_at_site[i] == -1) {
            throw std::invalid_argument("site '" + labels.sites[i] +
                                        "' has no assignment");
        }
    }
    return numstate::PhysState(labels, std::move(state_at_site));
}

int run(int argc, char** argv) {
    CLI::App app{"numstate: modular arithmetic on tensor-product digit registers"};
    app.require_subcommand(1);

    CommonFlags flags;

    // encode
    auto* encode_cmd = app.add_subcommand("encode", "Positional digits of a number");
    add_common_flags(encode_cmd, &flags);
    std::uint64_t number = 0;
    encode_cmd->add_option("--n", number, "Number to encode")->required();

    // succ
    auto* succ_cmd = app.add_subcommand("succ", "Apply a component successor");
    add_common_flags(succ_cmd, &flags);
    int succ_component = 1;
    std::string succ_digits;
    succ_cmd->add_option("--j", succ_component, "Component index (1-based)")
        ->capture_default_str();
    succ_cmd->add_option("--digits", succ_digits, "Digit string, e.g. 9,9")
        ->required();

    // add
    auto* add_cmd = app.add_subcommand("add", "Register addition");
    add_common_flags(add_cmd, &flags);
    std::string add_left, add_right;
    add_cmd->add_option("--left", add_left, "Left register digits")->required();
    add_cmd->add_option("--right", add_right, "Right register digits")->required();

    // mul
    auto* mul_cmd = app.add_subcommand("mul", "Accumulating multiplication");
    add_common_flags(mul_cmd, &flags);
    std::string mul_left, mul_right, mul_target;
    mul_cmd->add_option("--left", mul_left, "First factor digits")->required();
    mul_cmd->add_option("--right", mul_right, "Second factor digits")->required();
    mul_cmd->add_option("--target", mul_target,
                        "Accumulator digits (default all zero)");

    // matrix
    auto* matrix_cmd = app.add_subcommand("matrix", "Dump a dense operator");
    add_common_flags(matrix_cmd, &flags);
    std::string matrix_op;
    int matrix_component = 1;
    int matrix_value = 0;
    bool matrix_as_permutation = false;
    bool matrix_haar_conjugate = false;
    matrix_cmd
        ->add_option("--op", matrix_op,
                     "shift | projector | successor | successor-literal | add")
        ->required()
        ->check(CLI::IsMember(
            {"shift", "projector", "successor", "successor-literal", "add"}));
    matrix_cmd->add_option("--j", matrix_component, "Component index")
        ->capture_default_str();
    matrix_cmd->add_option("--m", matrix_value, "Projector digit value")
        ->capture_default_str();
    matrix_cmd->add_flag("--permutation", matrix_as_permutation,
                         "Dump the exact index permutation instead of entries");
    matrix_cmd->add_flag("--haar-conjugate", matrix_haar_conjugate,
                         "Conjugate by a seeded Haar unitary before dumping");

    // map
    auto* map_cmd = app.add_subcommand(
        "map", "Apply a site/state relabeling to a digit string");
    add_common_flags(map_cmd, &flags);
    std::string map_digits, map_g, map_d, map_sites, map_states, map_assignment;
    bool map_inverse = false;
    map_cmd->add_option("--digits", map_digits, "Digit string to map forward");
    map_cmd->add_option("--g", map_g, "Component-to-site permutation indices");
    map_cmd->add_option("--d", map_d, "Digit-to-state permutation indices");
    map_cmd->add_option("--sites", map_sites, "Site labels (default a1..aL)");
    map_cmd->add_option("--states", map_states, "State labels (default b0..)");
    map_cmd->add_flag("--inverse", map_inverse,
                      "Map a physical assignment back to digits");
    map_cmd->add_option("--assignment", map_assignment,
                        "Physical assignment, e.g. a1=b0,a2=b1");

    // hamiltonian
    auto* ham_cmd = app.add_subcommand(
        "hamiltonian", "Extract a Hermitian generator for a successor");
    add_common_flags(ham_cmd, &flags);
    int ham_component = 1;
    double ham_time = 1.0;
    ham_cmd->add_option("--j", ham_component, "Component index")
        ->capture_default_str();
    ham_cmd->add_option("--t", ham_time, "Evolution time (> 0)")
        ->capture_default_str();

    // axioms
    auto* axioms_cmd =
        app.add_subcommand("axioms", "Run the ring axiom suite");
    add_common_flags(axioms_cmd, &flags);
    std::uint64_t axiom_samples = 10000;
    bool force_exhaustive = false;
    bool force_sampled = false;
    axioms_cmd->add_option("--samples", axiom_samples, "Samples per check")
        ->capture_default_str();
    axioms_cmd->add_flag("--exhaustive", force_exhaustive,
                         "Force the exhaustive sweep (modulus <= 256)");
    axioms_cmd->add_flag("--sampled", force_sampled, "Force sampling");

    // resources
    auto* resources_cmd = app.add_subcommand(
        "resources", "Cost comparison of successor implementations");
    add_common_flags(resources_cmd, &flags);

    // enumerate-maps
    auto* enum_cmd =
        app.add_subcommand("enumerate-maps", "List or count all relabelings");
    add_common_flags(enum_cmd, &flags);
    bool count_only = false;
    enum_cmd->add_flag("--count-only", count_only, "Print only the count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        const numstate::Radix radix(flags.base, flags.length);

        if (encode_cmd->parsed()) {
            const numstate::DigitString digits =
                numstate::encode_number(number, radix);
            const std::string text = numstate::format_digits(digits);
            emit("encode", flags, radix, text, json::array(), false, text);
        } else if (succ_cmd->parsed()) {
            const numstate::DigitString state =
                numstate::parse_digits(succ_digits, radix);
            const numstate::DigitString next =
                numstate::successor_apply(succ_component, state);
            const std::string text = numstate::format_digits(next);
            emit("succ", flags, radix, text, json::array(), false, text);
        } else if (add_cmd->parsed()) {
            const numstate::PairState sum = numstate::add_apply(
                numstate::PairState(numstate::parse_digits(add_left, radix),
                                    numstate::parse_digits(add_right, radix)));
            json result{{"left", numstate::format_digits(sum.left)},
                        {"right", numstate::format_digits(sum.right)}};
            emit("add", flags, radix, std::move(result), json::array(), false,
                 numstate::format_digits(sum.right));
        } else if (mul_cmd->parsed()) {
            const numstate::DigitString target =
                mul_target.empty() ? numstate::DigitString::zero(radix)
                                   : numstate::parse_digits(mul_target, radix);
            const numstate::DigitString product = numstate::times_apply(
                numstate::parse_digits(mul_left, radix),
                numstate::parse_digits(mul_right, radix), target);
            const std::string text = numstate::format_digits(product);
            emit("mul", flags, radix, text, json::array(), false, text);
        } else if (matrix_cmd->parsed()) {
            numstate::DenseOperator op;
            if (matrix_op == "shift") {
                op = numstate::shift_matrix(matrix_component, radix);
            } else if (matrix_op == "projector") {
                op = numstate::projector_matrix(matrix_value, matrix_component,
                                                radix);
            } else if (matrix_op == "successor") {
                op = numstate::successor_matrix(matrix_component, radix);
            } else if (matrix_op == "successor-literal") {
                op = numstate::successor_matrix_literal(matrix_component, radix);
            } else {
                op = numstate::add_matrix(radix);
            }
            if (matrix_haar_conjugate) {
                numstate::Rng rng(flags.seed);
                op = numstate::conjugate_by(op,
                                            numstate::haar_unitary(op.dim(), rng));
            }
            json result = numstate::matrix_json(op, matrix_as_permutation);
            emit("matrix", flags, radix, result, json::array(), true,
                 result.dump(2));
        } else if (map_cmd->parsed()) {
            const numstate::Relabeling relabeling =
                build_relabeling(radix, map_sites, map_states, map_g, map_d);
            json result{{"map", numstate::relabeling_json(relabeling)}};
            std::string text;
            if (map_inverse) {
                if (map_assignment.empty()) {
                    throw std::invalid_argument(
                        "--inverse requires --assignment");
                }
                const numstate::PhysState t =
                    parse_assignment(map_assignment, relabeling.labels());
                const numstate::DigitString digits =
                    numstate::to_abstract(relabeling, t);
                result["digits"] = numstate::format_digits(digits);
                result["number"] = numstate::decode_number(digits);
                text = numstate::format_digits(digits);
            } else {
                if (map_digits.empty()) {
                    throw std::invalid_argument(
                        "forward mapping requires --digits");
                }
                const numstate::DigitString digits =
                    numstate::parse_digits(map_digits, radix);
                const numstate::PhysState t =
                    numstate::to_physical(relabeling, digits);
                result["assignment"] =
                    numstate::phys_state_json(t)["assignment"];
                result["number"] = numstate::number_of_state(relabeling, t);
                text = result.dump(2);
            }
            emit("map", flags, radix, std::move(result), json::array(), true,
                 text);
        } else if (ham_cmd->parsed()) {
            const numstate::DenseOperator op =
                numstate::successor_matrix(ham_component, radix);
            const numstate::HermitianGenerator generator =
                numstate::extract_hamiltonian(op, ham_time);
            const double hermiticity =
                numstate::hermiticity_residual(generator.entries);
            const double round_trip = numstate::frobenius_distance(
                numstate::evolve(generator), op.entries);
            json result =
                numstate::hermitian_json(generator, hermiticity, round_trip);
            emit("hamiltonian", flags, radix, result, json::array(), true,
                 result.dump(2));
        } else if (axioms_cmd->parsed()) {
            numstate::AxiomSuiteOptions options;
            options.seed = flags.seed;
            options.samples = axiom_samples;
            if (force_exhaustive && force_sampled) {
                throw std::invalid_argument(
                    "--exhaustive and --sampled are mutually exclusive");
            }
            if (force_exhaustive) options.exhaustive = true;
            if (force_sampled) options.exhaustive = false;
            const numstate::AxiomSuiteReport report =
                numstate::run_axiom_suite(radix, options);
            std::string text;
            for (const auto& check : report.checks) {
                text += check.name;
                text += check.passed ? ": pass (cases=" : ": FAIL (cases=";
                text += std::to_string(check.cases_checked) + ")";
                if (!check.passed) text += " " + check.detail;
                text += "\n";
            }
            text += report.all_passed() ? "all axioms hold" : "axioms VIOLATED";
            emit("axioms", flags, radix, numstate::axiom_summary_json(report),
                 numstate::axiom_checks_json(report), true, text);
        } else if (resources_cmd->parsed()) {
            const std::vector<numstate::ResourceEntry> report =
                numstate::efficiency_report(radix);
            emit("resources", flags, radix,
                 numstate::resource_report_json(report), json::array(), false,
                 numstate::resource_report_table(report));
        } else if (enum_cmd->parsed()) {
            const numstate::LabelSets labels =
                numstate::LabelSets::defaults(radix);
            if (count_only) {
                const std::uint64_t count = numstate::count_relabelings(labels);
                emit("enumerate-maps", flags, radix, count, json::array(), false,
                     std::to_string(count));
            } else {
                json maps = json::array();
                numstate::enumerate_relabelings(
                    labels, [&maps](const numstate::Relabeling& map) {
                        maps.push_back(numstate::relabeling_json(map));
                    });
                emit("enumerate-maps", flags, radix, maps, json::array(), true,
                     maps.dump(2));
            }
        }
        return 0;
    } catch (const std::logic_error& e) {
        // Violated preconditions: bad ranges, caps, malformed digit strings.
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
