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

#include "numstate/axioms.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

#include "numstate/oracle.hpp"
#include "numstate/rng.hpp"

namespace numstate {

namespace {

std::string value_text(const DigitString& s) {
    return std::to_string(decode_number(s));
}

/// The arithmetic under test, rebuilt from whichever successor was injected.
class OperatorFamily {
  public:
    OperatorFamily(const Radix& radix, SuccessorFn successor)
        : successor_(std::move(successor)),
          zero_(DigitString::zero(radix)),
          one_(encode_number(1, radix)) {}

    DigitString add(const DigitString& a, const DigitString& b) const {
        return add_with(successor_, a, b);
    }
    DigitString mul(const DigitString& a, const DigitString& b) const {
        return times_with(successor_, a, b, zero_);
    }
    DigitString step(const DigitString& a) const { return successor_(1, a); }

    const DigitString& zero() const { return zero_; }
    const DigitString& one() const { return one_; }

  private:
    SuccessorFn successor_;
    DigitString zero_;
    DigitString one_;
};

/// Supplies the element tuples a check runs over: the full cube in
/// exhaustive mode, seeded draws otherwise. Each check consumes its own
/// pass over the source so counterexamples are reported per axiom.
class CaseSource {
  public:
    CaseSource(const Radix& radix, bool exhaustive, std::uint64_t samples,
               std::uint64_t seed)
        : radix_(radix), exhaustive_(exhaustive), samples_(samples),
          rng_(seed) {
        if (exhaustive_) {
            // Precomputing the labels pays off over the cubed sweeps; the
            // sampled mode encodes its draws on the fly instead.
            elements_.reserve(static_cast<std::size_t>(radix.modulus()));
            for (std::uint64_t n = 0; n < radix.modulus(); ++n) {
                elements_.push_back(encode_number(n, radix));
            }
        }
    }

    using Failure = std::optional<std::string>;

    template <typename Fn>  // Fn(a) -> Failure
    AxiomCheck over_elements(const std::string& name, Fn fn) {
        return run(name, 1, [&fn](const DigitString* tuple) {
            return fn(tuple[0]);
        });
    }

    template <typename Fn>  // Fn(a, b) -> Failure
    AxiomCheck over_pairs(const std::string& name, Fn fn) {
        return run(name, 2, [&fn](const DigitString* tuple) {
            return fn(tuple[0], tuple[1]);
        });
    }

    template <typename Fn>  // Fn(a, b, c) -> Failure
    AxiomCheck over_triples(const std::string& name, Fn fn) {
        return run(name, 3, [&fn](const DigitString* tuple) {
            return fn(tuple[0], tuple[1], tuple[2]);
        });
    }

    const std::vector<DigitString>& elements() const { return elements_; }

  private:
    template <typename Eval>
    AxiomCheck run(const std::string& name, int arity, Eval eval) {
        std::uint64_t cases = 0;
        const DigitString zero = DigitString::zero(radix_);
        DigitString tuple[3] = {zero, zero, zero};
        if (exhaustive_) {
            const std::uint64_t modulus = radix_.modulus();
            std::uint64_t index[3] = {0, 0, 0};
            // Odometer over the arity-dimensional cube.
            while (true) {
                for (int slot = 0; slot < arity; ++slot) {
                    tuple[slot] = elements_[index[slot]];
                }
                ++cases;
                if (auto failure = eval(tuple)) {
                    return AxiomCheck{name, false, cases, *failure};
                }
                int slot = arity - 1;
                while (slot >= 0 && ++index[slot] == modulus) {
                    index[slot] = 0;
                    --slot;
                }
                if (slot < 0) break;
            }
        } else {
            for (std::uint64_t i = 0; i < samples_; ++i) {
                for (int slot = 0; slot < arity; ++slot) {
                    tuple[slot] = encode_number(
                        rng_.uniform_below(radix_.modulus()), radix_);
                }
                ++cases;
                if (auto failure = eval(tuple)) {
                    return AxiomCheck{name, false, cases, *failure};
                }
            }
        }
        return AxiomCheck{name, true, cases, ""};
    }

    Radix radix_;
    bool exhaustive_;
    std::uint64_t samples_;
    Rng rng_;
    std::vector<DigitString> elements_;
};

}  // namespace

bool AxiomSuiteReport::all_passed() const {
    for (const auto& check : checks) {
        if (!check.passed) return false;
    }
    return true;
}

AxiomSuiteReport run_axiom_suite(const Radix& radix,
                                 const AxiomSuiteOptions& options) {
    const bool exhaustive = options.exhaustive.has_value()
                                ? *options.exhaustive
                                : radix.modulus() <= kAxiomExhaustiveDefault;
    if (exhaustive && radix.modulus() > kAxiomExhaustiveCap) {
        throw std::domain_error("exhaustive axiom sweeps are capped at modulus " +
                                std::to_string(kAxiomExhaustiveCap));
    }
    if (!exhaustive && options.samples == 0) {
        throw std::invalid_argument("sampled mode requires samples >= 1");
    }

    SuccessorFn successor = options.successor;
    if (!successor) {
        successor = [](int j, const DigitString& s) {
            return successor_apply(j, s);
        };
    }
    const OperatorFamily ops(radix, successor);
    CaseSource cases(radix, exhaustive, options.samples, options.seed);

    AxiomSuiteReport report{radix, exhaustive, options.seed,
                            exhaustive ? 0 : options.samples, {}};

    report.checks.push_back(cases.over_triples(
        "add-associativity",
        [&ops](const DigitString& a, const DigitString& b,
               const DigitString& c) -> CaseSource::Failure {
            const DigitString left = ops.add(ops.add(a, b), c);
            const DigitString right = ops.add(a, ops.add(b, c));
            if (left == right) return std::nullopt;
            return "a=" + value_text(a) + ", b=" + value_text(b) +
                   ", c=" + value_text(c) + ": (a+b)+c=" + value_text(left) +
                   ", a+(b+c)=" + value_text(right);
        }));

    report.checks.push_back(cases.over_pairs(
        "add-commutativity",
        [&ops](const DigitString& a,
               const DigitString& b) -> CaseSource::Failure {
            const DigitString left = ops.add(a, b);
            const DigitString right = ops.add(b, a);
            if (left == right) return std::nullopt;
            return "a=" + value_text(a) + ", b=" + value_text(b) +
                   ": a+b=" + value_text(left) + ", b+a=" + value_text(right);
        }));

    report.checks.push_back(cases.over_elements(
        "add-identity",
        [&ops](const DigitString& a) -> CaseSource::Failure {
            if (ops.add(ops.zero(), a) == a && ops.add(a, ops.zero()) == a) {
                return std::nullopt;
            }
            return "a=" + value_text(a) + ": adding zero moved the element";
        }));

    if (exhaustive) {
        report.checks.push_back(cases.over_elements(
            "add-inverses",
            [&ops, &cases](const DigitString& a) -> CaseSource::Failure {
                for (const DigitString& b : cases.elements()) {
                    if (ops.add(a, b) == ops.zero()) return std::nullopt;
                }
                return "a=" + value_text(a) + ": no b with a+b=0";
            }));
    } else {
        const Radix r = radix;
        report.checks.push_back(cases.over_elements(
            "add-inverses",
            [&ops, r](const DigitString& a) -> CaseSource::Failure {
                const std::uint64_t value = decode_number(a);
                const DigitString candidate =
                    encode_number((r.modulus() - value) % r.modulus(), r);
                const DigitString sum = ops.add(a, candidate);
                if (sum == ops.zero()) return std::nullopt;
                return "a=" + value_text(a) + ": candidate b=" +
                       value_text(candidate) + " gives a+b=" + value_text(sum);
            }));
    }

    report.checks.push_back(cases.over_triples(
        "mul-associativity",
        [&ops](const DigitString& a, const DigitString& b,
               const DigitString& c) -> CaseSource::Failure {
            const DigitString left = ops.mul(ops.mul(a, b), c);
            const DigitString right = ops.mul(a, ops.mul(b, c));
            if (left == right) return std::nullopt;
            return "a=" + value_text(a) + ", b=" + value_text(b) +
                   ", c=" + value_text(c) + ": (a*b)*c=" + value_text(left) +
                   ", a*(b*c)=" + value_text(right);
        }));

    report.checks.push_back(cases.over_pairs(
        "mul-commutativity",
        [&ops](const DigitString& a,
               const DigitString& b) -> CaseSource::Failure {
            const DigitString left = ops.mul(a, b);
            const DigitString right = ops.mul(b, a);
            if (left == right) return std::nullopt;
            return "a=" + value_text(a) + ", b=" + value_text(b) +
                   ": a*b=" + value_text(left) + ", b*a=" + value_text(right);
        }));

    report.checks.push_back(cases.over_elements(
        "mul-identity",
        [&ops](const DigitString& a) -> CaseSource::Failure {
            if (ops.mul(ops.one(), a) == a && ops.mul(a, ops.one()) == a) {
                return std::nullopt;
            }
            return "a=" + value_text(a) + ": multiplying by one moved the element";
        }));

    report.checks.push_back(cases.over_triples(
        "left-distributivity",
        [&ops](const DigitString& a, const DigitString& b,
               const DigitString& c) -> CaseSource::Failure {
            const DigitString left = ops.mul(a, ops.add(b, c));
            const DigitString right = ops.add(ops.mul(a, b), ops.mul(a, c));
            if (left == right) return std::nullopt;
            return "a=" + value_text(a) + ", b=" + value_text(b) +
                   ", c=" + value_text(c) + ": a*(b+c)=" + value_text(left) +
                   ", a*b+a*c=" + value_text(right);
        }));

    report.checks.push_back(cases.over_triples(
        "right-distributivity",
        [&ops](const DigitString& a, const DigitString& b,
               const DigitString& c) -> CaseSource::Failure {
            const DigitString left = ops.mul(ops.add(a, b), c);
            const DigitString right = ops.add(ops.mul(a, c), ops.mul(b, c));
            if (left == right) return std::nullopt;
            return "a=" + value_text(a) + ", b=" + value_text(b) +
                   ", c=" + value_text(c) + ": (a+b)*c=" + value_text(left) +
                   ", a*c+b*c=" + value_text(right);
        }));

    report.checks.push_back(cases.over_elements(
        "successor-coherence",
        [&ops](const DigitString& a) -> CaseSource::Failure {
            const DigitString stepped = ops.step(a);
            const DigitString added = ops.add(ops.one(), a);
            if (stepped == added) return std::nullopt;
            return "a=" + value_text(a) + ": successor=" + value_text(stepped) +
                   ", 1+a=" + value_text(added);
        }));

    const Radix r = radix;
    report.checks.push_back(cases.over_pairs(
        "oracle-coherence-add",
        [&ops, r](const DigitString& a,
                  const DigitString& b) -> CaseSource::Failure {
            const std::uint64_t got = decode_number(ops.add(a, b));
            const std::uint64_t want =
                oracle_add(decode_number(a), decode_number(b), r);
            if (got == want) return std::nullopt;
            return "a=" + value_text(a) + ", b=" + value_text(b) +
                   ": operator sum=" + std::to_string(got) +
                   ", reference sum=" + std::to_string(want);
        }));

    report.checks.push_back(cases.over_pairs(
        "oracle-coherence-mul",
        [&ops, r](const DigitString& a,
                  const DigitString& b) -> CaseSource::Failure {
            const std::uint64_t got = decode_number(ops.mul(a, b));
            const std::uint64_t want =
                oracle_mul(decode_number(a), decode_number(b), r);
            if (got == want) return std::nullopt;
            return "a=" + value_text(a) + ", b=" + value_text(b) +
                   ": operator product=" + std::to_string(got) +
                   ", reference product=" + std::to_string(want);
        }));

    return report;
}

}  // namespace numstate
