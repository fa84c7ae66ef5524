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

#include <cmath>
#include <complex>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "numstate/arith_space.hpp"
#include "numstate/oracle.hpp"
#include "numstate/superposition.hpp"

using namespace numstate;

namespace {

DigitString label(const Radix& radix, std::vector<int> digits) {
    return DigitString(radix, std::move(digits));
}

}  // namespace

TEST_SUITE("arith-space") {

TEST_CASE("cyclic shift examples") {
    CHECK(cyclic_shift(label(Radix(2, 2), {1, 0}), 1, 1).digits() ==
          std::vector<int>{0, 0});
    CHECK(cyclic_shift(label(Radix(3, 2), {0, 0}), 2, 2).digits() ==
          std::vector<int>{0, 2});
    CHECK_THROWS_AS(cyclic_shift(label(Radix(2, 2), {0, 0}), 3, 1),
                    std::out_of_range);
}

TEST_CASE("cyclic shift has period base") {
    const Radix radix(3, 2);
    for (std::uint64_t n = 0; n < radix.modulus(); ++n) {
        const DigitString s = encode_number(n, radix);
        for (int j = 1; j <= radix.length(); ++j) {
            CHECK(cyclic_shift(s, j, radix.base()) == s);
            CHECK(cyclic_shift(cyclic_shift(s, j, 1), j, -1) == s);
        }
    }
}

TEST_CASE("projection commutes with the shift as partial maps") {
    // shift . project(m) = project(m+1 mod base) . shift, on every label.
    const Radix radix(3, 2);
    for (std::uint64_t n = 0; n < radix.modulus(); ++n) {
        const DigitString s = encode_number(n, radix);
        for (int j = 1; j <= radix.length(); ++j) {
            for (int m = 0; m < radix.base(); ++m) {
                const auto projected = project_digit(s, j, m);
                const auto left = projected
                                      ? std::optional(cyclic_shift(*projected, j, 1))
                                      : std::nullopt;
                const auto right = project_digit(cyclic_shift(s, j, 1), j,
                                                 (m + 1) % radix.base());
                CHECK(left == right);
            }
        }
    }
}

TEST_CASE("successor examples") {
    CHECK(successor_apply(1, label(Radix(10, 2), {9, 9})).digits() ==
          std::vector<int>{0, 0});
    // values 5 + 2 = 7 and 6 + 1 = 7 mod 8, cross-checked via the oracle
    const Radix radix(2, 3);
    const DigitString five = label(radix, {1, 0, 1});
    CHECK(decode_number(successor_apply(2, five)) == oracle_add(5, 2, radix));
    CHECK(successor_apply(2, five).digits() == std::vector<int>{1, 1, 1});
    const DigitString six = label(radix, {0, 1, 1});
    CHECK(decode_number(successor_apply(1, six)) == oracle_add(6, 1, radix));
    CHECK(successor_apply(1, six).digits() == std::vector<int>{1, 1, 1});
    CHECK_THROWS_AS(successor_apply(4, five), std::out_of_range);
}

TEST_CASE("successor equals adding the component weight, exhaustively") {
    for (const Radix radix : {Radix(2, 12), Radix(3, 7), Radix(8, 4)}) {
        for (int j = 1; j <= radix.length(); ++j) {
            const std::uint64_t weight = radix.component_weight(j);
            for (std::uint64_t n = 0; n < radix.modulus(); ++n) {
                CHECK(decode_number(successor_apply(
                          j, encode_number(n, radix))) ==
                      oracle_add(n, weight, radix));
            }
        }
    }
}

TEST_CASE("base-fold successor power climbs one component") {
    for (const Radix radix : {Radix(2, 4), Radix(3, 3), Radix(5, 2)}) {
        for (std::uint64_t n = 0; n < radix.modulus(); ++n) {
            const DigitString s = encode_number(n, radix);
            for (int j = 1; j < radix.length(); ++j) {
                CHECK(successor_power_apply(
                          j, static_cast<std::uint64_t>(radix.base()), s) ==
                      successor_apply(j + 1, s));
            }
            CHECK(successor_power_apply(
                      radix.length(),
                      static_cast<std::uint64_t>(radix.base()), s) == s);
        }
    }
}

TEST_CASE("successors at different components commute") {
    const Radix radix(3, 3);
    for (std::uint64_t n = 0; n < radix.modulus(); ++n) {
        const DigitString s = encode_number(n, radix);
        for (int i = 1; i <= radix.length(); ++i) {
            for (int j = 1; j <= radix.length(); ++j) {
                CHECK(successor_apply(i, successor_apply(j, s)) ==
                      successor_apply(j, successor_apply(i, s)));
            }
        }
    }
}

TEST_CASE("full-cycle property of the unit-step successor") {
    const Radix radix(2, 3);
    DigitString s = encode_number(5, radix);
    for (std::uint64_t i = 0; i < radix.modulus(); ++i) {
        const DigitString next = successor_apply(1, s);
        if (i + 1 < radix.modulus()) CHECK(next != encode_number(5, radix));
        s = next;
    }
    CHECK(s == encode_number(5, radix));
}

TEST_CASE("pair construction rejects mismatched radices") {
    CHECK_THROWS_AS(PairState(DigitString::zero(Radix(2, 2)),
                              DigitString::zero(Radix(3, 2))),
                    std::invalid_argument);
}

TEST_CASE("addition examples") {
    const Radix k2l2(2, 2);
    const PairState zero_sum =
        add_apply(PairState(label(k2l2, {0, 0}), label(k2l2, {1, 0})));
    CHECK(zero_sum.right.digits() == std::vector<int>{1, 0});

    const Radix k2l3(2, 3);
    const PairState sum = add_apply(
        PairState(label(k2l3, {1, 0, 1}), label(k2l3, {0, 1, 1})));
    CHECK(decode_number(sum.right) == oracle_add(5, 6, k2l3));
    CHECK(sum.right.digits() == std::vector<int>{1, 1, 0});

    const Radix k10l2(10, 2);
    const PairState wrap = add_apply(
        PairState(label(k10l2, {9, 9}), label(k10l2, {1, 0})));
    CHECK(decode_number(wrap.right) == oracle_add(99, 1, k10l2));
    CHECK(wrap.right.digits() == std::vector<int>{0, 0});
}

TEST_CASE("addition agrees with the oracle and preserves the left register") {
    for (const Radix radix : {Radix(2, 3), Radix(5, 2), Radix(3, 3)}) {
        for (std::uint64_t a = 0; a < radix.modulus(); ++a) {
            const DigitString left = encode_number(a, radix);
            std::set<std::uint64_t> images;
            for (std::uint64_t b = 0; b < radix.modulus(); ++b) {
                const PairState sum =
                    add_apply(PairState(left, encode_number(b, radix)));
                CHECK(sum.left == left);
                CHECK(decode_number(sum.right) == oracle_add(a, b, radix));
                images.insert(decode_number(sum.right));
            }
            // bijective on the right register for every fixed left
            CHECK(images.size() == radix.modulus());
        }
    }
}

TEST_CASE("multiplication examples") {
    const Radix radix(2, 3);
    const DigitString zero = DigitString::zero(radix);
    const DigitString one = encode_number(1, radix);
    for (std::uint64_t w = 0; w < radix.modulus(); ++w) {
        const DigitString ws = encode_number(w, radix);
        CHECK(times_apply(one, ws, zero) == ws);    // multiplicative identity
        CHECK(times_apply(zero, ws, zero) == zero); // annihilator
    }
    CHECK(decode_number(times_apply(encode_number(5, radix),
                                    encode_number(6, radix), zero)) == 6);
}

TEST_CASE("multiplication matches the oracle on all pairs") {
    for (const Radix radix : {Radix(2, 8), Radix(3, 5), Radix(16, 1)}) {
        const DigitString zero = DigitString::zero(radix);
        for (std::uint64_t a = 0; a < radix.modulus(); ++a) {
            const DigitString as = encode_number(a, radix);
            for (std::uint64_t b = 0; b < radix.modulus(); ++b) {
                CHECK(decode_number(times_apply(as, encode_number(b, radix),
                                                zero)) ==
                      oracle_mul(a, b, radix));
            }
        }
    }
}

TEST_CASE("multiplication accumulates onto the target") {
    const Radix radix(10, 2);
    const DigitString target = encode_number(42, radix);
    CHECK(decode_number(times_apply(encode_number(7, radix),
                                    encode_number(9, radix), target)) ==
          (42 + 63) % 100);
}

TEST_CASE("superposition basics") {
    const Radix radix(2, 1);
    const DigitString zero = label(radix, {0});
    const DigitString one = label(radix, {1});

    const Superposition basis = Superposition::basis_state(zero);
    CHECK(basis.term_count() == 1);
    CHECK(basis.amplitude(zero) == std::complex<double>{1.0, 0.0});

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Superposition::TermMap terms;
    terms[zero] = {inv_sqrt2, 0.0};
    terms[one] = {0.0, inv_sqrt2};
    const Superposition psi(radix, std::move(terms));
    CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-14));

    // single-term mapping
    const Superposition stepped =
        successor_apply_super(1, Superposition::basis_state(zero));
    CHECK(stepped.amplitude(one) == std::complex<double>{1.0, 0.0});

    // label swap carries amplitudes unchanged, exact equality
    const Superposition swapped = successor_apply_super(1, psi);
    CHECK(swapped.amplitude(one) == psi.amplitude(zero));
    CHECK(swapped.amplitude(zero) == psi.amplitude(one));
}

TEST_CASE("superposition norm and pruning rules") {
    const Radix radix(2, 1);
    Superposition::TermMap bad;
    bad[label(radix, {0})] = {0.5, 0.0};
    CHECK_THROWS_AS(Superposition(radix, std::move(bad)),
                    std::invalid_argument);

    Superposition::TermMap with_dust;
    with_dust[label(radix, {0})] = {1.0, 0.0};
    with_dust[label(radix, {1})] = {1e-16, 0.0};  // below prune threshold
    const Superposition pruned(radix, std::move(with_dust));
    CHECK(pruned.term_count() == 1);

    Superposition::TermMap foreign;
    foreign[label(Radix(3, 1), {0})] = {1.0, 0.0};
    CHECK_THROWS_AS(Superposition(radix, std::move(foreign)),
                    std::invalid_argument);
}

TEST_CASE("modulus-fold successor application is the identity on states") {
    const Radix radix(2, 2);
    const double half = 0.5;
    Superposition::TermMap terms;
    terms[label(radix, {0, 0})] = {half, half};
    terms[label(radix, {1, 1})] = {half, -half};
    const Superposition psi(radix, std::move(terms));
    Superposition cycled = psi;
    for (std::uint64_t i = 0; i < radix.modulus(); ++i) {
        cycled = successor_apply_super(1, cycled);
    }
    CHECK(cycled.terms() == psi.terms());  // exact: amplitudes only permuted
}

}  // TEST_SUITE
