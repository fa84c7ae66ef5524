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
#include <vector>

#include "doctest.h"
#include "numstate/oracle.hpp"
#include "numstate/radix.hpp"
#include "numstate/rng.hpp"

using namespace numstate;

TEST_SUITE("digit-core") {

TEST_CASE("radix validation") {
    CHECK_THROWS_AS(Radix(1, 3), std::invalid_argument);  // unary excluded
    CHECK_THROWS_AS(Radix(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(Radix(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(Radix(2, 21), std::domain_error);  // 2^21 > cap
    CHECK(Radix(2, 20).modulus() == kMaxModulus);      // cap itself is fine
    CHECK(Radix(10, 2).modulus() == 100);
    CHECK(Radix(3, 4).component_weight(3) == 9);
    CHECK_THROWS_AS(Radix(3, 4).component_weight(5), std::out_of_range);
}

TEST_CASE("digit string validation") {
    const Radix radix(2, 3);
    CHECK_THROWS_AS(DigitString(radix, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(DigitString(radix, {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(DigitString(radix, {0, -1, 0}), std::invalid_argument);
    const DigitString s(radix, {0, 1, 1});
    CHECK(s.digit(2) == 1);
    CHECK_THROWS_AS(s.digit(4), std::out_of_range);
    CHECK(DigitString::zero(radix).digits() == std::vector<int>{0, 0, 0});
}

TEST_CASE("encode examples") {
    CHECK(encode_number(0, Radix(2, 3)).digits() == std::vector<int>{0, 0, 0});
    CHECK(encode_number(6, Radix(2, 3)).digits() == std::vector<int>{0, 1, 1});
    CHECK(encode_number(99, Radix(10, 2)).digits() == std::vector<int>{9, 9});
    CHECK_THROWS_AS(encode_number(8, Radix(2, 3)), std::out_of_range);
}

TEST_CASE("decode examples") {
    CHECK(decode_number(DigitString(Radix(2, 3), {0, 1, 1})) == 6);
    CHECK(decode_number(DigitString(Radix(10, 2), {9, 9})) == 99);
    CHECK(decode_number(DigitString(Radix(7, 3), {0, 0, 0})) == 0);
}

TEST_CASE("encode/decode round-trips exactly") {
    for (const Radix radix : {Radix(2, 16), Radix(3, 10), Radix(10, 4),
                              Radix(16, 4)}) {
        for (std::uint64_t n = 0; n < radix.modulus(); ++n) {
            CHECK(decode_number(encode_number(n, radix)) == n);
        }
    }
}

TEST_CASE("oracle addition examples") {
    CHECK(oracle_add(99, 1, Radix(10, 2)) == 0);
    CHECK(oracle_add(3, 0, Radix(2, 3)) == 3);
    CHECK(oracle_add(5, 6, Radix(2, 3)) == 3);
    CHECK_THROWS_AS(oracle_add(8, 0, Radix(2, 3)), std::out_of_range);
}

TEST_CASE("oracle multiplication examples") {
    CHECK(oracle_mul(3, 0, Radix(2, 3)) == 0);
    CHECK(oracle_mul(3, 1, Radix(2, 3)) == 3);
    CHECK(oracle_mul(5, 6, Radix(2, 3)) == 6);
    CHECK_THROWS_AS(oracle_mul(0, 9, Radix(2, 3)), std::out_of_range);
}

TEST_CASE("oracle addition is a commutative group") {
    for (const Radix radix : {Radix(2, 8), Radix(13, 2)}) {
        const std::uint64_t modulus = radix.modulus();
        for (std::uint64_t a = 0; a < modulus; ++a) {
            CHECK(oracle_add(0, a, radix) == a);
            // inverse existence
            const std::uint64_t inverse = (modulus - a) % modulus;
            CHECK(oracle_add(a, inverse, radix) == 0);
            for (std::uint64_t b = 0; b < modulus; ++b) {
                CHECK(oracle_add(a, b, radix) == oracle_add(b, a, radix));
            }
        }
        // associativity, full cube
        bool associative = true;
        for (std::uint64_t a = 0; a < modulus && associative; ++a) {
            for (std::uint64_t b = 0; b < modulus && associative; ++b) {
                for (std::uint64_t c = 0; c < modulus; ++c) {
                    if (oracle_add(oracle_add(a, b, radix), c, radix) !=
                        oracle_add(a, oracle_add(b, c, radix), radix)) {
                        associative = false;
                        break;
                    }
                }
            }
        }
        CHECK(associative);
    }
}

TEST_CASE("oracle ring axioms, exhaustive at small moduli") {
    for (const Radix radix : {Radix(2, 6), Radix(4, 3), Radix(64, 1)}) {
        const std::uint64_t modulus = radix.modulus();
        bool holds = true;
        for (std::uint64_t a = 0; a < modulus && holds; ++a) {
            holds = oracle_mul(1, a, radix) == a;
            for (std::uint64_t b = 0; b < modulus && holds; ++b) {
                holds = oracle_mul(a, b, radix) == oracle_mul(b, a, radix);
                for (std::uint64_t c = 0; c < modulus && holds; ++c) {
                    holds =
                        oracle_mul(oracle_mul(a, b, radix), c, radix) ==
                            oracle_mul(a, oracle_mul(b, c, radix), radix) &&
                        oracle_mul(a, oracle_add(b, c, radix), radix) ==
                            oracle_add(oracle_mul(a, b, radix),
                                       oracle_mul(a, c, radix), radix);
                }
            }
        }
        CHECK(holds);
    }
}

TEST_CASE("oracle ring axioms, sampled above the exhaustive cap") {
    for (const Radix radix : {Radix(2, 10), Radix(10, 3)}) {
        Rng rng(0);  // fixed seed
        const std::uint64_t modulus = radix.modulus();
        for (int i = 0; i < 10000; ++i) {
            const std::uint64_t a = rng.uniform_below(modulus);
            const std::uint64_t b = rng.uniform_below(modulus);
            const std::uint64_t c = rng.uniform_below(modulus);
            CHECK(oracle_mul(oracle_mul(a, b, radix), c, radix) ==
                  oracle_mul(a, oracle_mul(b, c, radix), radix));
            CHECK(oracle_mul(a, oracle_add(b, c, radix), radix) ==
                  oracle_add(oracle_mul(a, b, radix), oracle_mul(a, c, radix),
                             radix));
        }
    }
}

}  // TEST_SUITE
