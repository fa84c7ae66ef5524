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

#include "numstate/phys_space.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "numstate/arith_space.hpp"
#include "numstate/oracle.hpp"

namespace numstate {

namespace {

void require_bijection(const std::vector<int>& perm, std::size_t size,
                       const char* what) {
    if (perm.size() != size) {
        throw std::invalid_argument(std::string(what) + " has wrong size");
    }
    std::vector<bool> hit(size, false);
    for (int target : perm) {
        if (target < 0 || static_cast<std::size_t>(target) >= size ||
            hit[static_cast<std::size_t>(target)]) {
            throw std::invalid_argument(std::string(what) +
                                        " is not a bijection");
        }
        hit[static_cast<std::size_t>(target)] = true;
    }
}

std::vector<int> invert(const std::vector<int>& perm) {
    std::vector<int> inverse(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        inverse[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
    }
    return inverse;
}

std::vector<int> iota_perm(std::size_t size) {
    std::vector<int> perm(size);
    std::iota(perm.begin(), perm.end(), 0);
    return perm;
}

void require_enumerable(const LabelSets& labels) {
    if (labels.sites.size() > static_cast<std::size_t>(kEnumerationCap) ||
        labels.states.size() > static_cast<std::size_t>(kEnumerationCap)) {
        throw std::domain_error("relabeling enumeration capped at " +
                                std::to_string(kEnumerationCap) +
                                " sites and states");
    }
}

std::uint64_t factorial(std::size_t n) {
    std::uint64_t result = 1;
    for (std::size_t i = 2; i <= n; ++i) {
        result *= i;
    }
    return result;
}

void require_matching_labels(const LabelSets& a, const LabelSets& b) {
    if (a != b) {
        throw std::invalid_argument("label sets do not match");
    }
}

}  // namespace

LabelSets LabelSets::defaults(const Radix& radix) {
    LabelSets labels;
    labels.sites.reserve(static_cast<std::size_t>(radix.length()));
    for (int j = 1; j <= radix.length(); ++j) {
        labels.sites.push_back("a" + std::to_string(j));
    }
    labels.states.reserve(static_cast<std::size_t>(radix.base()));
    for (int h = 0; h < radix.base(); ++h) {
        labels.states.push_back("b" + std::to_string(h));
    }
    return labels;
}

void LabelSets::validate(const Radix& radix) const {
    if (sites.size() != static_cast<std::size_t>(radix.length())) {
        throw std::invalid_argument("site label count does not match length");
    }
    if (states.size() != static_cast<std::size_t>(radix.base())) {
        throw std::invalid_argument("state label count does not match base");
    }
    if (std::set<std::string>(sites.begin(), sites.end()).size() !=
        sites.size()) {
        throw std::invalid_argument("duplicate site labels");
    }
    if (std::set<std::string>(states.begin(), states.end()).size() !=
        states.size()) {
        throw std::invalid_argument("duplicate state labels");
    }
}

Relabeling::Relabeling(LabelSets labels, std::vector<int> site_perm,
                       std::vector<int> state_perm)
    : labels_(std::move(labels)),
      site_perm_(std::move(site_perm)),
      state_perm_(std::move(state_perm)) {
    require_bijection(site_perm_, labels_.sites.size(), "site map");
    require_bijection(state_perm_, labels_.states.size(), "state map");
    site_inverse_ = invert(site_perm_);
    state_inverse_ = invert(state_perm_);
}

Relabeling Relabeling::identity(LabelSets labels) {
    const std::size_t sites = labels.sites.size();
    const std::size_t states = labels.states.size();
    return Relabeling(std::move(labels), iota_perm(sites), iota_perm(states));
}

int Relabeling::site_of_component(int component) const {
    if (component < 1 ||
        static_cast<std::size_t>(component) > site_perm_.size()) {
        throw std::out_of_range("component index out of range");
    }
    return site_perm_[static_cast<std::size_t>(component - 1)];
}

int Relabeling::component_of_site(int site_index) const {
    if (site_index < 0 ||
        static_cast<std::size_t>(site_index) >= site_inverse_.size()) {
        throw std::out_of_range("site index out of range");
    }
    return site_inverse_[static_cast<std::size_t>(site_index)] + 1;
}

int Relabeling::state_of_digit(int digit) const {
    if (digit < 0 || static_cast<std::size_t>(digit) >= state_perm_.size()) {
        throw std::out_of_range("digit value out of range");
    }
    return state_perm_[static_cast<std::size_t>(digit)];
}

int Relabeling::digit_of_state(int state_index) const {
    if (state_index < 0 ||
        static_cast<std::size_t>(state_index) >= state_inverse_.size()) {
        throw std::out_of_range("state index out of range");
    }
    return state_inverse_[static_cast<std::size_t>(state_index)];
}

PhysState::PhysState(LabelSets label_sets, std::vector<int> assignment)
    : labels(std::move(label_sets)), state_at_site(std::move(assignment)) {
    if (state_at_site.size() != labels.sites.size()) {
        throw std::invalid_argument(
            "assignment must cover every site exactly once");
    }
    for (int state : state_at_site) {
        if (state < 0 || static_cast<std::size_t>(state) >= labels.states.size()) {
            throw std::invalid_argument("assignment value outside state labels");
        }
    }
}

PhysState to_physical(const Relabeling& map, const DigitString& s) {
    const std::size_t length = map.labels().sites.size();
    if (static_cast<std::size_t>(s.radix().length()) != length ||
        static_cast<std::size_t>(s.radix().base()) != map.labels().states.size()) {
        throw std::invalid_argument("radix does not match label set sizes");
    }
    std::vector<int> assignment(length);
    for (int j = 1; j <= static_cast<int>(length); ++j) {
        assignment[static_cast<std::size_t>(map.site_of_component(j))] =
            map.state_of_digit(s.digit(j));
    }
    return PhysState(map.labels(), std::move(assignment));
}

DigitString to_abstract(const Relabeling& map, const PhysState& t) {
    require_matching_labels(map.labels(), t.labels);
    const auto length = static_cast<int>(map.labels().sites.size());
    const auto base = static_cast<int>(map.labels().states.size());
    const Radix radix(base, length);
    std::vector<int> digits(static_cast<std::size_t>(length));
    for (int j = 1; j <= length; ++j) {
        const int site = map.site_of_component(j);
        digits[static_cast<std::size_t>(j - 1)] =
            map.digit_of_state(t.state_at_site[static_cast<std::size_t>(site)]);
    }
    return DigitString(radix, std::move(digits));
}

PhysState conjugated_successor_apply(const Relabeling& map, int component,
                                     const PhysState& t) {
    return to_physical(map, successor_apply(component, to_abstract(map, t)));
}

std::pair<PhysState, PhysState> conjugated_add_apply(const Relabeling& map,
                                                     const PhysState& left,
                                                     const PhysState& right) {
    const PairState sum =
        add_apply(PairState(to_abstract(map, left), to_abstract(map, right)));
    return {to_physical(map, sum.left), to_physical(map, sum.right)};
}

void enumerate_relabelings(
    const LabelSets& labels,
    const std::function<void(const Relabeling&)>& visit) {
    require_enumerable(labels);
    std::vector<int> site_perm = iota_perm(labels.sites.size());
    do {
        std::vector<int> state_perm = iota_perm(labels.states.size());
        do {
            visit(Relabeling(labels, site_perm, state_perm));
        } while (std::next_permutation(state_perm.begin(), state_perm.end()));
    } while (std::next_permutation(site_perm.begin(), site_perm.end()));
}

std::vector<Relabeling> all_relabelings(const LabelSets& labels) {
    std::vector<Relabeling> maps;
    enumerate_relabelings(labels,
                          [&maps](const Relabeling& map) { maps.push_back(map); });
    return maps;
}

std::uint64_t count_relabelings(const LabelSets& labels) {
    require_enumerable(labels);
    return factorial(labels.sites.size()) * factorial(labels.states.size());
}

std::uint64_t number_of_state(const Relabeling& map, const PhysState& t) {
    return decode_number(to_abstract(map, t));
}

}  // namespace numstate
