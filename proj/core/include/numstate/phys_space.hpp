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

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "numstate/radix.hpp"

namespace numstate {

/// Exhaustive relabeling enumeration walks L! * k! maps; both sizes are
/// capped here.
inline constexpr int kEnumerationCap = 6;

/// The physical label alphabet: `sites` distinguishes the L component
/// systems (spatial positions, excitation lines, ...), `states` names the k
/// internal states of each component (spin projections, levels, ...). Labels
/// are opaque strings; no physics is attached to them.
struct LabelSets {
    std::vector<std::string> sites;   // L entries, distinct
    std::vector<std::string> states;  // k entries, distinct

    /// "a1".."aL" and "b0".."b(k-1)".
    static LabelSets defaults(const Radix& radix);

    /// Throws std::invalid_argument on duplicates or size mismatch with radix.
    void validate(const Radix& radix) const;

    friend bool operator==(const LabelSets&, const LabelSets&) = default;
};

/// One tensor-structure-preserving dictionary between the abstract register
/// and the physical system: a bijection from components to sites together
/// with a bijection from digit values to internal states. Both are stored as
/// index permutations relative to the declared label order.
class Relabeling {
  public:
    /// site_perm[j-1] is the site index assigned to component j;
    /// state_perm[h] is the state index assigned to digit value h.
    /// Throws std::invalid_argument unless both are bijections of the right
    /// size.
    Relabeling(LabelSets labels, std::vector<int> site_perm,
               std::vector<int> state_perm);

    static Relabeling identity(LabelSets labels);

    const LabelSets& labels() const { return labels_; }
    const std::vector<int>& site_perm() const { return site_perm_; }
    const std::vector<int>& state_perm() const { return state_perm_; }

    int site_of_component(int component) const;   // forward site map
    int component_of_site(int site_index) const;  // its inverse
    int state_of_digit(int digit) const;          // forward state map
    int digit_of_state(int state_index) const;    // its inverse

    friend bool operator==(const Relabeling&, const Relabeling&) = default;

  private:
    LabelSets labels_;
    std::vector<int> site_perm_;
    std::vector<int> state_perm_;
    std::vector<int> site_inverse_;
    std::vector<int> state_inverse_;
};

/// A physical basis label: a total assignment of one internal state to each
/// site, stored in the declared site order.
struct PhysState {
    LabelSets labels;
    std::vector<int> state_at_site;  // state_at_site[a] indexes labels.states

    PhysState(LabelSets label_sets, std::vector<int> assignment);

    friend bool operator==(const PhysState&, const PhysState&) = default;
};

/// Maps a digit string to the physical assignment that puts the image of
/// digit s(j) on the image site of component j, for every j.
PhysState to_physical(const Relabeling& map, const DigitString& s);

/// Inverse direction: reads digit j off the state found at component j's
/// site, through the inverse digit dictionary. Round-trips with to_physical
/// on every label. The inverse map equals the forward map built from the
/// inverted bijections.
DigitString to_abstract(const Relabeling& map, const PhysState& t);

/// The successor carried over to physical labels: map back, step, map
/// forward. Satisfies the intertwining relation with to_physical by
/// construction.
PhysState conjugated_successor_apply(const Relabeling& map, int component,
                                     const PhysState& t);

/// Register addition on a pair of physical labels, by conjugation of the
/// abstract addition with the relabeling on both registers.
std::pair<PhysState, PhysState> conjugated_add_apply(const Relabeling& map,
                                                     const PhysState& left,
                                                     const PhysState& right);

/// Visits all L! * k! relabelings exactly once, lexicographic in the site
/// permutation and then the state permutation. Throws std::domain_error
/// beyond kEnumerationCap.
void enumerate_relabelings(const LabelSets& labels,
                           const std::function<void(const Relabeling&)>& visit);

/// Convenience collector for enumerate_relabelings.
std::vector<Relabeling> all_relabelings(const LabelSets& labels);

/// L! * k!, the number of relabelings (overflow-safe at the enumeration cap).
std::uint64_t count_relabelings(const LabelSets& labels);

/// The number a physical assignment denotes *under a given relabeling*:
/// decode(to_abstract(map, t)). Different relabelings generally assign
/// different numbers to the same physical state.
std::uint64_t number_of_state(const Relabeling& map, const PhysState& t);

}  // namespace numstate
