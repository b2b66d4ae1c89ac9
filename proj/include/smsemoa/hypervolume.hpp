#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "smsemoa/core.hpp"
#include "smsemoa/dominance.hpp"

namespace smsemoa {

// Exact area dominated by `points` and bounded below by `ref` (maximization).
//
// Every point must be strictly above `ref` in both objectives, otherwise
// std::invalid_argument is thrown. Dominated and duplicate points do not
// change the result.
WideRational hv_2d(std::span<const ObjectiveVector> points, const ObjectiveVector& ref);

// Hypervolume contribution of one front member. `infinite` marks a preserved
// boundary solution and orders above every finite value.
struct Contribution {
    bool infinite = false;
    WideRational value{};

    static Contribution make_infinite() { return {true, {}}; }
    static Contribution finite(WideRational v) { return {false, v}; }

    friend bool operator==(const Contribution&, const Contribution&) = default;
    friend std::strong_ordering operator<=>(const Contribution& a, const Contribution& b) {
        if (a.infinite || b.infinite) {
            return a.infinite <=> b.infinite;
        }
        return a.value <=> b.value;
    }
};

// Contributions aligned with the input order of the front.
using ContributionReport = std::vector<Contribution>;

// First-front rule without a reference point.
//
// Among distinct vectors sorted by f1, one solution carrying the largest f1
// and one carrying the largest f2 are preserved (INFINITE); the carrier is
// drawn uniformly when several solutions share the vector. Every other
// solution whose vector is duplicated gets 0. Each remaining interior vector
// gets (f1 - f1(left)) * (f2 - f2(right)).
//
// Throws std::logic_error if a member dominates another.
ContributionReport contributions_first_front(std::span<const ObjectiveVector> front, Rng& rng);

// Dominated-front rule: exclusive areas against the virtual reference
// (min f1 - 1, min f2 - 1) of the front, no INFINITE entries.
ContributionReport contributions_lower_front(std::span<const ObjectiveVector> front);

// Virtual reference used by contributions_lower_front.
ObjectiveVector lower_front_reference(std::span<const ObjectiveVector> front);

// Position (within `front`) of the solution to discard: a minimum-contribution
// member, ties broken uniformly at random.
std::size_t select_removal(std::span<const ObjectiveVector> front, bool first_front, Rng& rng);

// Index into `points` of the solution that survival selection discards, given
// the non-dominated sorting of `points`.
std::size_t select_removal(std::span<const ObjectiveVector> points, const Fronts& fronts, Rng& rng);

} // namespace smsemoa
