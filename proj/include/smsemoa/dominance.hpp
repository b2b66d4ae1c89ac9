#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "smsemoa/core.hpp"

namespace smsemoa {

// u is at least as good as v in every objective (maximization).
inline bool weakly_dominates(const ObjectiveVector& u, const ObjectiveVector& v) {
    return u[0] >= v[0] && u[1] >= v[1];
}

// u weakly dominates v and is strictly better somewhere.
inline bool dominates(const ObjectiveVector& u, const ObjectiveVector& v) {
    return weakly_dominates(u, v) && (u[0] > v[0] || u[1] > v[1]);
}

inline bool incomparable(const ObjectiveVector& u, const ObjectiveVector& v) {
    return !weakly_dominates(u, v) && !weakly_dominates(v, u);
}

// Fronts as index lists into the input; fronts[0] is the non-dominated set.
using Fronts = std::vector<std::vector<std::size_t>>;

// Partitions `points` into successive non-dominated fronts.
//
// Equal vectors never dominate each other and always share a front. Indices
// within each front are in increasing input order. Throws
// std::invalid_argument on empty input.
Fronts non_dominated_sort(std::span<const ObjectiveVector> points);

// Same, writing into `fronts` so repeated calls can reuse its storage.
void non_dominated_sort(std::span<const ObjectiveVector> points, Fronts& fronts);

template <class Genotype>
Fronts non_dominated_sort(std::span<const EvaluatedSolution<Genotype>> solutions) {
    std::vector<ObjectiveVector> points;
    points.reserve(solutions.size());
    for (const auto& s : solutions) points.push_back(s.objectives);
    return non_dominated_sort(std::span<const ObjectiveVector>(points));
}

// Indices of the non-dominated members of `points` (input order).
std::vector<std::size_t> non_dominated_indices(std::span<const ObjectiveVector> points);

// Distinct non-dominated vectors of `points`, sorted by increasing f1.
std::vector<ObjectiveVector> non_dominated_distinct(std::span<const ObjectiveVector> points);

} // namespace smsemoa
