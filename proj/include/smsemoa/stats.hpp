#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "smsemoa/core.hpp"
#include "smsemoa/dominance.hpp"
#include "smsemoa/hypervolume.hpp"
#include "smsemoa/practical.hpp"

namespace smsemoa {

struct MeanStd {
    double mean = 0.0;
    double std = 0.0;
};

// Arithmetic mean and sample standard deviation (n - 1 denominator).
// Throws std::invalid_argument for fewer than two samples.
MeanStd mean_std(std::span<const double> samples);

// Mean only; one sample suffices.
double mean_of(std::span<const double> samples);

enum class WilcoxonMethod { automatic, exact, normal };

struct WilcoxonResult {
    double u = 0.0; // Mann-Whitney U of the first sample
    double p = 1.0; // two-sided
    bool exact = false;
};

// Unpaired rank-sum test with midranks for ties. `automatic` enumerates the
// null distribution when the pooled size is at most 12 and there are no ties,
// and otherwise uses the normal approximation with tie-corrected variance and
// a continuity correction. Forcing `exact` on tied data throws.
WilcoxonResult wilcoxon_rank_sum(std::span<const double> xs, std::span<const double> ys,
                                 WilcoxonMethod method = WilcoxonMethod::automatic);

inline constexpr std::size_t exact_wilcoxon_limit = 12;
inline constexpr std::size_t reference_sample_count = 100'000;

// Hypervolume in the problem's own orientation. Points not strictly better
// than `ref` in both objectives are dropped; minimization negates everything
// before measuring.
double hv_report(std::span<const ObjectiveVector> front, const ObjectiveVector& ref, Orientation orientation);

// Reference point from `sample_count` uniform random (repaired) solutions: the
// componentwise worst value over their non-dominated subset, reported in the
// problem's original orientation.
template <class Problem>
ObjectiveVector estimate_reference_point(const Problem& problem, std::size_t sample_count, Rng& rng) {
    if (sample_count == 0) {
        throw std::invalid_argument("estimate_reference_point: need at least one sample");
    }
    std::vector<ObjectiveVector> samples;
    samples.reserve(sample_count);
    for (std::size_t i = 0; i < sample_count; ++i) {
        auto g = problem.random_genotype(rng);
        problem.repair(g);
        samples.push_back(problem.evaluate(g));
    }
    // engine orientation is always maximization
    const auto front = non_dominated_distinct(samples);
    ObjectiveVector worst = front.front();
    for (const auto& p : front) {
        worst[0] = std::min(worst[0], p[0]);
        worst[1] = std::min(worst[1], p[1]);
    }
    return problem.original_objectives(worst);
}

} // namespace smsemoa
