#include "smsemoa/hypervolume.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace smsemoa {

namespace {

WideRational widen(const Rational& r) { return WideRational(r); }

WideRational area(const Rational& width, const Rational& height) { return widen(width) * widen(height); }

// Groups of equal vectors, ordered by increasing f1 (hence decreasing f2).
struct DistinctGroups {
    std::vector<std::size_t> order;  // input indices sorted by vector
    std::vector<std::size_t> starts; // group g spans order[starts[g], starts[g + 1])
};

void group_front(std::span<const ObjectiveVector> front, DistinctGroups& groups) {
    groups.order.resize(front.size());
    groups.starts.clear();
    std::iota(groups.order.begin(), groups.order.end(), std::size_t{0});
    std::sort(groups.order.begin(), groups.order.end(), [&](std::size_t a, std::size_t b) {
        if (front[a][0] != front[b][0]) return front[a][0] < front[b][0];
        if (front[a][1] != front[b][1]) return front[a][1] > front[b][1];
        return a < b;
    });
    for (std::size_t i = 0; i < groups.order.size(); ++i) {
        const auto& cur = front[groups.order[i]];
        if (i == 0) {
            groups.starts.push_back(0);
            continue;
        }
        const auto& prev = front[groups.order[i - 1]];
        if (cur == prev) continue;
        if (!(cur[0] > prev[0] && cur[1] < prev[1])) {
            throw std::logic_error("hypervolume contribution: front contains a dominated pair");
        }
        groups.starts.push_back(i);
    }
    groups.starts.push_back(groups.order.size());
}

void first_front_into(std::span<const ObjectiveVector> front, Rng& rng, ContributionReport& report) {
    report.assign(front.size(), Contribution::finite(0));
    if (front.empty()) {
        return;
    }
    thread_local DistinctGroups groups;
    group_front(front, groups);
    const std::size_t distinct = groups.starts.size() - 1;
    auto group_size = [&](std::size_t g) { return groups.starts[g + 1] - groups.starts[g]; };
    auto member = [&](std::size_t g, std::size_t k) { return groups.order[groups.starts[g] + k]; };
    auto representative = [&](std::size_t g) -> const ObjectiveVector& { return front[member(g, 0)]; };

    // boundary carriers: max f2 is the first group, max f1 the last
    report[member(0, rng.index(group_size(0)))] = Contribution::make_infinite();
    if (distinct > 1) {
        std::size_t last = distinct - 1;
        report[member(last, rng.index(group_size(last)))] = Contribution::make_infinite();
    }
    for (std::size_t g = 1; g + 1 < distinct; ++g) {
        if (group_size(g) != 1) continue; // duplicates contribute nothing
        const auto& self = representative(g);
        const auto& left = representative(g - 1);
        const auto& right = representative(g + 1);
        report[member(g, 0)] = Contribution::finite(area(self[0] - left[0], self[1] - right[1]));
    }
}

void lower_front_into(std::span<const ObjectiveVector> front, ContributionReport& report) {
    report.assign(front.size(), Contribution::finite(0));
    if (front.empty()) {
        return;
    }
    thread_local DistinctGroups groups;
    group_front(front, groups);
    const auto ref = lower_front_reference(front);
    const std::size_t distinct = groups.starts.size() - 1;
    for (std::size_t g = 0; g < distinct; ++g) {
        if (groups.starts[g + 1] - groups.starts[g] != 1) continue;
        std::size_t idx = groups.order[groups.starts[g]];
        const auto& self = front[idx];
        const Rational& left_f1 = g == 0 ? ref[0] : front[groups.order[groups.starts[g - 1]]][0];
        const Rational& right_f2 = g + 1 == distinct ? ref[1] : front[groups.order[groups.starts[g + 1]]][1];
        report[idx] = Contribution::finite(area(self[0] - left_f1, self[1] - right_f2));
    }
}

} // namespace

WideRational hv_2d(std::span<const ObjectiveVector> points, const ObjectiveVector& ref) {
    for (const auto& p : points) {
        if (!(p[0] > ref[0] && p[1] > ref[1])) {
            throw std::invalid_argument("hv_2d: point " + p.to_string() + " is not above reference " +
                                        ref.to_string());
        }
    }
    std::vector<const ObjectiveVector*> sorted;
    sorted.reserve(points.size());
    for (const auto& p : points) sorted.push_back(&p);
    std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) {
        if ((*a)[0] != (*b)[0]) return (*a)[0] > (*b)[0];
        return (*a)[1] > (*b)[1];
    });
    WideRational total{0};
    Rational covered = ref[1];
    for (const auto* p : sorted) {
        if ((*p)[1] > covered) {
            total += area((*p)[0] - ref[0], (*p)[1] - covered);
            covered = (*p)[1];
        }
    }
    return total;
}

ContributionReport contributions_first_front(std::span<const ObjectiveVector> front, Rng& rng) {
    ContributionReport report;
    first_front_into(front, rng, report);
    return report;
}

ObjectiveVector lower_front_reference(std::span<const ObjectiveVector> front) {
    if (front.empty()) {
        throw std::invalid_argument("lower_front_reference: empty front");
    }
    Rational min1 = front[0][0];
    Rational min2 = front[0][1];
    for (const auto& p : front) {
        min1 = std::min(min1, p[0]);
        min2 = std::min(min2, p[1]);
    }
    return {min1 - 1, min2 - 1};
}

ContributionReport contributions_lower_front(std::span<const ObjectiveVector> front) {
    ContributionReport report;
    lower_front_into(front, report);
    return report;
}

std::size_t select_removal(std::span<const ObjectiveVector> front, bool first_front, Rng& rng) {
    if (front.empty()) {
        throw std::invalid_argument("select_removal: empty front");
    }
    if (front.size() == 1) {
        return 0;
    }
    thread_local ContributionReport report;
    thread_local std::vector<std::size_t> candidates;
    if (first_front) {
        first_front_into(front, rng, report);
    } else {
        lower_front_into(front, report);
    }
    const Contribution minimum = *std::min_element(report.begin(), report.end());
    candidates.clear();
    for (std::size_t i = 0; i < report.size(); ++i) {
        if (report[i] == minimum) candidates.push_back(i);
    }
    return candidates.size() == 1 ? candidates.front() : candidates[rng.index(candidates.size())];
}

std::size_t select_removal(std::span<const ObjectiveVector> points, const Fronts& fronts, Rng& rng) {
    const auto& last = fronts.back();
    thread_local std::vector<ObjectiveVector> members;
    members.clear();
    for (std::size_t i : last) members.push_back(points[i]);
    return last[select_removal(members, fronts.size() == 1, rng)];
}

} // namespace smsemoa
