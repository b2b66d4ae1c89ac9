#include "smsemoa/dominance.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace smsemoa {

Fronts non_dominated_sort(std::span<const ObjectiveVector> points) {
    Fronts fronts;
    non_dominated_sort(points, fronts);
    return fronts;
}

void non_dominated_sort(std::span<const ObjectiveVector> points, Fronts& fronts) {
    if (points.empty()) {
        throw std::invalid_argument("non_dominated_sort: empty input");
    }
    // Two-objective sweep: visit points by decreasing f1 (then f2). A point is
    // dominated by a front iff the front's most recent member (its largest f2
    // so far) weakly dominates it and differs from it, and that predicate is
    // monotone across fronts, so the target front is found by binary search.
    thread_local std::vector<std::size_t> order;
    thread_local std::vector<std::size_t> tail; // last member of each front
    order.resize(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& pa = points[a];
        const auto& pb = points[b];
        if (pa[0] != pb[0]) return pa[0] > pb[0];
        if (pa[1] != pb[1]) return pa[1] > pb[1];
        return a < b;
    });

    // inner vectors keep their capacity between calls
    std::size_t used = 0;
    tail.clear();
    for (std::size_t idx : order) {
        const auto& p = points[idx];
        auto blocked = [&](std::size_t front) {
            const auto& last = points[tail[front]];
            return last[1] >= p[1] && last != p;
        };
        std::size_t lo = 0;
        std::size_t hi = used;
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (blocked(mid)) {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        if (lo == used) {
            if (used == fronts.size()) fronts.emplace_back();
            fronts[used++].clear();
            tail.push_back(idx);
        }
        fronts[lo].push_back(idx);
        tail[lo] = idx;
    }
    fronts.resize(used);
    for (auto& front : fronts) {
        std::sort(front.begin(), front.end());
    }
}

std::vector<std::size_t> non_dominated_indices(std::span<const ObjectiveVector> points) {
    if (points.empty()) {
        return {};
    }
    return non_dominated_sort(points).front();
}

std::vector<ObjectiveVector> non_dominated_distinct(std::span<const ObjectiveVector> points) {
    std::vector<ObjectiveVector> out;
    for (std::size_t i : non_dominated_indices(points)) {
        out.push_back(points[i]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace smsemoa
