#include "smsemoa/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace smsemoa {

double mean_of(std::span<const double> samples) {
    if (samples.empty()) {
        throw std::invalid_argument("mean of an empty sample");
    }
    return std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(samples.size());
}

MeanStd mean_std(std::span<const double> samples) {
    if (samples.size() < 2) {
        throw std::invalid_argument("standard deviation needs at least two samples");
    }
    const double mean = mean_of(samples);
    double ss = 0.0;
    for (double x : samples) ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / static_cast<double>(samples.size() - 1))};
}

namespace {

struct Ranking {
    std::vector<double> ranks; // pooled order: xs first, then ys
    double tie_term = 0.0;     // sum of t^3 - t over tie groups
    bool has_ties = false;
};

Ranking midranks(std::span<const double> xs, std::span<const double> ys) {
    std::vector<double> pooled(xs.begin(), xs.end());
    pooled.insert(pooled.end(), ys.begin(), ys.end());
    std::vector<std::size_t> order(pooled.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pooled[a] < pooled[b]; });

    Ranking r;
    r.ranks.resize(pooled.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j < order.size() && pooled[order[j]] == pooled[order[i]]) ++j;
        const double rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t k = i; k < j; ++k) r.ranks[order[k]] = rank;
        const auto t = static_cast<double>(j - i);
        if (j - i > 1) {
            r.has_ties = true;
            r.tie_term += t * t * t - t;
        }
        i = j;
    }
    return r;
}

// Two-sided p from the exact null distribution of U for n1 of N untied ranks.
double exact_p(std::size_t n1, std::size_t n2, double u) {
    const std::size_t max_u = n1 * n2;
    // ways[k][s]: subsets of size k of the ranks seen so far with U-sum s
    std::vector<std::vector<double>> ways(n1 + 1, std::vector<double>(max_u + 1, 0.0));
    ways[0][0] = 1.0;
    // a subset's U equals the number of (chosen, unchosen) pairs where the
    // chosen rank is larger; adding rank r+1 as the k-th chosen element
    // contributes (r - (k - 1)) unchosen smaller ranks
    const std::size_t total = n1 + n2;
    for (std::size_t r = 0; r < total; ++r) {
        for (std::size_t k = std::min(n1, r + 1); k >= 1; --k) {
            const std::size_t smaller_unchosen = r - (k - 1);
            if (smaller_unchosen > n2) continue;
            for (std::size_t s = max_u + 1; s-- > smaller_unchosen;) {
                ways[k][s] += ways[k - 1][s - smaller_unchosen];
            }
        }
    }
    const auto& dist = ways[n1];
    const double all = std::accumulate(dist.begin(), dist.end(), 0.0);
    double lower = 0.0;
    double upper = 0.0;
    for (std::size_t s = 0; s <= max_u; ++s) {
        const auto v = static_cast<double>(s);
        if (v <= u + 1e-9) lower += dist[s];
        if (v >= u - 1e-9) upper += dist[s];
    }
    return std::min(1.0, 2.0 * std::min(lower, upper) / all);
}

double normal_p(std::size_t n1, std::size_t n2, double u, double tie_term) {
    const auto a = static_cast<double>(n1);
    const auto b = static_cast<double>(n2);
    const double n = a + b;
    const double mean = a * b / 2.0;
    double variance = a * b / 12.0 * (n + 1.0);
    if (n > 1.0) {
        variance -= a * b / 12.0 * tie_term / (n * (n - 1.0));
    }
    if (variance <= 0.0) {
        return 1.0; // every value tied
    }
    const double z = std::max(0.0, std::abs(u - mean) - 0.5) / std::sqrt(variance);
    return std::min(1.0, std::erfc(z / std::sqrt(2.0)));
}

} // namespace

WilcoxonResult wilcoxon_rank_sum(std::span<const double> xs, std::span<const double> ys, WilcoxonMethod method) {
    if (xs.empty() || ys.empty()) {
        throw std::invalid_argument("rank-sum test needs two nonempty samples");
    }
    const auto ranking = midranks(xs, ys);
    const auto n1 = xs.size();
    const auto n2 = ys.size();
    double rank_sum = 0.0;
    for (std::size_t i = 0; i < n1; ++i) rank_sum += ranking.ranks[i];
    const auto a = static_cast<double>(n1);

    WilcoxonResult result;
    result.u = rank_sum - a * (a + 1.0) / 2.0;
    bool use_exact = false;
    switch (method) {
    case WilcoxonMethod::automatic: use_exact = n1 + n2 <= exact_wilcoxon_limit && !ranking.has_ties; break;
    case WilcoxonMethod::exact:
        if (ranking.has_ties) {
            throw std::invalid_argument("exact rank-sum test requires untied samples");
        }
        use_exact = true;
        break;
    case WilcoxonMethod::normal: break;
    }
    result.exact = use_exact;
    result.p = use_exact ? exact_p(n1, n2, result.u) : normal_p(n1, n2, result.u, ranking.tie_term);
    return result;
}

double hv_report(std::span<const ObjectiveVector> front, const ObjectiveVector& ref, Orientation orientation) {
    const bool flip = orientation == Orientation::minimize;
    const ObjectiveVector r = flip ? ref.negated() : ref;
    std::vector<ObjectiveVector> kept;
    for (const auto& p : front) {
        const ObjectiveVector q = flip ? p.negated() : p;
        if (q[0] > r[0] && q[1] > r[1]) kept.push_back(q);
    }
    if (kept.empty()) {
        return 0.0;
    }
    return hv_2d(kept, r).to_double();
}

} // namespace smsemoa
