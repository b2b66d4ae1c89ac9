#include "smsemoa/variation.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace smsemoa {

namespace {

void require_same_length(std::size_t a, std::size_t b, const char* op) {
    if (a != b) {
        throw std::invalid_argument(std::string(op) + ": parents differ in length");
    }
}

std::vector<std::uint32_t> copy_order(const Permutation& p) { return {p.order().begin(), p.order().end()}; }

} // namespace

void bitwise_mutate(BitString& x, Rng& rng) {
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (rng.uniform_below(n) == 0) {
            x.flip(i);
        }
    }
}

BitString bitwise_mutation(const BitString& x, Rng& rng) {
    BitString child = x;
    bitwise_mutate(child, rng);
    return child;
}

BitString one_point_crossover_at(const BitString& x, const BitString& y, std::size_t cut) {
    require_same_length(x.size(), y.size(), "one_point_crossover");
    if (cut < 1 || cut > x.size()) {
        throw std::invalid_argument("one_point_crossover: cut must lie in [1, n]");
    }
    BitString child = x;
    for (std::size_t i = cut; i < x.size(); ++i) {
        child.set(i, y[i]);
    }
    return child;
}

BitString one_point_crossover(const BitString& x, const BitString& y, Rng& rng) {
    require_same_length(x.size(), y.size(), "one_point_crossover");
    return one_point_crossover_at(x, y, 1 + rng.index(x.size()));
}

BitString uniform_crossover(const BitString& x, const BitString& y, Rng& rng) {
    require_same_length(x.size(), y.size(), "uniform_crossover");
    BitString child = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (rng.next() >> 63) {
            child.set(i, y[i]);
        }
    }
    return child;
}

std::pair<std::size_t, std::size_t> random_ordered_pair(std::size_t n, Rng& rng) {
    if (n < 2) {
        throw std::invalid_argument("random_ordered_pair: need at least two positions");
    }
    std::size_t i = rng.index(n);
    std::size_t j = rng.index(n - 1);
    if (j >= i) ++j;
    return {std::min(i, j), std::max(i, j)};
}

Permutation order_crossover_at(const Permutation& p, const Permutation& q, std::size_t c1, std::size_t c2) {
    require_same_length(p.size(), q.size(), "order_crossover");
    const std::size_t n = p.size();
    if (!(c1 <= c2 && c2 < n)) {
        throw std::invalid_argument("order_crossover: cuts must satisfy c1 <= c2 < n");
    }
    std::vector<std::uint32_t> child(n);
    std::vector<bool> used(n, false);
    for (std::size_t i = c1; i <= c2; ++i) {
        child[i] = p[i];
        used[p[i]] = true;
    }
    std::size_t slot = (c2 + 1) % n;
    for (std::size_t step = 0; step < n; ++step) {
        std::uint32_t gene = q[(c2 + 1 + step) % n];
        if (used[gene]) continue;
        child[slot] = gene;
        used[gene] = true;
        slot = (slot + 1) % n;
    }
    return PermutationBuilder::adopt(std::move(child));
}

Permutation order_crossover(const Permutation& p, const Permutation& q, Rng& rng) {
    require_same_length(p.size(), q.size(), "order_crossover");
    if (p.size() < 2) {
        return p;
    }
    auto [c1, c2] = random_ordered_pair(p.size(), rng);
    return order_crossover_at(p, q, c1, c2);
}

Permutation cycle_crossover(const Permutation& p, const Permutation& q) {
    require_same_length(p.size(), q.size(), "cycle_crossover");
    const std::size_t n = p.size();
    std::vector<std::size_t> position_in_p(n);
    for (std::size_t i = 0; i < n; ++i) position_in_p[p[i]] = i;

    std::vector<std::uint32_t> child(n);
    std::vector<bool> assigned(n, false);
    std::size_t cycle = 0;
    for (std::size_t start = 0; start < n; ++start) {
        if (assigned[start]) continue;
        ++cycle;
        const bool from_p = cycle % 2 == 1;
        std::size_t pos = start;
        do {
            assigned[pos] = true;
            child[pos] = from_p ? p[pos] : q[pos];
            pos = position_in_p[q[pos]];
        } while (pos != start);
    }
    return PermutationBuilder::adopt(std::move(child));
}

Permutation cycle_crossover(const Permutation& p, const Permutation& q, Rng&) { return cycle_crossover(p, q); }

Permutation two_opt_at(const Permutation& p, std::size_t i, std::size_t j) {
    if (!(i < j && j < p.size())) {
        throw std::invalid_argument("two_opt: need i < j < n");
    }
    auto order = copy_order(p);
    std::reverse(order.begin() + static_cast<std::ptrdiff_t>(i), order.begin() + static_cast<std::ptrdiff_t>(j) + 1);
    return PermutationBuilder::adopt(std::move(order));
}

Permutation two_opt_mutation(const Permutation& p, Rng& rng) {
    if (p.size() < 2) {
        throw std::invalid_argument("two_opt_mutation: need n >= 2");
    }
    auto [i, j] = random_ordered_pair(p.size(), rng);
    return two_opt_at(p, i, j);
}

Permutation two_swap_at(const Permutation& p, std::size_t i, std::size_t j) {
    if (i == j || i >= p.size() || j >= p.size()) {
        throw std::invalid_argument("two_swap: need two distinct positions");
    }
    auto order = copy_order(p);
    std::swap(order[i], order[j]);
    return PermutationBuilder::adopt(std::move(order));
}

Permutation two_swap_mutation(const Permutation& p, Rng& rng) {
    if (p.size() < 2) {
        throw std::invalid_argument("two_swap_mutation: need n >= 2");
    }
    auto [i, j] = random_ordered_pair(p.size(), rng);
    return two_swap_at(p, i, j);
}

} // namespace smsemoa
