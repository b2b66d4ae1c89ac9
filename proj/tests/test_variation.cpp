#include <doctest.h>

#include <cmath>
#include <map>

#include "smsemoa/variation.hpp"

using namespace smsemoa;

namespace {

bool within_3sigma(double count, double trials, double p) {
    return std::abs(count - trials * p) <= 3 * std::sqrt(trials * p * (1 - p));
}

Permutation perm(const char* text) { return Permutation::from_string(text); }

} // namespace

TEST_CASE("bitwise mutation rate") {
    Rng rng(1);
    const auto one = BitString::from_string("0");
    for (int i = 0; i < 100; ++i) REQUIRE(bitwise_mutation(one, rng).to_string() == "1");

    const std::size_t n = 20;
    const BitString zero(n);
    const int trials = 100000;
    std::vector<int> per_bit(n, 0);
    int unchanged = 0;
    for (int t = 0; t < trials; ++t) {
        const auto child = bitwise_mutation(zero, rng);
        for (std::size_t i = 0; i < n; ++i) per_bit[i] += child[i] ? 1 : 0;
        if (child.count_ones() == 0) ++unchanged;
    }
    CHECK(zero.count_ones() == 0);
    for (int c : per_bit) CHECK(within_3sigma(c, trials, 1.0 / n));
    CHECK(within_3sigma(unchanged, trials, std::pow(1.0 - 1.0 / n, static_cast<double>(n))));
}

TEST_CASE("one-point crossover") {
    const auto x = BitString::from_string("111");
    const auto y = BitString::from_string("000");
    CHECK(one_point_crossover_at(x, y, 1).to_string() == "100");
    CHECK(one_point_crossover_at(x, y, 3).to_string() == "111");
    CHECK_THROWS_AS(one_point_crossover_at(x, y, 0), std::invalid_argument);
    CHECK_THROWS_AS(one_point_crossover_at(x, BitString(2), 1), std::invalid_argument);
    for (std::size_t cut = 1; cut <= 3; ++cut) CHECK(one_point_crossover_at(x, x, cut) == x);

    // cut uniform on [1, n]
    Rng rng(2);
    const std::size_t n = 8;
    const BitString ones(n, true);
    const BitString zeros(n);
    std::map<std::size_t, int> cuts;
    const int trials = 80000;
    for (int t = 0; t < trials; ++t) ++cuts[one_point_crossover(ones, zeros, rng).count_ones()];
    CHECK(cuts.size() == n);
    for (const auto& [cut, c] : cuts) {
        CHECK(cut >= 1);
        CHECK(within_3sigma(c, trials, 1.0 / n));
    }
}

TEST_CASE("uniform crossover") {
    Rng rng(3);
    const auto x = BitString::from_string("1010110");
    CHECK(uniform_crossover(x, x, rng) == x);
    const BitString ones(10, true);
    const BitString zeros(10);
    int taken = 0;
    const int trials = 20000;
    for (int t = 0; t < trials; ++t) taken += static_cast<int>(uniform_crossover(ones, zeros, rng).count_ones());
    CHECK(within_3sigma(taken, trials * 10.0, 0.5));
    CHECK_THROWS_AS(uniform_crossover(ones, BitString(3), rng), std::invalid_argument);
}

TEST_CASE("order crossover hand trace") {
    // keep p[2..3]; fill slots 4, 0, 1 from q read from index 4 on, skipping 2 and 3
    CHECK(order_crossover_at(perm("0 1 2 3 4"), perm("4 3 2 1 0"), 2, 3) == perm("4 1 2 3 0"));
    CHECK(order_crossover_at(perm("0 1 2 3 4"), perm("4 3 2 1 0"), 0, 4) == perm("0 1 2 3 4"));
    CHECK(order_crossover_at(perm("2 0 3 1"), perm("3 1 0 2"), 1, 1) == perm("1 0 2 3"));
    Rng rng(4);
    const auto p = perm("3 1 4 0 2");
    for (int i = 0; i < 100; ++i) REQUIRE(order_crossover(p, p, rng) == p);
    CHECK_THROWS_AS(order_crossover_at(p, p, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(order_crossover_at(p, p, 0, 5), std::invalid_argument);
}

TEST_CASE("cycle crossover hand trace") {
    CHECK(cycle_crossover(perm("0 1 2 3"), perm("1 0 3 2")) == perm("0 1 3 2"));
    // single cycle: child is p
    CHECK(cycle_crossover(perm("0 1 2 3"), perm("1 2 3 0")) == perm("0 1 2 3"));
    // three cycles {0}, {1,2}, {3}: p, q, p
    CHECK(cycle_crossover(perm("0 1 2 3"), perm("0 2 1 3")) == perm("0 2 1 3"));
    const auto p = perm("4 2 0 1 3");
    CHECK(cycle_crossover(p, p) == p);
}

TEST_CASE("two-opt and two-swap") {
    CHECK(two_opt_at(perm("0 1 2 3 4"), 1, 3) == perm("0 3 2 1 4"));
    CHECK(two_opt_at(perm("0 1 2 3 4"), 0, 4) == perm("4 3 2 1 0"));
    CHECK_THROWS_AS(two_opt_at(perm("0 1 2"), 2, 2), std::invalid_argument);
    CHECK(two_swap_at(perm("0 1 2 3"), 0, 2) == perm("2 1 0 3"));
    CHECK_THROWS_AS(two_swap_at(perm("0 1 2"), 1, 1), std::invalid_argument);
    Rng rng(5);
    CHECK_THROWS_AS(two_opt_mutation(perm("0"), rng), std::invalid_argument);
    CHECK_THROWS_AS(two_swap_mutation(perm("0"), rng), std::invalid_argument);
    CHECK(two_swap_mutation(perm("0 1"), rng) == perm("1 0"));
}

TEST_CASE("random ordered pairs are uniform") {
    Rng rng(6);
    const std::size_t n = 5;
    std::map<std::pair<std::size_t, std::size_t>, int> counts;
    const int trials = 100000;
    for (int t = 0; t < trials; ++t) {
        const auto pr = random_ordered_pair(n, rng);
        REQUIRE(pr.first < pr.second);
        REQUIRE(pr.second < n);
        ++counts[pr];
    }
    CHECK(counts.size() == 10);
    for (const auto& [pr, c] : counts) CHECK(within_3sigma(c, trials, 0.1));
    CHECK_THROWS_AS(random_ordered_pair(1, rng), std::invalid_argument);
}

TEST_CASE("permutation operators keep bijections") {
    Rng rng(7);
    for (int t = 0; t < 100000; ++t) {
        const std::size_t n = 2 + rng.index(30);
        const auto p = random_permutation(n, rng);
        const auto q = random_permutation(n, rng);
        const auto ox = order_crossover(p, q, rng);
        const auto cx = cycle_crossover(p, q, rng);
        REQUIRE(Permutation::is_bijection(ox.order()));
        REQUIRE(Permutation::is_bijection(cx.order()));
        REQUIRE(Permutation::is_bijection(two_opt_mutation(p, rng).order()));
        REQUIRE(Permutation::is_bijection(two_swap_mutation(p, rng).order()));
        for (std::size_t i = 0; i < n; ++i) REQUIRE((cx[i] == p[i] || cx[i] == q[i]));
    }
}
