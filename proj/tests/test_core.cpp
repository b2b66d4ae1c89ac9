#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "smsemoa/core.hpp"

using namespace smsemoa;

namespace {

// 3 sigma band of a binomial count
bool within_3sigma(double count, double trials, double p) {
    const double sigma = std::sqrt(trials * p * (1 - p));
    return std::abs(count - trials * p) <= 3 * sigma;
}

} // namespace

TEST_CASE("run seed derivation") {
    // first output of the reference SplitMix64 stream started at state 0
    CHECK(derive_run_seed(0, 0) == 0xE220A8397B1DCDAFULL);
    CHECK(derive_run_seed(42, 0) != derive_run_seed(42, 1));
    CHECK(derive_run_seed(42, 7) == derive_run_seed(42, 7));

    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 10000; ++i) seen.insert(derive_run_seed(123456789, i));
    CHECK(seen.size() == 10000);
}

TEST_CASE("rng stream matches reference splitmix64") {
    // reference outputs for seed 1234567
    Rng rng(1234567);
    CHECK(rng.next() == 6457827717110365317ULL);
    CHECK(rng.next() == 3203168211198807973ULL);
    CHECK(rng.next() == 9817491932198370423ULL);
}

TEST_CASE("rng is deterministic per seed") {
    Rng a(99);
    Rng b(99);
    for (int i = 0; i < 1000; ++i) REQUIRE(a.next() == b.next());
}

TEST_CASE("uniform_below") {
    Rng rng(5);
    CHECK_THROWS_AS(rng.uniform_below(0), std::invalid_argument);
    for (int i = 0; i < 1000; ++i) CHECK(rng.uniform_below(1) == 0);

    std::array<int, 7> counts{};
    const int trials = 700000;
    for (int i = 0; i < trials; ++i) {
        auto v = rng.uniform_below(7);
        REQUIRE(v < 7);
        ++counts[v];
    }
    for (int c : counts) CHECK(within_3sigma(c, trials, 1.0 / 7));
}

TEST_CASE("bernoulli and uniform01") {
    Rng rng(11);
    int hits = 0;
    const int trials = 300000;
    for (int i = 0; i < trials; ++i) hits += rng.bernoulli(1, 3) ? 1 : 0;
    CHECK(within_3sigma(hits, trials, 1.0 / 3));

    for (int i = 0; i < 10000; ++i) {
        double u = rng.uniform01();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
    }
    CHECK(rng.bernoulli(0, 5) == false);
    CHECK(rng.bernoulli(5, 5) == true);
}

TEST_CASE("random bitstring") {
    Rng rng(1);
    CHECK_THROWS_AS(random_bitstring(0, rng), std::invalid_argument);
    auto x = random_bitstring(8, rng);
    CHECK(x.size() == 8);
    for (auto b : x.bits()) CHECK((b == 0 || b == 1));

    Rng r1(77);
    Rng r2(77);
    CHECK(random_bitstring(64, r1) == random_bitstring(64, r2));

    Rng r3(3);
    int ones = 0;
    for (int i = 0; i < 1000; ++i) ones += static_cast<int>(random_bitstring(100, r3).count_ones());
    CHECK(within_3sigma(ones, 100000, 0.5));
}

TEST_CASE("random permutation") {
    Rng rng(2);
    CHECK_THROWS_AS(random_permutation(0, rng), std::invalid_argument);
    CHECK(random_permutation(1, rng) == Permutation::identity(1));

    std::map<std::string, int> counts;
    const int trials = 600000;
    for (int i = 0; i < trials; ++i) ++counts[random_permutation(3, rng).to_string()];
    CHECK(counts.size() == 6);
    for (const auto& [perm, c] : counts) {
        CAPTURE(perm);
        CHECK(within_3sigma(c, trials, 1.0 / 6));
    }

    for (int i = 0; i < 1000; ++i) {
        auto p = random_permutation(1 + rng.index(50), rng);
        REQUIRE(Permutation::is_bijection(p.order()));
    }
}

TEST_CASE("bitstring basics") {
    auto x = BitString::from_string("10110");
    CHECK(x.size() == 5);
    CHECK(x.count_ones() == 3);
    CHECK(x.count_zeros() == 2);
    CHECK(x.complement().to_string() == "01001");
    CHECK(x.to_string() == "10110");
    x.flip(0);
    CHECK(x.to_string() == "00110");
    CHECK_THROWS_AS(BitString::from_string("10a"), std::invalid_argument);
    CHECK_THROWS_AS(BitString(std::vector<std::uint8_t>{0, 2}), std::invalid_argument);
}

TEST_CASE("permutation validation and text form") {
    CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({1, 2, 3}), std::invalid_argument);
    auto p = Permutation::from_string("0 3 1 2");
    CHECK(p.to_string() == "0 3 1 2");
    CHECK(p[1] == 3);
    CHECK(Permutation::from_string(p.to_string()) == p);
    CHECK_THROWS_AS(Permutation::from_string("0 x"), std::invalid_argument);
}

TEST_CASE("objective vectors") {
    ObjectiveVector v{Rational(201, 20), Rational(3)};
    CHECK(v.negated() == ObjectiveVector{Rational(-201, 20), Rational(-3)});
    CHECK(v.to_string() == "(201/20, 3)");
    CHECK(v == ObjectiveVector{Rational(402, 40), Rational(6, 2)});
}
