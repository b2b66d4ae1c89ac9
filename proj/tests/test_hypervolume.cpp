#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "oracles.hpp"
#include "smsemoa/hypervolume.hpp"

using namespace smsemoa;

namespace {

ObjectiveVector ov(Rational a, Rational b) { return {a, b}; }

// Mutually non-dominated front with optional duplicates, shuffled.
std::vector<ObjectiveVector> random_front(Rng& rng, std::size_t size, bool fractional) {
    std::size_t distinct = 1 + rng.index(size);
    std::vector<std::int64_t> xs;
    std::vector<std::int64_t> ys;
    std::int64_t x = static_cast<std::int64_t>(rng.uniform_below(5));
    std::int64_t y = 1000;
    for (std::size_t i = 0; i < distinct; ++i) {
        x += 1 + static_cast<std::int64_t>(rng.uniform_below(9));
        y -= 1 + static_cast<std::int64_t>(rng.uniform_below(9));
        xs.push_back(x);
        ys.push_back(y);
    }
    const std::int64_t den = fractional ? 1 + static_cast<std::int64_t>(rng.uniform_below(7)) : 1;
    std::vector<ObjectiveVector> front;
    for (std::size_t i = 0; i < distinct; ++i) front.push_back(ov(Rational(xs[i], den), Rational(ys[i], den)));
    while (front.size() < size) front.push_back(front[rng.index(distinct)]);
    std::shuffle(front.begin(), front.end(), rng);
    return front;
}

std::vector<ObjectiveVector> without(const std::vector<ObjectiveVector>& pts, std::size_t skip) {
    std::vector<ObjectiveVector> out;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (i != skip) out.push_back(pts[i]);
    return out;
}

WideRational hv_or_zero(const std::vector<ObjectiveVector>& pts, const ObjectiveVector& ref) {
    return pts.empty() ? WideRational(0) : hv_2d(pts, ref);
}

} // namespace

TEST_CASE("hv examples") {
    const std::vector<ObjectiveVector> three{ov(1, 3), ov(2, 2), ov(3, 1)};
    CHECK(hv_2d(three, ov(0, 0)) == WideRational(6));
    CHECK(hv_2d(std::vector<ObjectiveVector>{ov(4, 7)}, ov(0, 0)) == WideRational(28));
    CHECK(hv_2d(std::vector<ObjectiveVector>{ov(Rational(1, 2), Rational(1, 3))}, ov(0, 0)) == WideRational(1, 6));
    CHECK(hv_2d(std::vector<ObjectiveVector>{}, ov(0, 0)) == WideRational(0));
    CHECK_THROWS_AS(hv_2d(std::vector<ObjectiveVector>{ov(0, 3)}, ov(0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(hv_2d(std::vector<ObjectiveVector>{ov(2, 3), ov(5, -1)}, ov(0, 0)), std::invalid_argument);
    // dominated and duplicate points add nothing
    const std::vector<ObjectiveVector> noisy{ov(1, 3), ov(2, 2), ov(3, 1), ov(1, 1), ov(2, 2)};
    CHECK(hv_2d(noisy, ov(0, 0)) == WideRational(6));
}

TEST_CASE("hv matches inclusion-exclusion") {
    Rng rng(100);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng.index(8);
        std::vector<ObjectiveVector> pts;
        for (std::size_t i = 0; i < n; ++i) {
            pts.push_back(ov(Rational(1 + static_cast<std::int64_t>(rng.uniform_below(30)), 1 + rng.index(4)),
                             Rational(1 + static_cast<std::int64_t>(rng.uniform_below(30)), 1 + rng.index(4))));
        }
        const ObjectiveVector ref{Rational(-static_cast<std::int64_t>(rng.uniform_below(3)), 2), Rational(0)};
        REQUIRE(hv_2d(pts, ref) == oracle::hv_inclusion_exclusion(pts, ref));
    }
}

TEST_CASE("hv within 3 sigma of a Monte Carlo estimate") {
    Rng rng(7);
    for (int trial = 0; trial < 2; ++trial) {
        std::vector<ObjectiveVector> pts;
        const std::size_t n = 64;
        for (std::size_t i = 0; i < n; ++i) {
            pts.push_back(ov(Rational(1 + static_cast<std::int64_t>(rng.uniform_below(100))),
                             Rational(1 + static_cast<std::int64_t>(rng.uniform_below(100)))));
        }
        const double box = 100.0 * 100.0;
        const auto front = non_dominated_distinct(pts);
        const int samples = 1'000'000;
        int inside = 0;
        for (int s = 0; s < samples; ++s) {
            const double x = rng.uniform01() * 100.0;
            const double y = rng.uniform01() * 100.0;
            for (const auto& p : front) {
                if (p[0].to_double() >= x && p[1].to_double() >= y) {
                    ++inside;
                    break;
                }
            }
        }
        const double p_hat = static_cast<double>(inside) / samples;
        const double exact = hv_2d(pts, ov(0, 0)).to_double() / box;
        const double sigma = std::sqrt(exact * (1 - exact) / samples);
        CHECK(std::abs(p_hat - exact) <= 3 * sigma);
    }
}

TEST_CASE("first-front contributions") {
    Rng rng(1);
    const std::vector<ObjectiveVector> three{ov(1, 3), ov(2, 2), ov(3, 1)};
    CHECK(contributions_first_front(three, rng) ==
          ContributionReport{Contribution::make_infinite(), Contribution::finite(WideRational(1)),
                             Contribution::make_infinite()});

    // one random carrier for a duplicated single vector
    std::map<std::size_t, int> carrier;
    for (int t = 0; t < 2000; ++t) {
        const std::vector<ObjectiveVector> dup{ov(2, 2), ov(2, 2)};
        const auto r = contributions_first_front(dup, rng);
        REQUIRE(std::count(r.begin(), r.end(), Contribution::make_infinite()) == 1);
        REQUIRE(std::count(r.begin(), r.end(), Contribution::finite(WideRational(0))) == 1);
        ++carrier[r[0].infinite ? 0 : 1];
    }
    CHECK(carrier[0] > 850);
    CHECK(carrier[1] > 850);

    const std::vector<ObjectiveVector> bad{ov(1, 3), ov(0, 2)};
    CHECK_THROWS_AS(contributions_first_front(bad, rng), std::logic_error);
}

TEST_CASE("boundary duplicates") {
    Rng rng(3);
    const std::vector<ObjectiveVector> front{ov(1, 3), ov(3, 1), ov(1, 3), ov(2, 2), ov(3, 1)};
    for (int t = 0; t < 200; ++t) {
        const auto r = contributions_first_front(front, rng);
        REQUIRE(std::count(r.begin(), r.end(), Contribution::make_infinite()) == 2);
        REQUIRE((r[0].infinite != r[2].infinite));
        REQUIRE((r[1].infinite != r[4].infinite));
        REQUIRE(r[3] == Contribution::finite(WideRational(1)));
    }
}

TEST_CASE("lower-front contributions") {
    const std::vector<ObjectiveVector> two{ov(1, 3), ov(3, 1)};
    CHECK(lower_front_reference(two) == ov(0, 0));
    CHECK(contributions_lower_front(two) ==
          ContributionReport{Contribution::finite(WideRational(2)), Contribution::finite(WideRational(2))});
    const std::vector<ObjectiveVector> dup{ov(1, 3), ov(1, 3), ov(3, 1)};
    const auto r = contributions_lower_front(dup);
    CHECK(r[0] == Contribution::finite(WideRational(0)));
    CHECK(r[1] == Contribution::finite(WideRational(0)));
    CHECK(r[2] == Contribution::finite(WideRational(2)));
    const std::vector<ObjectiveVector> single{ov(5, 5)};
    CHECK(contributions_lower_front(single) == ContributionReport{Contribution::finite(WideRational(1))});
}

TEST_CASE("contributions equal hypervolume differences") {
    Rng rng(2718);
    for (int trial = 0; trial < 400; ++trial) {
        const auto front = random_front(rng, 1 + rng.index(32), trial % 3 == 0);

        const auto lower = contributions_lower_front(front);
        const auto vref = lower_front_reference(front);
        const auto total_lower = hv_2d(front, vref);
        for (std::size_t i = 0; i < front.size(); ++i) {
            REQUIRE_FALSE(lower[i].infinite);
            REQUIRE(lower[i].value == total_lower - hv_or_zero(without(front, i), vref));
        }

        // interior exclusive areas do not depend on the reference
        const auto first = contributions_first_front(front, rng);
        ObjectiveVector ref = vref;
        ref[0] -= Rational(5);
        ref[1] -= Rational(3);
        const auto total = hv_2d(front, ref);
        int infinite = 0;
        for (std::size_t i = 0; i < front.size(); ++i) {
            if (first[i].infinite) {
                ++infinite;
                continue;
            }
            REQUIRE(first[i].value == total - hv_or_zero(without(front, i), ref));
        }
        const auto distinct = non_dominated_distinct(front).size();
        REQUIRE(infinite == (distinct == 1 ? 1 : 2));
    }
}

TEST_CASE("contribution ordering") {
    CHECK(Contribution::make_infinite() > Contribution::finite(WideRational(1'000'000'000)));
    CHECK(Contribution::finite(WideRational(1)) < Contribution::finite(WideRational(2)));
    CHECK(Contribution::make_infinite() == Contribution::make_infinite());
}

TEST_CASE("removal examples") {
    Rng rng(12);
    const std::vector<ObjectiveVector> dup{ov(1, 3), ov(2, 2), ov(3, 1), ov(2, 2)};
    for (int t = 0; t < 100; ++t) {
        const auto r = select_removal(dup, true, rng);
        REQUIRE((r == 1 || r == 3));
    }

    const std::vector<ObjectiveVector> single{ov(4, 4)};
    CHECK(select_removal(single, true, rng) == 0);

    const std::vector<ObjectiveVector> pts{ov(1, 4), ov(2, 3), ov(4, 1), ov(1, 1)};
    const auto fronts = non_dominated_sort(pts);
    REQUIRE(fronts.size() == 2);
    CHECK(select_removal(pts, fronts, rng) == 3);

    // boundaries never go; the middle point is the only finite entry
    const std::vector<ObjectiveVector> three{ov(1, 9), ov(2, 2), ov(9, 1)};
    for (int t = 0; t < 100; ++t) REQUIRE(select_removal(three, true, rng) == 1);
}

TEST_CASE("removal ties are broken uniformly") {
    Rng rng(5);
    // (2,3) and (3,2) both contribute 1
    const std::vector<ObjectiveVector> front{ov(1, 4), ov(2, 3), ov(3, 2), ov(4, 1)};
    std::array<int, 4> counts{};
    const int trials = 20000;
    for (int t = 0; t < trials; ++t) ++counts[select_removal(front, true, rng)];
    CHECK(counts[0] == 0);
    CHECK(counts[3] == 0);
    CHECK(std::abs(counts[1] - trials / 2) <= 3 * std::sqrt(trials * 0.25));
}

TEST_CASE("argmin is invariant under positive per-objective scaling") {
    Rng rng(44);
    for (int trial = 0; trial < 200; ++trial) {
        const auto front = random_front(rng, 2 + rng.index(20), false);
        const std::int64_t c1 = 1 + static_cast<std::int64_t>(rng.uniform_below(9));
        const Rational c2(1 + static_cast<std::int64_t>(rng.uniform_below(9)), 1 + rng.index(5));
        std::vector<ObjectiveVector> scaled;
        for (const auto& p : front) scaled.push_back(ov(p[0] * Rational(c1), p[1] * c2));

        Rng a(trial);
        Rng b(trial);
        const auto ca = contributions_first_front(front, a);
        const auto cb = contributions_first_front(scaled, b);
        auto argmin = [](const ContributionReport& r) {
            std::vector<std::size_t> out;
            const auto m = *std::min_element(r.begin(), r.end());
            for (std::size_t i = 0; i < r.size(); ++i)
                if (r[i] == m) out.push_back(i);
            return out;
        };
        REQUIRE(argmin(ca) == argmin(cb));
        Rng ra(trial + 1);
        Rng rb(trial + 1);
        REQUIRE(select_removal(front, true, ra) == select_removal(scaled, true, rb));
    }
}
