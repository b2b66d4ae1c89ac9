#include "smsemoa/benchmark.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace smsemoa {

namespace {

using Int = std::int64_t;

Rational ojzj_objective(Int ones, Int n, Int k, bool all_set) {
    if (ones <= n - k || all_set) {
        return k + ones;
    }
    return n - ones;
}

Rational ojzjss_objective(Int ones, Int n, Int k, Int a) {
    if (ones == k - a) {
        return Rational(2 * k * n + 1, n);
    }
    if (ones == n - (k - a)) {
        return Rational(n * n - 1, n);
    }
    return ojzj_objective(ones, n, k, ones == n);
}

void require_size(const BitString& x) {
    if (x.size() == 0) {
        throw std::invalid_argument("benchmark evaluation of an empty bit string");
    }
}

} // namespace

std::string to_string(BenchmarkKind kind) {
    switch (kind) {
    case BenchmarkKind::ojzj: return "OJZJ";
    case BenchmarkKind::ojzj_ss: return "OJZJ_SS";
    case BenchmarkKind::omm: return "OMM";
    case BenchmarkKind::lotz: return "LOTZ";
    }
    return "?";
}

BenchmarkKind parse_benchmark_kind(const std::string& name) {
    std::string lower;
    for (char c : name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lower == "ojzj") return BenchmarkKind::ojzj;
    if (lower == "ojzj_ss" || lower == "ojzjss") return BenchmarkKind::ojzj_ss;
    if (lower == "omm" || lower == "oneminmax") return BenchmarkKind::omm;
    if (lower == "lotz") return BenchmarkKind::lotz;
    throw std::invalid_argument("unknown benchmark '" + name + "'");
}

bool BenchmarkSpec::is_valid() const {
    if (n == 0) return false;
    switch (kind) {
    case BenchmarkKind::ojzj: return k >= 2 && 2 * k < n;
    case BenchmarkKind::ojzj_ss: return k >= 3 && 2 * k < n && a >= 2 && a < k;
    case BenchmarkKind::omm:
    case BenchmarkKind::lotz: return true;
    }
    return false;
}

void BenchmarkSpec::validate() const {
    if (!is_valid()) {
        throw std::invalid_argument("invalid benchmark parameters for " + to_string(kind) +
                                    ": n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                    " a=" + std::to_string(a));
    }
}

std::string BenchmarkSpec::id() const {
    switch (kind) {
    case BenchmarkKind::ojzj: return "OJZJ_k" + std::to_string(k);
    case BenchmarkKind::ojzj_ss: return "OJZJ_SS_k" + std::to_string(k) + "_a" + std::to_string(a);
    default: return to_string(kind);
    }
}

ObjectiveVector ojzj_eval(const BitString& x, std::size_t k) {
    require_size(x);
    const auto n = static_cast<Int>(x.size());
    const auto ones = static_cast<Int>(x.count_ones());
    const auto zeros = n - ones;
    const auto kk = static_cast<Int>(k);
    return {ojzj_objective(ones, n, kk, ones == n), ojzj_objective(zeros, n, kk, zeros == n)};
}

ObjectiveVector ojzjss_eval(const BitString& x, std::size_t k, std::size_t a) {
    require_size(x);
    const auto n = static_cast<Int>(x.size());
    const auto ones = static_cast<Int>(x.count_ones());
    const auto kk = static_cast<Int>(k);
    const auto aa = static_cast<Int>(a);
    // f2(x) = f1(complement of x), whose number of ones is n - ones
    return {ojzjss_objective(ones, n, kk, aa), ojzjss_objective(n - ones, n, kk, aa)};
}

ObjectiveVector omm_eval(const BitString& x) {
    const auto ones = static_cast<Int>(x.count_ones());
    return {static_cast<Int>(x.size()) - ones, ones};
}

ObjectiveVector lotz_eval(const BitString& x) {
    const std::size_t n = x.size();
    std::size_t leading = 0;
    while (leading < n && x[leading]) ++leading;
    std::size_t trailing = 0;
    while (trailing < n && !x[n - 1 - trailing]) ++trailing;
    return {static_cast<Int>(leading), static_cast<Int>(trailing)};
}

ObjectiveVector evaluate(const BenchmarkSpec& spec, const BitString& x) {
    if (x.size() != spec.n) {
        throw std::invalid_argument("bit string length does not match problem size");
    }
    switch (spec.kind) {
    case BenchmarkKind::ojzj: return ojzj_eval(x, spec.k);
    case BenchmarkKind::ojzj_ss: return ojzjss_eval(x, spec.k, spec.a);
    case BenchmarkKind::omm: return omm_eval(x);
    case BenchmarkKind::lotz: return lotz_eval(x);
    }
    throw std::logic_error("unreachable");
}

std::size_t pareto_front_size(const BenchmarkSpec& spec) {
    spec.validate();
    switch (spec.kind) {
    case BenchmarkKind::ojzj: return spec.n - 2 * spec.k + 3;
    case BenchmarkKind::ojzj_ss: return spec.n - 2 * spec.k + 5;
    default: return spec.n + 1;
    }
}

ParetoFront pareto_front(const BenchmarkSpec& spec) {
    spec.validate();
    const auto n = static_cast<Int>(spec.n);
    const auto k = static_cast<Int>(spec.k);
    ParetoFront front;
    switch (spec.kind) {
    case BenchmarkKind::ojzj:
    case BenchmarkKind::ojzj_ss:
        front.points.emplace_back(k, n + k);
        for (Int c = 2 * k; c <= n; ++c) {
            front.points.emplace_back(c, n + 2 * k - c);
        }
        front.points.emplace_back(n + k, k);
        if (spec.kind == BenchmarkKind::ojzj_ss) {
            front.points.emplace_back(Rational(2 * k * n + 1, n), Rational(n * n - 1, n));
            front.points.emplace_back(Rational(n * n - 1, n), Rational(2 * k * n + 1, n));
        }
        break;
    case BenchmarkKind::omm:
    case BenchmarkKind::lotz:
        for (Int b = 0; b <= n; ++b) {
            front.points.emplace_back(b, n - b);
        }
        break;
    }
    std::sort(front.points.begin(), front.points.end());
    return front;
}

bool front_covered(std::span<const ObjectiveVector> found, const ParetoFront& front) {
    return std::all_of(front.points.begin(), front.points.end(), [&](const ObjectiveVector& p) {
        return std::find(found.begin(), found.end(), p) != found.end();
    });
}

bool front_covered(std::span<const ObjectiveVector> found, const BenchmarkSpec& spec) {
    return front_covered(found, pareto_front(spec));
}

BenchmarkProblem::BenchmarkProblem(BenchmarkSpec spec) : spec_(spec) {
    spec_.validate();
    front_ = pareto_front(spec_);
}

} // namespace smsemoa
