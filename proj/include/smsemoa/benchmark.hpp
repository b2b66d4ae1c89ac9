#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "smsemoa/core.hpp"

namespace smsemoa {

enum class BenchmarkKind { ojzj, ojzj_ss, omm, lotz };

// Problem size n, jump width k (OJZJ, OJZJ_SS) and stepping-stone offset a (OJZJ_SS).
struct BenchmarkSpec {
    BenchmarkKind kind = BenchmarkKind::omm;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t a = 0;

    static BenchmarkSpec ojzj(std::size_t n, std::size_t k) { return {BenchmarkKind::ojzj, n, k, 0}; }
    static BenchmarkSpec ojzj_ss(std::size_t n, std::size_t k, std::size_t a) {
        return {BenchmarkKind::ojzj_ss, n, k, a};
    }
    static BenchmarkSpec omm(std::size_t n) { return {BenchmarkKind::omm, n, 0, 0}; }
    static BenchmarkSpec lotz(std::size_t n) { return {BenchmarkKind::lotz, n, 0, 0}; }

    // Throws std::invalid_argument when the parameters are outside the valid ranges:
    // OJZJ needs 2 <= k < n/2, OJZJ_SS needs 3 <= k < n/2 and 2 <= a < k.
    void validate() const;
    [[nodiscard]] bool is_valid() const;

    // Short identifier such as "OJZJ_k2" or "OJZJ_SS_k3_a2".
    [[nodiscard]] std::string id() const;

    friend bool operator==(const BenchmarkSpec&, const BenchmarkSpec&) = default;
};

std::string to_string(BenchmarkKind kind);
BenchmarkKind parse_benchmark_kind(const std::string& name);

ObjectiveVector ojzj_eval(const BitString& x, std::size_t k);

// Values 2k + 1/n and n - 1/n are exact rationals with denominator n.
ObjectiveVector ojzjss_eval(const BitString& x, std::size_t k, std::size_t a);

ObjectiveVector omm_eval(const BitString& x);
ObjectiveVector lotz_eval(const BitString& x);

ObjectiveVector evaluate(const BenchmarkSpec& spec, const BitString& x);

struct ParetoFront {
    std::vector<ObjectiveVector> points; // sorted by increasing f1

    [[nodiscard]] std::size_t size() const { return points.size(); }
};

// Closed-form front sizes: OJZJ n-2k+3, OJZJ_SS n-2k+5, OMM and LOTZ n+1.
std::size_t pareto_front_size(const BenchmarkSpec& spec);

ParetoFront pareto_front(const BenchmarkSpec& spec);

// True iff every front point occurs in `found` (exact equality).
bool front_covered(std::span<const ObjectiveVector> found, const ParetoFront& front);
bool front_covered(std::span<const ObjectiveVector> found, const BenchmarkSpec& spec);

// Benchmark wrapped for the engine: bit-string genotype, known front.
class BenchmarkProblem {
public:
    using genotype_type = BitString;

    explicit BenchmarkProblem(BenchmarkSpec spec);

    [[nodiscard]] const BenchmarkSpec& spec() const { return spec_; }
    [[nodiscard]] std::size_t size() const { return spec_.n; }
    [[nodiscard]] std::string id() const { return spec_.id(); }

    [[nodiscard]] ObjectiveVector evaluate(const BitString& x) const { return smsemoa::evaluate(spec_, x); }
    [[nodiscard]] BitString random_genotype(Rng& rng) const { return random_bitstring(spec_.n, rng); }
    void repair(BitString&) const {}

    [[nodiscard]] const ParetoFront* analytic_front() const { return &front_; }

private:
    BenchmarkSpec spec_;
    ParetoFront front_;
};

} // namespace smsemoa
