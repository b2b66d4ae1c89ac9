#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "smsemoa/rational.hpp"

namespace smsemoa {

// File-system failure; the message carries the offending path.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Randomness
// ---------------------------------------------------------------------------

// SplitMix64 output finalizer. A bijection on 64-bit integers.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ULL;

// Seed of run `run_index` under `base_seed`:
//   mix64(base_seed + (run_index + 1) * golden_gamma)   (mod 2^64)
// For a fixed base seed this is injective in the run index.
constexpr std::uint64_t derive_run_seed(std::uint64_t base_seed, std::uint64_t run_index) {
    return mix64(base_seed + (run_index + 1) * golden_gamma);
}

// SplitMix64 generator: 64 bits of state, one addition and one mix per draw.
// All bounded draws are built from integer arithmetic only, so a seed
// reproduces the same stream on every platform.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }

    result_type operator()() { return next(); }

    std::uint64_t next() {
        state_ += golden_gamma;
        return mix64(state_);
    }

    // Uniform integer in [0, bound), bound > 0 (Lemire's multiply-and-reject).
    std::uint64_t uniform_below(std::uint64_t bound);

    // Uniform index in [0, size).
    std::size_t index(std::size_t size) { return static_cast<std::size_t>(uniform_below(size)); }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // True with probability exactly num/den.
    bool bernoulli(std::uint64_t num, std::uint64_t den) { return uniform_below(den) < num; }

    // True with probability p (53-bit resolution).
    bool chance(double p) { return uniform01() < p; }

    [[nodiscard]] std::uint64_t seed() const { return seed_; }
    [[nodiscard]] std::uint64_t state() const { return state_; }

private:
    std::uint64_t seed_;
    std::uint64_t state_;
};

// ---------------------------------------------------------------------------
// Genotypes
// ---------------------------------------------------------------------------

class BitString {
public:
    BitString() = default;
    explicit BitString(std::size_t n, bool value = false) : bits_(n, value ? 1 : 0) {}
    explicit BitString(std::vector<std::uint8_t> bits);

    // Parses a string of '0'/'1' characters, e.g. "10110".
    static BitString from_string(std::string_view text);

    [[nodiscard]] std::size_t size() const { return bits_.size(); }
    [[nodiscard]] bool operator[](std::size_t i) const { return bits_[i] != 0; }
    void set(std::size_t i, bool value) { bits_[i] = value ? 1 : 0; }
    void flip(std::size_t i) { bits_[i] ^= 1; }

    [[nodiscard]] std::size_t count_ones() const;
    [[nodiscard]] std::size_t count_zeros() const { return size() - count_ones(); }
    [[nodiscard]] BitString complement() const;
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] std::span<const std::uint8_t> bits() const { return bits_; }

    friend bool operator==(const BitString&, const BitString&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

// A bijection on [0, n).
class Permutation {
public:
    Permutation() = default;
    // Throws std::invalid_argument unless `order` is a bijection on [0, order.size()).
    explicit Permutation(std::vector<std::uint32_t> order);

    static Permutation identity(std::size_t n);
    // Space-separated indices, e.g. "0 3 1 2".
    static Permutation from_string(std::string_view text);

    [[nodiscard]] std::size_t size() const { return order_.size(); }
    [[nodiscard]] std::uint32_t operator[](std::size_t i) const { return order_[i]; }
    [[nodiscard]] std::span<const std::uint32_t> order() const { return order_; }
    [[nodiscard]] std::string to_string() const;

    static bool is_bijection(std::span<const std::uint32_t> order);

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    struct unchecked_tag {};
    Permutation(std::vector<std::uint32_t> order, unchecked_tag) : order_(std::move(order)) {}
    friend class PermutationBuilder;

    std::vector<std::uint32_t> order_;
};

// Builds permutations inside variation operators, where the bijection holds by construction.
class PermutationBuilder {
public:
    static Permutation adopt(std::vector<std::uint32_t> order) {
        return Permutation(std::move(order), Permutation::unchecked_tag{});
    }
};

BitString random_bitstring(std::size_t n, Rng& rng);
Permutation random_permutation(std::size_t n, Rng& rng);

// ---------------------------------------------------------------------------
// Objectives
// ---------------------------------------------------------------------------

// Bi-objective value. Both objectives are maximized.
//
// The defaulted ordering is lexicographic and exists only so vectors can live
// in ordered containers; use the functions in dominance.hpp for Pareto order.
struct ObjectiveVector {
    static constexpr std::size_t dimension = 2;

    std::array<Rational, dimension> values{};

    constexpr ObjectiveVector() = default;
    constexpr ObjectiveVector(Rational f1, Rational f2) : values{f1, f2} {}

    [[nodiscard]] const Rational& operator[](std::size_t i) const { return values[i]; }
    Rational& operator[](std::size_t i) { return values[i]; }
    [[nodiscard]] const Rational& f1() const { return values[0]; }
    [[nodiscard]] const Rational& f2() const { return values[1]; }

    [[nodiscard]] ObjectiveVector negated() const { return {-values[0], -values[1]}; }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;
    friend auto operator<=>(const ObjectiveVector&, const ObjectiveVector&) = default;
};

template <class Genotype>
struct EvaluatedSolution {
    Genotype genotype;
    ObjectiveVector objectives;

    friend bool operator==(const EvaluatedSolution&, const EvaluatedSolution&) = default;
};

// Exactly mu members at every generation boundary.
template <class Genotype>
using Population = std::vector<EvaluatedSolution<Genotype>>;

inline std::string genotype_to_string(const BitString& g) { return g.to_string(); }
inline std::string genotype_to_string(const Permutation& g) { return g.to_string(); }

} // namespace smsemoa
