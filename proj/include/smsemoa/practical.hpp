#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "smsemoa/benchmark.hpp"
#include "smsemoa/core.hpp"

namespace smsemoa {

enum class Orientation { maximize, minimize };

// Dense row-major n x n matrix.
template <class T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n, T value = T{}) : n_(n), data_(n * n, value) {}

    [[nodiscard]] std::size_t size() const { return n_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    [[nodiscard]] const std::vector<T>& data() const { return data_; }

    static SquareMatrix from_rows(const std::vector<std::vector<T>>& rows);

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

template <class T>
SquareMatrix<T> SquareMatrix<T>::from_rows(const std::vector<std::vector<T>>& rows) {
    SquareMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) {
            throw std::invalid_argument("SquareMatrix::from_rows: matrix is not square");
        }
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

using IntMatrix = SquareMatrix<std::int64_t>;

// Knapsack ----------------------------------------------------------------

struct KpInstance {
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::vector<std::int64_t> profits1;
    std::vector<std::int64_t> profits2;
    std::vector<std::int64_t> weights;
    std::int64_t capacity = 0;

    // Checks sizes, positivity and 0 < capacity < total weight.
    void validate() const;
    [[nodiscard]] std::int64_t total_weight() const;
    // Items in the order kp_repair drops them: increasing max(p1, p2) / w,
    // ties by index.
    [[nodiscard]] std::vector<std::size_t> repair_order() const;

    friend bool operator==(const KpInstance&, const KpInstance&) = default;
};

// Profits and weights uniform in [10, 100], capacity = ceil(total weight / 2).
KpInstance generate_kp(std::size_t n, std::uint64_t seed);
std::int64_t kp_weight(const BitString& x, const KpInstance& inst);
bool kp_feasible(const BitString& x, const KpInstance& inst);
// Drops selected items in repair_order() until the weight fits; feasible input is returned unchanged.
BitString kp_repair(BitString x, const KpInstance& inst);
// Same rule with a precomputed repair_order().
void kp_repair_in_place(BitString& x, const KpInstance& inst, std::span<const std::size_t> order);
// Throws std::domain_error on an overweight selection.
ObjectiveVector kp_eval(const BitString& x, const KpInstance& inst);

// NK landscapes ------------------------------------------------------------

struct NkLandscape {
    std::vector<std::vector<std::uint32_t>> neighbors; // n rows of K indices
    std::vector<std::vector<std::int64_t>> tables;     // n rows of 2^(K+1) entries in [0, 2^20)

    friend bool operator==(const NkLandscape&, const NkLandscape&) = default;
};

struct NkInstance {
    static constexpr std::int64_t table_scale = std::int64_t{1} << 20;

    std::size_t n = 0;
    std::size_t k = 4;
    std::uint64_t seed = 0;
    std::array<NkLandscape, 2> landscapes;

    void validate() const;

    friend bool operator==(const NkInstance&, const NkInstance&) = default;
};

// K distinct random neighbors per variable, table entries uniform on the
// grid {0, 1, ..., 2^20 - 1} / 2^20.
NkInstance generate_nk(std::size_t n, std::uint64_t seed, std::size_t k = 4);

// Table row index for variable i: bit K is x_i, then x of each neighbor in
// table order, most significant first.
std::size_t nk_table_index(const BitString& x, const NkLandscape& landscape, std::size_t i);
// (1/n) * sum of table entries / 2^20 for each landscape (maximized).
ObjectiveVector nk_eval(const BitString& x, const NkInstance& inst);

// TSP ---------------------------------------------------------------------

struct TspInstance {
    static constexpr std::int64_t grid = 10000;

    std::size_t n = 0;
    std::uint64_t seed = 0;
    // Per objective, city coordinates (x, y); may be empty for imported matrices.
    std::array<std::vector<std::array<std::int64_t, 2>>, 2> coordinates;
    std::array<IntMatrix, 2> distances;

    void validate() const;

    friend bool operator==(const TspInstance&, const TspInstance&) = default;
};

// Euclidean distance rounded to the nearest integer.
std::int64_t rounded_distance(const std::array<std::int64_t, 2>& a, const std::array<std::int64_t, 2>& b);
TspInstance tsp_from_coordinates(const std::array<std::vector<std::array<std::int64_t, 2>>, 2>& coordinates,
                                 std::uint64_t seed = 0);
// Independent uniform coordinates on the integer grid [0, 10^4]^2 per objective.
TspInstance generate_tsp(std::size_t n, std::uint64_t seed);
// Closed-tour lengths under both matrices (minimized, original orientation).
ObjectiveVector tsp_eval(const Permutation& tour, const TspInstance& inst);

// QAP ---------------------------------------------------------------------

struct QapInstance {
    std::size_t n = 0;
    std::uint64_t seed = 0;
    IntMatrix distance;
    std::array<IntMatrix, 2> flows;

    void validate() const;

    friend bool operator==(const QapInstance&, const QapInstance&) = default;
};

// Off-diagonal distances and flows uniform in [1, 100], zero diagonals.
QapInstance generate_qap(std::size_t n, std::uint64_t seed);
// sum_{i,j} flow_m(i, j) * distance(p(i), p(j)) for m = 1, 2 (minimized).
ObjectiveVector qap_eval(const Permutation& assignment, const QapInstance& inst);

// Engine adapters ---------------------------------------------------------
//
// The engine maximizes. Minimization problems hand it negated objectives;
// original_objectives() maps them back for reporting.

class KnapsackProblem {
public:
    using genotype_type = BitString;
    static constexpr Orientation orientation = Orientation::maximize;

    explicit KnapsackProblem(KpInstance inst);
    [[nodiscard]] const KpInstance& instance() const { return inst_; }
    [[nodiscard]] std::size_t size() const { return inst_.n; }
    [[nodiscard]] std::string id() const { return "KP"; }
    [[nodiscard]] ObjectiveVector evaluate(const BitString& x) const { return kp_eval(x, inst_); }
    [[nodiscard]] BitString random_genotype(Rng& rng) const;
    void repair(BitString& x) const;
    [[nodiscard]] const ParetoFront* analytic_front() const { return nullptr; }
    [[nodiscard]] ObjectiveVector original_objectives(const ObjectiveVector& v) const { return v; }

private:
    KpInstance inst_;
    std::vector<std::size_t> repair_order_;
};

class NkProblem {
public:
    using genotype_type = BitString;
    static constexpr Orientation orientation = Orientation::maximize;

    explicit NkProblem(NkInstance inst);
    [[nodiscard]] const NkInstance& instance() const { return inst_; }
    [[nodiscard]] std::size_t size() const { return inst_.n; }
    [[nodiscard]] std::string id() const { return "NK"; }
    [[nodiscard]] ObjectiveVector evaluate(const BitString& x) const { return nk_eval(x, inst_); }
    [[nodiscard]] BitString random_genotype(Rng& rng) const { return random_bitstring(inst_.n, rng); }
    void repair(BitString&) const {}
    [[nodiscard]] const ParetoFront* analytic_front() const { return nullptr; }
    [[nodiscard]] ObjectiveVector original_objectives(const ObjectiveVector& v) const { return v; }

private:
    NkInstance inst_;
};

class TspProblem {
public:
    using genotype_type = Permutation;
    static constexpr Orientation orientation = Orientation::minimize;

    explicit TspProblem(TspInstance inst);
    [[nodiscard]] const TspInstance& instance() const { return inst_; }
    [[nodiscard]] std::size_t size() const { return inst_.n; }
    [[nodiscard]] std::string id() const { return "TSP"; }
    [[nodiscard]] ObjectiveVector evaluate(const Permutation& p) const { return tsp_eval(p, inst_).negated(); }
    [[nodiscard]] Permutation random_genotype(Rng& rng) const { return random_permutation(inst_.n, rng); }
    void repair(Permutation&) const {}
    [[nodiscard]] const ParetoFront* analytic_front() const { return nullptr; }
    [[nodiscard]] ObjectiveVector original_objectives(const ObjectiveVector& v) const { return v.negated(); }

private:
    TspInstance inst_;
};

class QapProblem {
public:
    using genotype_type = Permutation;
    static constexpr Orientation orientation = Orientation::minimize;

    explicit QapProblem(QapInstance inst);
    [[nodiscard]] const QapInstance& instance() const { return inst_; }
    [[nodiscard]] std::size_t size() const { return inst_.n; }
    [[nodiscard]] std::string id() const { return "QAP"; }
    [[nodiscard]] ObjectiveVector evaluate(const Permutation& p) const { return qap_eval(p, inst_).negated(); }
    [[nodiscard]] Permutation random_genotype(Rng& rng) const { return random_permutation(inst_.n, rng); }
    void repair(Permutation&) const {}
    [[nodiscard]] const ParetoFront* analytic_front() const { return nullptr; }
    [[nodiscard]] ObjectiveVector original_objectives(const ObjectiveVector& v) const { return v.negated(); }

private:
    QapInstance inst_;
};

} // namespace smsemoa
