#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "smsemoa/archive.hpp"
#include "smsemoa/benchmark.hpp"
#include "smsemoa/core.hpp"
#include "smsemoa/dominance.hpp"
#include "smsemoa/hypervolume.hpp"
#include "smsemoa/variation.hpp"

namespace smsemoa {

// L: plain SMS-EMOA returning its population. A: archive kept but never
// used for reproduction. AR: parents drawn from the archive half the time.
enum class Variant { large_population, archive_store, archive_reuse };
enum class CrossoverKind { none, one_point, uniform, order, cycle };
enum class MutationKind { bitwise, two_opt, two_swap };
enum class Termination { front_coverage, budget_only };

std::string to_string(Variant v);
Variant parse_variant(const std::string& name);
std::string to_string(CrossoverKind c);
std::string to_string(MutationKind m);

inline bool has_archive(Variant v) { return v != Variant::large_population; }

struct EngineConfig {
    Variant variant = Variant::archive_reuse;
    std::size_t mu = 5;
    // Chance of recombining two parents; 0 reproduces by mutation only.
    double crossover_probability = 0.0;
    CrossoverKind crossover = CrossoverKind::none;
    MutationKind mutation = MutationKind::bitwise;
    // Move-based mutations (2-opt, 2-swap) apply one move with this chance.
    // Bit-wise mutation always runs at rate 1/n.
    double mutation_probability = 1.0;
    // Budget in generations, i.e. offspring evaluations after initialization.
    std::uint64_t max_generations = 1'000'000;
    Termination termination = Termination::front_coverage;
    std::uint64_t seed = 0;
    // Pass the initial population through the archive before generation 1.
    bool seed_archive = true;
    bool record_trace = false;

    // Throws std::invalid_argument on mu == 0 or probabilities outside [0, 1].
    void validate() const;
};

// One generation, as exported by the run trace.
struct StepRecord {
    std::uint64_t generation = 0;
    ObjectiveVector offspring;
    ObjectiveVector removed;
    bool offspring_survived = false;
    std::size_t archive_size = 0;
};

// One JSON object per line: generation, offspring, removed, archive_size.
void write_trace_ndjson(std::ostream& out, std::span<const StepRecord> trace);

template <class Genotype>
struct RunResult {
    std::uint64_t generations_used = 0;
    std::uint64_t evaluations = 0;
    bool covered = false;
    std::optional<std::uint64_t> coverage_generation;
    Variant variant = Variant::archive_reuse;
    Population<Genotype> population;
    Archive<Genotype> archive;
    std::vector<StepRecord> trace;

    // The variant's output set: the archive for A and AR, the population for L.
    [[nodiscard]] std::vector<ObjectiveVector> returned_objectives() const {
        if (has_archive(variant)) {
            return archive.objective_vectors();
        }
        std::vector<ObjectiveVector> out;
        for (const auto& s : population) out.push_back(s.objectives);
        return out;
    }
};

// What the engine needs from a problem.
template <class P>
concept EngineProblem = requires(const P& p, typename P::genotype_type& g, Rng& rng) {
    typename P::genotype_type;
    { p.size() } -> std::convertible_to<std::size_t>;
    { p.evaluate(g) } -> std::same_as<ObjectiveVector>;
    { p.random_genotype(rng) } -> std::same_as<typename P::genotype_type>;
    p.repair(g);
    { p.analytic_front() } -> std::same_as<const ParetoFront*>;
};

// Population sizes of the runtime experiments: n - 2k + 5 for L, 5 with an archive.
std::size_t variant_population_size(const BenchmarkSpec& spec, Variant variant);
inline constexpr std::size_t practical_population_size = 100;

// Steady-state SMS-EMOA: one offspring per generation, survival by
// non-dominated sorting followed by removal of the least-contributing member
// of the last front.
//
// The problem is held by reference and must outlive the engine.
template <EngineProblem Problem>
class SmsEmoa {
public:
    using genotype_type = typename Problem::genotype_type;
    using solution_type = EvaluatedSolution<genotype_type>;

    SmsEmoa(const Problem& problem, EngineConfig config)
        : problem_(problem), config_(config), rng_(config.seed), front_(problem.analytic_front()) {
        config_.validate();
        check_operators();
        population_.reserve(config_.mu);
        for (std::size_t i = 0; i < config_.mu; ++i) {
            solution_type s{problem_.random_genotype(rng_), {}};
            problem_.repair(s.genotype);
            s.objectives = problem_.evaluate(s.genotype);
            population_.push_back(std::move(s));
            ++evaluations_;
        }
        if (has_archive(config_.variant) && config_.seed_archive) {
            for (const auto& s : population_) archive_.update(s);
        }
        covered_ = monitored_set_covers_front();
        if (covered_) coverage_generation_ = 0;
        union_objectives_.reserve(config_.mu + 1);
    }

    // Runs one generation.
    StepRecord step() {
        solution_type offspring = make_offspring();

        bool archive_changed = false;
        if (has_archive(config_.variant)) {
            archive_changed = archive_.update(offspring);
        }

        union_objectives_.clear();
        for (const auto& s : population_) union_objectives_.push_back(s.objectives);
        union_objectives_.push_back(offspring.objectives);
        non_dominated_sort(std::span<const ObjectiveVector>(union_objectives_), fronts_);
        const std::size_t removed = select_removal(union_objectives_, fronts_, rng_);

        StepRecord record;
        record.generation = ++generation_;
        record.offspring = offspring.objectives;
        record.removed = union_objectives_[removed];
        record.offspring_survived = removed != config_.mu;
        if (record.offspring_survived) {
            population_[removed] = std::move(offspring);
        }
        record.archive_size = archive_.size();

        const bool monitored_changed = has_archive(config_.variant) ? archive_changed : record.offspring_survived;
        if (monitored_changed && front_ != nullptr) {
            covered_ = monitored_set_covers_front();
            if (covered_ && !coverage_generation_) coverage_generation_ = generation_;
        }
        return record;
    }

    // Steps until the front is covered (front-coverage termination) or the
    // generation budget is spent. `observer` sees every StepRecord.
    RunResult<genotype_type> run(const std::function<void(const SmsEmoa&, const StepRecord&)>& observer = {}) {
        if (config_.termination == Termination::front_coverage && front_ == nullptr) {
            throw std::invalid_argument("front-coverage termination needs a problem with an analytic Pareto front");
        }
        RunResult<genotype_type> result;
        while (generation_ < config_.max_generations) {
            if (config_.termination == Termination::front_coverage && covered_) break;
            StepRecord record = step();
            if (observer) observer(*this, record);
            if (config_.record_trace) result.trace.push_back(record);
        }
        result.generations_used = generation_;
        result.evaluations = evaluations_;
        result.covered = covered_;
        result.coverage_generation = coverage_generation_;
        result.variant = config_.variant;
        result.population = population_;
        result.archive = archive_;
        return result;
    }

    [[nodiscard]] const Population<genotype_type>& population() const { return population_; }
    [[nodiscard]] const Archive<genotype_type>& archive() const { return archive_; }
    [[nodiscard]] const EngineConfig& config() const { return config_; }
    [[nodiscard]] const Problem& problem() const { return problem_; }
    [[nodiscard]] std::uint64_t generation() const { return generation_; }
    [[nodiscard]] std::uint64_t evaluations() const { return evaluations_; }
    [[nodiscard]] bool covered() const { return covered_; }
    [[nodiscard]] std::optional<std::uint64_t> coverage_generation() const { return coverage_generation_; }

private:
    static constexpr bool bit_genotype = std::is_same_v<genotype_type, BitString>;
    static constexpr bool permutation_genotype = std::is_same_v<genotype_type, Permutation>;
    static_assert(bit_genotype || permutation_genotype, "unsupported genotype");

    void check_operators() const {
        const auto c = config_.crossover;
        const auto m = config_.mutation;
        bool ok;
        if constexpr (bit_genotype) {
            ok = (c == CrossoverKind::none || c == CrossoverKind::one_point || c == CrossoverKind::uniform) &&
                 m == MutationKind::bitwise;
        } else {
            ok = (c == CrossoverKind::none || c == CrossoverKind::order || c == CrossoverKind::cycle) &&
                 (m == MutationKind::two_opt || m == MutationKind::two_swap);
        }
        if (!ok) {
            throw std::invalid_argument("crossover " + to_string(c) + " / mutation " + to_string(m) +
                                        " do not fit the problem's genotype");
        }
    }

    const solution_type& select_parent() {
        if (config_.variant == Variant::archive_reuse) {
            return select_parent_with_reuse(std::span<const solution_type>(population_), archive_, rng_);
        }
        return population_[rng_.index(population_.size())];
    }

    bool crossover_fires() {
        if (config_.crossover == CrossoverKind::none || config_.crossover_probability <= 0.0) return false;
        if (config_.crossover_probability >= 1.0) return true;
        return rng_.chance(config_.crossover_probability);
    }

    genotype_type recombine(const genotype_type& x, const genotype_type& y) {
        if constexpr (bit_genotype) {
            return config_.crossover == CrossoverKind::one_point ? one_point_crossover(x, y, rng_)
                                                                 : uniform_crossover(x, y, rng_);
        } else {
            return config_.crossover == CrossoverKind::order ? order_crossover(x, y, rng_) : cycle_crossover(x, y);
        }
    }

    void mutate(genotype_type& child) {
        if constexpr (bit_genotype) {
            bitwise_mutate(child, rng_);
        } else {
            if (child.size() < 2 || !rng_.chance(config_.mutation_probability)) return;
            child = config_.mutation == MutationKind::two_opt ? two_opt_mutation(child, rng_)
                                                              : two_swap_mutation(child, rng_);
        }
    }

    solution_type make_offspring() {
        const solution_type& first = select_parent();
        solution_type child;
        if (crossover_fires()) {
            const solution_type& second = select_parent();
            child.genotype = recombine(first.genotype, second.genotype);
        } else {
            child.genotype = first.genotype;
        }
        mutate(child.genotype);
        problem_.repair(child.genotype);
        child.objectives = problem_.evaluate(child.genotype);
        ++evaluations_;
        return child;
    }

    [[nodiscard]] bool monitored_set_covers_front() const {
        if (front_ == nullptr) return false;
        auto contains = [&](const ObjectiveVector& p) {
            if (has_archive(config_.variant)) {
                for (const auto& m : archive_.members())
                    if (m.objectives == p) return true;
            } else {
                for (const auto& m : population_)
                    if (m.objectives == p) return true;
            }
            return false;
        };
        for (const auto& p : front_->points) {
            if (!contains(p)) return false;
        }
        return true;
    }

    const Problem& problem_;
    EngineConfig config_;
    Rng rng_;
    const ParetoFront* front_;
    Population<genotype_type> population_;
    Archive<genotype_type> archive_;
    std::vector<ObjectiveVector> union_objectives_;
    Fronts fronts_;
    std::uint64_t generation_ = 0;
    std::uint64_t evaluations_ = 0;
    bool covered_ = false;
    std::optional<std::uint64_t> coverage_generation_;
};

// Runs a fresh engine to termination.
template <EngineProblem Problem>
RunResult<typename Problem::genotype_type> sms_emoa_run(const Problem& problem, const EngineConfig& config) {
    if (config.termination == Termination::front_coverage && problem.analytic_front() == nullptr) {
        throw std::invalid_argument("front-coverage termination needs a problem with an analytic Pareto front");
    }
    SmsEmoa<Problem> engine(problem, config);
    return engine.run();
}

// One-point crossover rate used on OneMinMax and LOTZ; any constant fits the theory.
inline constexpr double default_crossover_probability = 0.9;

// Benchmark runtime configuration: bit-wise mutation, mu per variant, no
// crossover except one-point crossover on OneMinMax and LOTZ.
EngineConfig benchmark_config(const BenchmarkSpec& spec, Variant variant, std::uint64_t seed,
                              std::uint64_t max_generations = 1'000'000);

} // namespace smsemoa
