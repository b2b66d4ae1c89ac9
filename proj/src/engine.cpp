#include "smsemoa/engine.hpp"

#include <json.hpp>

namespace smsemoa {

std::string to_string(Variant v) {
    switch (v) {
    case Variant::large_population: return "L";
    case Variant::archive_store: return "A";
    case Variant::archive_reuse: return "AR";
    }
    return "?";
}

Variant parse_variant(const std::string& name) {
    if (name == "L" || name == "l" || name == "large") return Variant::large_population;
    if (name == "A" || name == "a" || name == "archive") return Variant::archive_store;
    if (name == "AR" || name == "ar" || name == "reuse") return Variant::archive_reuse;
    throw std::invalid_argument("unknown variant '" + name + "' (expected L, A or AR)");
}

std::string to_string(CrossoverKind c) {
    switch (c) {
    case CrossoverKind::none: return "none";
    case CrossoverKind::one_point: return "one-point";
    case CrossoverKind::uniform: return "uniform";
    case CrossoverKind::order: return "order";
    case CrossoverKind::cycle: return "cycle";
    }
    return "?";
}

std::string to_string(MutationKind m) {
    switch (m) {
    case MutationKind::bitwise: return "bitwise";
    case MutationKind::two_opt: return "2-opt";
    case MutationKind::two_swap: return "2-swap";
    }
    return "?";
}

void EngineConfig::validate() const {
    if (mu == 0) {
        throw std::invalid_argument("population size must be at least 1");
    }
    if (!(crossover_probability >= 0.0 && crossover_probability <= 1.0)) {
        throw std::invalid_argument("crossover probability must lie in [0, 1]");
    }
    if (!(mutation_probability >= 0.0 && mutation_probability <= 1.0)) {
        throw std::invalid_argument("mutation probability must lie in [0, 1]");
    }
}

void write_trace_ndjson(std::ostream& out, std::span<const StepRecord> trace) {
    for (const auto& r : trace) {
        nlohmann::json j{{"generation", r.generation},
                         {"offspring", {r.offspring[0].to_string(), r.offspring[1].to_string()}},
                         {"removed", {r.removed[0].to_string(), r.removed[1].to_string()}},
                         {"archive_size", r.archive_size}};
        out << j.dump() << '\n';
    }
}

std::size_t variant_population_size(const BenchmarkSpec& spec, Variant variant) {
    spec.validate();
    if (variant != Variant::large_population) {
        return 5;
    }
    // k is 0 for OMM and LOTZ, giving n + 5
    return spec.n - 2 * spec.k + 5;
}

EngineConfig benchmark_config(const BenchmarkSpec& spec, Variant variant, std::uint64_t seed,
                              std::uint64_t max_generations) {
    EngineConfig config;
    config.variant = variant;
    config.mu = variant_population_size(spec, variant);
    if (spec.kind == BenchmarkKind::omm || spec.kind == BenchmarkKind::lotz) {
        config.crossover = CrossoverKind::one_point;
        config.crossover_probability = default_crossover_probability;
    } else {
        config.crossover = CrossoverKind::none;
        config.crossover_probability = 0.0;
    }
    config.mutation = MutationKind::bitwise;
    config.max_generations = max_generations;
    config.termination = Termination::front_coverage;
    config.seed = seed;
    return config;
}

} // namespace smsemoa
