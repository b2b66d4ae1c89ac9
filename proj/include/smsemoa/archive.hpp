#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "smsemoa/core.hpp"
#include "smsemoa/dominance.hpp"

namespace smsemoa {

// Unbounded archive of mutually non-dominated, pairwise distinct objective
// vectors. Members are kept in insertion order.
template <class Genotype>
class Archive {
public:
    using solution_type = EvaluatedSolution<Genotype>;

    // Inserts `candidate` unless a member weakly dominates it (an equal vector
    // included, so the incumbent wins); members it dominates are dropped.
    // Returns true iff the archive changed.
    bool update(const solution_type& candidate) {
        for (const auto& m : members_) {
            if (weakly_dominates(m.objectives, candidate.objectives)) {
                return false;
            }
        }
        std::erase_if(members_, [&](const solution_type& m) { return dominates(candidate.objectives, m.objectives); });
        members_.push_back(candidate);
        ++insertions_;
        return true;
    }

    [[nodiscard]] std::size_t size() const { return members_.size(); }
    [[nodiscard]] bool empty() const { return members_.empty(); }
    [[nodiscard]] const std::vector<solution_type>& members() const { return members_; }
    [[nodiscard]] const solution_type& operator[](std::size_t i) const { return members_[i]; }
    // Number of accepted insertions so far.
    [[nodiscard]] std::size_t insertions() const { return insertions_; }

    [[nodiscard]] std::vector<ObjectiveVector> objective_vectors() const {
        std::vector<ObjectiveVector> out;
        out.reserve(members_.size());
        for (const auto& m : members_) out.push_back(m.objectives);
        return out;
    }

private:
    std::vector<solution_type> members_;
    std::size_t insertions_ = 0;
};

// Functional form of Archive::update.
template <class Genotype>
Archive<Genotype> archive_update(Archive<Genotype> archive, const EvaluatedSolution<Genotype>& candidate) {
    archive.update(candidate);
    return archive;
}

// With probability 1/2 a uniform member of the population, otherwise a
// uniform member of the archive; falls back to the population when the
// archive is empty.
template <class Genotype>
const EvaluatedSolution<Genotype>& select_parent_with_reuse(std::span<const EvaluatedSolution<Genotype>> population,
                                                            const Archive<Genotype>& archive, Rng& rng) {
    if (population.empty()) {
        throw std::invalid_argument("select_parent_with_reuse: empty population");
    }
    const bool from_population = rng.uniform01() < 0.5;
    if (from_population || archive.empty()) {
        return population[rng.index(population.size())];
    }
    return archive[rng.index(archive.size())];
}

// CSV snapshot: genotype, the two numerators over one common denominator.
template <class Genotype>
void write_archive_csv(std::ostream& out, const Archive<Genotype>& archive) {
    out << "genotype,f1_num,f2_num,den\n";
    for (const auto& m : archive.members()) {
        const auto& f = m.objectives;
        const std::int64_t g = detail::gcd(f[0].den(), f[1].den());
        const std::int64_t den = f[0].den() / g * f[1].den();
        out << genotype_to_string(m.genotype) << ',' << f[0].num() * (den / f[0].den()) << ','
            << f[1].num() * (den / f[1].den()) << ',' << den << '\n';
    }
}

} // namespace smsemoa
