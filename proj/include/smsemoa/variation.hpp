#pragma once

#include <cstddef>

#include "smsemoa/core.hpp"

namespace smsemoa {

// Bit strings -------------------------------------------------------------

// Flips every bit independently with probability exactly 1/n.
BitString bitwise_mutation(const BitString& x, Rng& rng);
// In-place form used by the engine on an already-copied offspring.
void bitwise_mutate(BitString& x, Rng& rng);

// Child x[0, i) ++ y[i, n) for cut i drawn uniformly from [1, n].
BitString one_point_crossover(const BitString& x, const BitString& y, Rng& rng);
BitString one_point_crossover_at(const BitString& x, const BitString& y, std::size_t cut);

// Each child bit copied from x or y with probability 1/2.
BitString uniform_crossover(const BitString& x, const BitString& y, Rng& rng);

// Permutations ------------------------------------------------------------

// Classic order crossover (OX). Cuts 0 <= c1 < c2 < n are drawn uniformly over
// all pairs; the child keeps p[c1..c2] (inclusive) in place and fills the other
// slots, starting after c2 and wrapping around, with the unused elements of q
// taken in q's order starting after c2.
Permutation order_crossover(const Permutation& p, const Permutation& q, Rng& rng);
Permutation order_crossover_at(const Permutation& p, const Permutation& q, std::size_t c1, std::size_t c2);

// Cycle crossover (CX). Position cycles are numbered in discovery order from
// position 0; cycles 1, 3, 5, ... come from p and cycles 2, 4, ... from q.
// The rng is unused; it is accepted for a uniform operator signature.
Permutation cycle_crossover(const Permutation& p, const Permutation& q, Rng& rng);
Permutation cycle_crossover(const Permutation& p, const Permutation& q);

// Reverses p[i..j] for a uniformly chosen pair i < j.
Permutation two_opt_mutation(const Permutation& p, Rng& rng);
Permutation two_opt_at(const Permutation& p, std::size_t i, std::size_t j);

// Swaps two distinct uniformly chosen positions.
Permutation two_swap_mutation(const Permutation& p, Rng& rng);
Permutation two_swap_at(const Permutation& p, std::size_t i, std::size_t j);

// Uniform pair i < j from [0, n), n >= 2.
std::pair<std::size_t, std::size_t> random_ordered_pair(std::size_t n, Rng& rng);

} // namespace smsemoa
