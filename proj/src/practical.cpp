#include "smsemoa/practical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace smsemoa {

namespace {

std::int64_t uniform_in(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng.uniform_below(static_cast<std::uint64_t>(hi - lo + 1)));
}

void require(bool condition, const std::string& message) {
    if (!condition) {
        throw std::invalid_argument(message);
    }
}

// Seeds of the independent streams inside one generated instance.
Rng instance_stream(std::uint64_t seed, std::uint64_t stream) { return Rng(derive_run_seed(seed, stream)); }

} // namespace

// Knapsack ----------------------------------------------------------------

void KpInstance::validate() const {
    require(n >= 1, "KP: need at least one item");
    require(profits1.size() == n && profits2.size() == n && weights.size() == n, "KP: array sizes differ from n");
    for (std::size_t i = 0; i < n; ++i) {
        require(profits1[i] >= 1 && profits2[i] >= 1 && weights[i] >= 1, "KP: profits and weights must be >= 1");
    }
    require(capacity > 0 && capacity < total_weight(), "KP: need 0 < capacity < total weight");
}

std::int64_t KpInstance::total_weight() const { return std::accumulate(weights.begin(), weights.end(), std::int64_t{0}); }

std::vector<std::size_t> KpInstance::repair_order() const {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto best = [&](std::size_t i) { return std::max(profits1[i], profits2[i]); };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        // best(a)/w(a) < best(b)/w(b)
        return best(a) * weights[b] < best(b) * weights[a];
    });
    return order;
}

KpInstance generate_kp(std::size_t n, std::uint64_t seed) {
    require(n >= 2, "generate_kp: need n >= 2");
    KpInstance inst;
    inst.n = n;
    inst.seed = seed;
    Rng rng = instance_stream(seed, 0);
    inst.profits1.resize(n);
    inst.profits2.resize(n);
    inst.weights.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        inst.profits1[i] = uniform_in(rng, 10, 100);
        inst.profits2[i] = uniform_in(rng, 10, 100);
        inst.weights[i] = uniform_in(rng, 10, 100);
    }
    const std::int64_t total = inst.total_weight();
    inst.capacity = (total + 1) / 2;
    return inst;
}

std::int64_t kp_weight(const BitString& x, const KpInstance& inst) {
    require(x.size() == inst.n, "KP: bit string length differs from n");
    std::int64_t w = 0;
    for (std::size_t i = 0; i < inst.n; ++i) {
        if (x[i]) w += inst.weights[i];
    }
    return w;
}

bool kp_feasible(const BitString& x, const KpInstance& inst) { return kp_weight(x, inst) <= inst.capacity; }

void kp_repair_in_place(BitString& x, const KpInstance& inst, std::span<const std::size_t> order) {
    std::int64_t w = kp_weight(x, inst);
    for (std::size_t i : order) {
        if (w <= inst.capacity) break;
        if (x[i]) {
            x.set(i, false);
            w -= inst.weights[i];
        }
    }
}

BitString kp_repair(BitString x, const KpInstance& inst) {
    auto order = inst.repair_order();
    kp_repair_in_place(x, inst, order);
    return x;
}

ObjectiveVector kp_eval(const BitString& x, const KpInstance& inst) {
    require(x.size() == inst.n, "KP: bit string length differs from n");
    std::int64_t p1 = 0;
    std::int64_t p2 = 0;
    std::int64_t w = 0;
    for (std::size_t i = 0; i < inst.n; ++i) {
        if (x[i]) {
            p1 += inst.profits1[i];
            p2 += inst.profits2[i];
            w += inst.weights[i];
        }
    }
    if (w > inst.capacity) {
        throw std::domain_error("kp_eval: selection exceeds capacity (repair first)");
    }
    return {p1, p2};
}

// NK ------------------------------------------------------------------------

void NkInstance::validate() const {
    require(n >= 2 && k < n, "NK: need n >= 2 and K < n");
    const std::size_t entries = std::size_t{1} << (k + 1);
    for (const auto& land : landscapes) {
        require(land.neighbors.size() == n && land.tables.size() == n, "NK: table count differs from n");
        for (std::size_t i = 0; i < n; ++i) {
            const auto& nb = land.neighbors[i];
            require(nb.size() == k, "NK: neighbor row has wrong length");
            for (std::size_t a = 0; a < k; ++a) {
                require(nb[a] < n && nb[a] != i, "NK: neighbor index out of range or self");
                for (std::size_t b = a + 1; b < k; ++b) require(nb[a] != nb[b], "NK: repeated neighbor");
            }
            require(land.tables[i].size() == entries, "NK: table row has wrong length");
            for (auto v : land.tables[i]) require(v >= 0 && v < table_scale, "NK: table entry out of range");
        }
    }
}

NkInstance generate_nk(std::size_t n, std::uint64_t seed, std::size_t k) {
    require(n >= 2 && k < n, "generate_nk: need n >= 2 and K < n");
    NkInstance inst;
    inst.n = n;
    inst.k = k;
    inst.seed = seed;
    const std::size_t entries = std::size_t{1} << (k + 1);
    for (std::size_t m = 0; m < 2; ++m) {
        Rng rng = instance_stream(seed, m);
        auto& land = inst.landscapes[m];
        land.neighbors.resize(n);
        land.tables.resize(n);
        std::vector<std::uint32_t> others;
        for (std::size_t i = 0; i < n; ++i) {
            others.clear();
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i) others.push_back(static_cast<std::uint32_t>(j));
            }
            // partial Fisher-Yates: first k entries are a uniform k-subset in random order
            for (std::size_t a = 0; a < k; ++a) {
                std::size_t b = a + rng.index(others.size() - a);
                std::swap(others[a], others[b]);
            }
            land.neighbors[i].assign(others.begin(), others.begin() + static_cast<std::ptrdiff_t>(k));
            land.tables[i].resize(entries);
            for (auto& v : land.tables[i]) {
                v = static_cast<std::int64_t>(rng.uniform_below(NkInstance::table_scale));
            }
        }
    }
    return inst;
}

std::size_t nk_table_index(const BitString& x, const NkLandscape& landscape, std::size_t i) {
    std::size_t index = x[i] ? 1 : 0;
    for (auto nb : landscape.neighbors[i]) {
        index = (index << 1) | (x[nb] ? 1 : 0);
    }
    return index;
}

ObjectiveVector nk_eval(const BitString& x, const NkInstance& inst) {
    require(x.size() == inst.n, "NK: bit string length differs from n");
    ObjectiveVector out;
    const auto den = static_cast<std::int64_t>(inst.n) * NkInstance::table_scale;
    for (std::size_t m = 0; m < 2; ++m) {
        const auto& land = inst.landscapes[m];
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < inst.n; ++i) {
            sum += land.tables[i][nk_table_index(x, land, i)];
        }
        out[m] = Rational(sum, den);
    }
    return out;
}

// TSP ---------------------------------------------------------------------

void TspInstance::validate() const {
    require(n >= 2, "TSP: need n >= 2");
    for (const auto& d : distances) {
        require(d.size() == n, "TSP: distance matrix size differs from n");
        for (std::size_t i = 0; i < n; ++i) {
            require(d(i, i) == 0, "TSP: nonzero diagonal");
            for (std::size_t j = 0; j < n; ++j) {
                require(d(i, j) >= 0 && d(i, j) == d(j, i), "TSP: distances must be nonnegative and symmetric");
            }
        }
    }
}

std::int64_t rounded_distance(const std::array<std::int64_t, 2>& a, const std::array<std::int64_t, 2>& b) {
    const std::int64_t dx = a[0] - b[0];
    const std::int64_t dy = a[1] - b[1];
    const std::int64_t sq = dx * dx + dy * dy;
    // nearest integer to sqrt(sq), decided in integers: r with (r - 1/2)^2 <= sq < (r + 1/2)^2
    auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(sq))));
    while (r > 0 && 4 * sq < (2 * r - 1) * (2 * r - 1)) --r;
    while (4 * sq >= (2 * r + 1) * (2 * r + 1)) ++r;
    return r;
}

TspInstance tsp_from_coordinates(const std::array<std::vector<std::array<std::int64_t, 2>>, 2>& coordinates,
                                 std::uint64_t seed) {
    require(coordinates[0].size() == coordinates[1].size(), "TSP: coordinate sets differ in size");
    TspInstance inst;
    inst.n = coordinates[0].size();
    inst.seed = seed;
    inst.coordinates = coordinates;
    for (std::size_t m = 0; m < 2; ++m) {
        inst.distances[m] = IntMatrix(inst.n);
        for (std::size_t i = 0; i < inst.n; ++i) {
            for (std::size_t j = 0; j < inst.n; ++j) {
                inst.distances[m](i, j) = rounded_distance(coordinates[m][i], coordinates[m][j]);
            }
        }
    }
    return inst;
}

TspInstance generate_tsp(std::size_t n, std::uint64_t seed) {
    require(n >= 2, "generate_tsp: need n >= 2");
    std::array<std::vector<std::array<std::int64_t, 2>>, 2> coords;
    for (std::size_t m = 0; m < 2; ++m) {
        Rng rng = instance_stream(seed, m);
        coords[m].resize(n);
        for (auto& c : coords[m]) {
            c[0] = uniform_in(rng, 0, TspInstance::grid);
            c[1] = uniform_in(rng, 0, TspInstance::grid);
        }
    }
    return tsp_from_coordinates(coords, seed);
}

ObjectiveVector tsp_eval(const Permutation& tour, const TspInstance& inst) {
    require(tour.size() == inst.n, "TSP: tour length differs from n");
    ObjectiveVector out;
    for (std::size_t m = 0; m < 2; ++m) {
        const auto& d = inst.distances[m];
        std::int64_t length = 0;
        for (std::size_t i = 0; i < inst.n; ++i) {
            length += d(tour[i], tour[(i + 1) % inst.n]);
        }
        out[m] = length;
    }
    return out;
}

// QAP ---------------------------------------------------------------------

void QapInstance::validate() const {
    require(n >= 2, "QAP: need n >= 2");
    auto check = [&](const IntMatrix& m, const char* what) {
        require(m.size() == n, std::string("QAP: ") + what + " matrix size differs from n");
        for (std::size_t i = 0; i < n; ++i) {
            require(m(i, i) == 0, std::string("QAP: ") + what + " matrix has nonzero diagonal");
            for (std::size_t j = 0; j < n; ++j) require(m(i, j) >= 0, "QAP: negative entry");
        }
    };
    check(distance, "distance");
    check(flows[0], "flow");
    check(flows[1], "flow");
}

QapInstance generate_qap(std::size_t n, std::uint64_t seed) {
    require(n >= 2, "generate_qap: need n >= 2");
    QapInstance inst;
    inst.n = n;
    inst.seed = seed;
    auto fill = [&](IntMatrix& m, std::uint64_t stream) {
        Rng rng = instance_stream(seed, stream);
        m = IntMatrix(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) m(i, j) = uniform_in(rng, 1, 100);
            }
        }
    };
    fill(inst.distance, 0);
    fill(inst.flows[0], 1);
    fill(inst.flows[1], 2);
    return inst;
}

ObjectiveVector qap_eval(const Permutation& assignment, const QapInstance& inst) {
    require(assignment.size() == inst.n, "QAP: assignment length differs from n");
    ObjectiveVector out;
    for (std::size_t m = 0; m < 2; ++m) {
        const auto& flow = inst.flows[m];
        std::int64_t cost = 0;
        for (std::size_t i = 0; i < inst.n; ++i) {
            const std::size_t pi = assignment[i];
            for (std::size_t j = 0; j < inst.n; ++j) {
                cost += flow(i, j) * inst.distance(pi, assignment[j]);
            }
        }
        out[m] = cost;
    }
    return out;
}

// Adapters ----------------------------------------------------------------

KnapsackProblem::KnapsackProblem(KpInstance inst) : inst_(std::move(inst)) {
    inst_.validate();
    repair_order_ = inst_.repair_order();
}

BitString KnapsackProblem::random_genotype(Rng& rng) const {
    BitString x = random_bitstring(inst_.n, rng);
    repair(x);
    return x;
}

void KnapsackProblem::repair(BitString& x) const { kp_repair_in_place(x, inst_, repair_order_); }

NkProblem::NkProblem(NkInstance inst) : inst_(std::move(inst)) { inst_.validate(); }
TspProblem::TspProblem(TspInstance inst) : inst_(std::move(inst)) { inst_.validate(); }
QapProblem::QapProblem(QapInstance inst) : inst_(std::move(inst)) { inst_.validate(); }

} // namespace smsemoa
