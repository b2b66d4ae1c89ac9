#include "smsemoa/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "smsemoa/practical.hpp"

namespace smsemoa {

namespace {

constexpr std::uint64_t reference_stream = 0x5EF;
constexpr const char* version_string = "1.0.0";

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep)) out.push_back(field);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

template <class T>
T parse_integer(const std::string& text, const char* what) {
    T value{};
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw std::invalid_argument(std::string("bad ") + what + " '" + text + "'");
    }
    return value;
}

double parse_double(const std::string& text, const char* what) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw std::invalid_argument(std::string("bad ") + what + " '" + text + "'");
    }
    return value;
}

bool parse_flag(const std::string& text, const char* what) {
    if (text == "1" || text == "true") return true;
    if (text == "0" || text == "false") return false;
    throw std::invalid_argument(std::string("bad ") + what + " '" + text + "'");
}

void require_plain(const std::string& field) {
    if (field.find_first_of(",\n\r") != std::string::npos) {
        throw std::invalid_argument("CSV field '" + field + "' contains a separator");
    }
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    return out;
}

void finish_output(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    return in;
}

// Runs job(i) for i in [0, count) on a small pool; results land at their index.
template <class R, class Job>
std::vector<R> parallel_map(std::size_t count, std::size_t threads, Job job, const ProgressFn& progress) {
    std::vector<R> results(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    std::mutex progress_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                results[i] = job(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
            const std::size_t finished = done.fetch_add(1) + 1;
            if (progress) {
                std::lock_guard lock(progress_mutex);
                progress(finished, count);
            }
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, std::max<std::size_t>(count, 1));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return results;
}

nlohmann::json spec_json(const ExperimentSpec& spec) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : spec.cells) cells.push_back({{"n", c.n}, {"runs", c.runs}});
    nlohmann::json variants = nlohmann::json::array();
    for (auto v : spec.variants) variants.push_back(to_string(v));
    return {{"experiment", to_string(spec.id)},
            {"problems", spec.problems},
            {"cells", cells},
            {"budget", spec.budget},
            {"variants", variants},
            {"base_seed", spec.base_seed},
            {"scale", spec.scale},
            {"reference_samples", spec.reference_samples},
            {"censor_fraction", spec.censor_fraction}};
}

nlohmann::json base_manifest(const ExperimentSpec& spec) {
    return {{"tool", "smsemoa"},
            {"version", version_string},
            {"spec", spec_json(spec)},
            {"run_seed", "derive_run_seed(derive_run_seed(base_seed, n), run)"},
            {"rng", "splitmix64"}};
}

// ---- runtime tables ----

ExperimentResult run_runtime(const ExperimentSpec& spec, const std::string& experiment,
                             BenchmarkSpec (*make)(std::size_t), const ProgressFn& progress) {
    spec.validate();
    struct Job {
        std::size_t cell;
        Variant variant;
        std::size_t run;
    };
    std::vector<Job> jobs;
    std::vector<BenchmarkProblem> problems;
    for (std::size_t c = 0; c < spec.cells.size(); ++c) {
        problems.emplace_back(make(spec.cells[c].n));
        for (auto v : spec.variants) {
            for (std::size_t r = 0; r < spec.cells[c].runs; ++r) jobs.push_back({c, v, r});
        }
    }
    auto rows = parallel_map<ResultRow>(
        jobs.size(), spec.threads,
        [&](std::size_t i) {
            const auto& job = jobs[i];
            const auto& problem = problems[job.cell];
            const std::size_t n = spec.cells[job.cell].n;
            const std::uint64_t seed = run_seed(spec.base_seed, n, job.run);
            const auto result = sms_emoa_run(problem, benchmark_config(problem.spec(), job.variant, seed, spec.budget));
            ResultRow row;
            row.experiment = experiment;
            row.problem = problem.spec().id();
            row.n = n;
            row.variant = to_string(job.variant);
            row.run = job.run;
            row.seed = seed;
            row.metric = "generations";
            row.value = static_cast<double>(result.generations_used);
            row.covered = result.covered;
            row.censored = !result.covered;
            return row;
        },
        progress);

    ExperimentResult out;
    out.spec = spec;
    out.rows = std::move(rows);
    out.manifest = base_manifest(spec);
    out.manifest["problem"] = problems.empty() ? "" : problems.front().spec().id();
    return out;
}

BenchmarkSpec table2_problem(std::size_t n) { return BenchmarkSpec::ojzj_ss(n, 3, 2); }
BenchmarkSpec table3_problem(std::size_t n) { return BenchmarkSpec::ojzj(n, 2); }

// ---- practical problems ----

struct PracticalOutcome {
    ResultRow row;
    FrontSeries front;
};

template <class Problem>
void run_practical_instance(const ExperimentSpec& spec, const std::string& experiment, const Problem& problem,
                            std::size_t n, std::uint64_t inst_seed, std::vector<ResultRow>& rows,
                            std::vector<FrontSeries>& fronts, nlohmann::json& instances, std::size_t runs,
                            const ProgressFn& progress) {
    Rng ref_rng(derive_run_seed(inst_seed, reference_stream));
    const ObjectiveVector ref = estimate_reference_point(problem, spec.reference_samples, ref_rng);
    instances.push_back({{"problem", problem.id()},
                         {"n", n},
                         {"instance_seed", inst_seed},
                         {"reference_point", {ref[0].to_string(), ref[1].to_string()}}});

    struct Job {
        Variant variant;
        std::size_t run;
    };
    std::vector<Job> jobs;
    for (auto v : spec.variants) {
        for (std::size_t r = 0; r < runs; ++r) jobs.push_back({v, r});
    }
    auto outcomes = parallel_map<PracticalOutcome>(
        jobs.size(), spec.threads,
        [&](std::size_t i) {
            const auto& job = jobs[i];
            const std::uint64_t seed = run_seed(spec.base_seed, n, job.run);
            const auto result = sms_emoa_run(problem, practical_config(problem.id(), job.variant, seed, spec.budget));
            std::vector<ObjectiveVector> returned;
            for (const auto& v : result.returned_objectives()) returned.push_back(problem.original_objectives(v));
            PracticalOutcome o;
            o.row.experiment = experiment;
            o.row.problem = problem.id();
            o.row.n = n;
            o.row.variant = to_string(job.variant);
            o.row.run = job.run;
            o.row.seed = seed;
            o.row.metric = "hv";
            o.row.value = hv_report(returned, ref, Problem::orientation);
            o.row.covered = false;
            o.row.censored = false;
            if (job.run == 0) {
                o.front.problem = problem.id();
                o.front.n = n;
                o.front.variant = to_string(job.variant);
                o.front.orientation = Problem::orientation;
                std::sort(returned.begin(), returned.end());
                for (const auto& v : returned) o.front.points.push_back({v[0].to_double(), v[1].to_double()});
            }
            return o;
        },
        progress);
    for (auto& o : outcomes) {
        rows.push_back(std::move(o.row));
        if (!o.front.problem.empty()) fronts.push_back(std::move(o.front));
    }
}

ExperimentResult run_practical(const ExperimentSpec& spec, const std::string& experiment, const ProgressFn& progress) {
    spec.validate();
    ExperimentResult out;
    out.spec = spec;
    out.manifest = base_manifest(spec);
    nlohmann::json instances = nlohmann::json::array();
    for (const auto& name : spec.problems) {
        for (const auto& cell : spec.cells) {
            const std::uint64_t seed = instance_seed(spec.base_seed, name, cell.n);
            if (name == "KP") {
                run_practical_instance(spec, experiment, KnapsackProblem(generate_kp(cell.n, seed)), cell.n, seed,
                                       out.rows, out.fronts, instances, cell.runs, progress);
            } else if (name == "NK") {
                run_practical_instance(spec, experiment, NkProblem(generate_nk(cell.n, seed)), cell.n, seed, out.rows,
                                       out.fronts, instances, cell.runs, progress);
            } else if (name == "TSP") {
                run_practical_instance(spec, experiment, TspProblem(generate_tsp(cell.n, seed)), cell.n, seed,
                                       out.rows, out.fronts, instances, cell.runs, progress);
            } else if (name == "QAP") {
                run_practical_instance(spec, experiment, QapProblem(generate_qap(cell.n, seed)), cell.n, seed,
                                       out.rows, out.fronts, instances, cell.runs, progress);
            } else {
                throw std::invalid_argument("unknown practical problem '" + name + "'");
            }
        }
    }
    out.manifest["instances"] = instances;
    return out;
}

std::string format_fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string format_sci(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

} // namespace

std::string to_string(ExperimentId id) {
    switch (id) {
    case ExperimentId::table2: return "table2";
    case ExperimentId::table3: return "table3";
    case ExperimentId::table4: return "table4";
    case ExperimentId::fronts: return "fronts";
    case ExperimentId::custom: return "custom";
    }
    return "?";
}

ExperimentId parse_experiment_id(const std::string& name) {
    for (auto id : {ExperimentId::table2, ExperimentId::table3, ExperimentId::table4, ExperimentId::fronts,
                    ExperimentId::custom}) {
        if (to_string(id) == name) return id;
    }
    throw std::invalid_argument("unknown experiment '" + name + "' (expected table2, table3, table4 or fronts)");
}

void ExperimentSpec::validate() const {
    if (!(scale > 0.0 && scale <= 1.0)) {
        throw std::invalid_argument("scale factor must lie in (0, 1]");
    }
    if (cells.empty() || variants.empty() || problems.empty()) {
        throw std::invalid_argument("experiment needs at least one size, variant and problem");
    }
    for (const auto& c : cells) {
        if (c.runs == 0) {
            throw std::invalid_argument("every cell needs at least one run");
        }
    }
    if (!(censor_fraction >= 0.0 && censor_fraction < 1.0)) {
        throw std::invalid_argument("censor fraction must lie in [0, 1)");
    }
    if ((id == ExperimentId::table4 || id == ExperimentId::fronts) && budget <= practical_population_size) {
        throw std::invalid_argument("evaluation budget must exceed the population size of 100");
    }
}

ExperimentSpec full_spec(ExperimentId id) {
    ExperimentSpec spec;
    spec.id = id;
    switch (id) {
    case ExperimentId::table2:
    case ExperimentId::table3:
        spec.problems = {id == ExperimentId::table2 ? "OJZJ_SS_k3_a2" : "OJZJ_k2"};
        spec.cells = {{15, 1000}, {20, 1000}, {25, 1000}, {30, 1000}};
        spec.budget = 1'000'000;
        spec.variants = {Variant::large_population, Variant::archive_store, Variant::archive_reuse};
        break;
    case ExperimentId::table4:
    case ExperimentId::fronts:
        spec.problems = {"KP", "NK", "TSP", "QAP"};
        spec.cells = {{100, id == ExperimentId::table4 ? 30u : 1u},
                      {200, id == ExperimentId::table4 ? 30u : 1u},
                      {500, id == ExperimentId::table4 ? 30u : 1u}};
        spec.budget = 10'000'000;
        spec.variants = {Variant::archive_store, Variant::archive_reuse};
        break;
    case ExperimentId::custom: throw std::invalid_argument("custom experiments have no preset protocol");
    }
    return spec;
}

ExperimentSpec desk_spec(ExperimentId id) {
    ExperimentSpec spec = full_spec(id);
    switch (id) {
    case ExperimentId::table2:
    case ExperimentId::table3: spec.cells = {{15, 1000}, {20, 200}}; break;
    case ExperimentId::table4:
        spec.cells = {{100, 10}};
        spec.budget = 100'000;
        break;
    case ExperimentId::fronts:
        spec.cells = {{100, 1}};
        spec.budget = 100'000;
        break;
    case ExperimentId::custom: break;
    }
    return spec;
}

ExperimentSpec scaled_spec(ExperimentId id, double scale) {
    if (!(scale > 0.0 && scale <= 1.0)) {
        throw std::invalid_argument("scale factor must lie in (0, 1]");
    }
    ExperimentSpec spec = full_spec(id);
    spec.scale = scale;
    for (auto& c : spec.cells) {
        c.runs = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(static_cast<double>(c.runs) * scale)));
    }
    if (id == ExperimentId::table4 || id == ExperimentId::fronts) {
        const auto scaled = static_cast<std::uint64_t>(std::llround(static_cast<double>(spec.budget) * scale));
        spec.budget = std::max<std::uint64_t>(scaled, practical_population_size + 1);
    }
    return spec;
}

void override_runs(ExperimentSpec& spec, std::size_t runs) {
    if (runs == 0) {
        throw std::invalid_argument("runs must be at least 1");
    }
    for (auto& c : spec.cells) c.runs = runs;
}

std::uint64_t run_seed(std::uint64_t base_seed, std::size_t n, std::size_t run) {
    return derive_run_seed(derive_run_seed(base_seed, n), run);
}

std::uint64_t instance_seed(std::uint64_t base_seed, const std::string& problem, std::size_t n) {
    std::uint64_t tag = 0;
    for (char c : problem) tag = tag * 131 + static_cast<unsigned char>(c);
    return derive_run_seed(mix64(base_seed ^ mix64(tag)), n);
}

EngineConfig practical_config(const std::string& problem, Variant variant, std::uint64_t seed,
                              std::uint64_t evaluation_budget) {
    EngineConfig config;
    config.variant = variant;
    config.mu = practical_population_size;
    config.crossover_probability = 1.0;
    config.termination = Termination::budget_only;
    config.seed = seed;
    // the initial population spends mu of the evaluations
    config.max_generations = evaluation_budget > config.mu ? evaluation_budget - config.mu : 0;
    if (problem == "KP" || problem == "NK") {
        config.crossover = CrossoverKind::uniform;
        config.mutation = MutationKind::bitwise;
    } else if (problem == "TSP") {
        config.crossover = CrossoverKind::order;
        config.mutation = MutationKind::two_opt;
        config.mutation_probability = 0.05;
    } else if (problem == "QAP") {
        config.crossover = CrossoverKind::cycle;
        config.mutation = MutationKind::two_swap;
        config.mutation_probability = 0.05;
    } else {
        throw std::invalid_argument("unknown practical problem '" + problem + "'");
    }
    return config;
}

// ---- CSV ----

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) {
        throw std::logic_error("double formatting failed");
    }
    return std::string(buf, ptr);
}

void write_results_csv(std::ostream& out, std::span<const ResultRow> rows) {
    out << results_csv_header << '\n';
    for (const auto& r : rows) {
        require_plain(r.experiment);
        require_plain(r.problem);
        require_plain(r.variant);
        require_plain(r.metric);
        out << r.experiment << ',' << r.problem << ',' << r.n << ',' << r.variant << ',' << r.run << ',' << r.seed
            << ',' << r.metric << ',' << format_double(r.value) << ',' << (r.covered ? 1 : 0) << ','
            << (r.censored ? 1 : 0) << '\n';
    }
}

std::vector<ResultRow> read_results_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || strip_cr(line) != results_csv_header) {
        throw std::invalid_argument("results CSV must start with the header '" + std::string(results_csv_header) +
                                    "'");
    }
    std::vector<ResultRow> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != 10) {
            throw std::invalid_argument("results CSV line " + std::to_string(line_no) + ": expected 10 fields");
        }
        ResultRow r;
        r.experiment = f[0];
        r.problem = f[1];
        r.n = parse_integer<std::size_t>(f[2], "n");
        r.variant = f[3];
        r.run = parse_integer<std::size_t>(f[4], "run");
        r.seed = parse_integer<std::uint64_t>(f[5], "seed");
        r.metric = f[6];
        r.value = parse_double(f[7], "value");
        r.covered = parse_flag(f[8], "covered");
        r.censored = parse_flag(f[9], "censored");
        rows.push_back(std::move(r));
    }
    return rows;
}

void save_results_csv(const std::filesystem::path& path, std::span<const ResultRow> rows) {
    auto out = open_output(path);
    write_results_csv(out, rows);
    finish_output(out, path);
}

std::vector<ResultRow> load_results_csv(const std::filesystem::path& path) {
    auto in = open_input(path);
    try {
        return read_results_csv(in);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path.string() + ": " + e.what());
    }
}

// ---- aggregation ----

std::vector<RuntimeCell> summarize_runtime(std::span<const ResultRow> rows, double censor_fraction) {
    std::vector<RuntimeCell> cells;
    std::vector<std::vector<double>> values;
    std::map<std::tuple<std::string, std::size_t, std::string>, std::size_t> index;
    for (const auto& r : rows) {
        if (r.metric != "generations") continue;
        auto key = std::make_tuple(r.problem, r.n, r.variant);
        auto it = index.find(key);
        if (it == index.end()) {
            it = index.emplace(key, cells.size()).first;
            RuntimeCell c;
            c.problem = r.problem;
            c.n = r.n;
            c.variant = r.variant;
            cells.push_back(std::move(c));
            values.emplace_back();
        }
        auto& cell = cells[it->second];
        values[it->second].push_back(r.value);
        ++cell.runs;
        if (r.censored) ++cell.censored_runs;
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        auto& cell = cells[i];
        if (values[i].size() >= 2) {
            const auto ms = mean_std(values[i]);
            cell.mean = ms.mean;
            cell.std = ms.std;
        } else {
            cell.mean = mean_of(values[i]);
        }
        cell.censored = cell.censored_runs > 0 &&
                        static_cast<double>(cell.censored_runs) > censor_fraction * static_cast<double>(cell.runs);
    }
    return cells;
}

std::vector<HvComparison> summarize_hv(std::span<const ResultRow> rows, double alpha) {
    std::vector<HvComparison> out;
    std::vector<std::array<std::vector<double>, 2>> values;
    std::map<std::pair<std::string, std::size_t>, std::size_t> index;
    for (const auto& r : rows) {
        if (r.metric != "hv") continue;
        int side = r.variant == "A" ? 0 : r.variant == "AR" ? 1 : -1;
        if (side < 0) continue;
        auto key = std::make_pair(r.problem, r.n);
        auto it = index.find(key);
        if (it == index.end()) {
            it = index.emplace(key, out.size()).first;
            HvComparison c;
            c.problem = r.problem;
            c.n = r.n;
            out.push_back(std::move(c));
            values.emplace_back();
        }
        values[it->second][static_cast<std::size_t>(side)].push_back(r.value);
    }
    auto summary = [](const std::vector<double>& v) {
        if (v.empty()) return MeanStd{};
        if (v.size() == 1) return MeanStd{v.front(), 0.0};
        return mean_std(v);
    };
    for (std::size_t i = 0; i < out.size(); ++i) {
        auto& c = out[i];
        const auto& a = values[i][0];
        const auto& ar = values[i][1];
        c.runs = std::max(a.size(), ar.size());
        c.archive_only = summary(a);
        c.archive_reuse = summary(ar);
        if (!a.empty() && !ar.empty()) {
            c.p = wilcoxon_rank_sum(a, ar).p;
            c.significant = c.p < alpha;
        }
    }
    return out;
}

std::string format_runtime_table(std::span<const RuntimeCell> cells) {
    std::vector<std::pair<std::string, std::size_t>> rows;
    std::vector<std::string> variants;
    for (const auto& c : cells) {
        auto key = std::make_pair(c.problem, c.n);
        if (std::find(rows.begin(), rows.end(), key) == rows.end()) rows.push_back(key);
        if (std::find(variants.begin(), variants.end(), c.variant) == variants.end()) variants.push_back(c.variant);
    }
    std::ostringstream out;
    char buf[128];
    std::snprintf(buf, sizeof buf, "%-16s %4s", "problem", "n");
    out << buf;
    for (const auto& v : variants) {
        std::snprintf(buf, sizeof buf, " %14s", ("SMS-EMOA-" + v).c_str());
        out << buf;
    }
    out << '\n';
    for (const auto& [problem, n] : rows) {
        std::snprintf(buf, sizeof buf, "%-16s %4zu", problem.c_str(), n);
        out << buf;
        for (const auto& v : variants) {
            std::string text = "";
            for (const auto& c : cells) {
                if (c.problem == problem && c.n == n && c.variant == v) {
                    text = c.censored ? "-" : format_fixed(c.mean, 2);
                }
            }
            std::snprintf(buf, sizeof buf, " %14s", text.c_str());
            out << buf;
        }
        out << '\n';
    }
    return out.str();
}

std::string format_hv_table(std::span<const HvComparison> cells) {
    std::ostringstream out;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%-10s %-26s %-22s %s\n", "problem", "SMS-EMOA-A", "SMS-EMOA-AR", "p");
    out << buf;
    for (const auto& c : cells) {
        const std::string a = format_sci(c.archive_only.mean) + " (" + format_sci(c.archive_only.std) + ")" +
                              (c.significant ? " +" : "");
        const std::string ar = format_sci(c.archive_reuse.mean) + " (" + format_sci(c.archive_reuse.std) + ")";
        std::snprintf(buf, sizeof buf, "%-10s %-26s %-22s %.4g\n", (c.problem + "-" + std::to_string(c.n)).c_str(),
                      a.c_str(), ar.c_str(), c.p);
        out << buf;
    }
    out << "+ : rank-sum test significant at the 0.05 level\n";
    return out.str();
}

// ---- fronts ----

void write_fronts_csv(std::ostream& out, std::span<const FrontSeries> series) {
    out << "problem,n,variant,orientation,f1,f2\n";
    for (const auto& s : series) {
        require_plain(s.problem);
        require_plain(s.variant);
        for (const auto& p : s.points) {
            out << s.problem << ',' << s.n << ',' << s.variant << ','
                << (s.orientation == Orientation::maximize ? "max" : "min") << ',' << format_double(p[0]) << ','
                << format_double(p[1]) << '\n';
        }
    }
}

std::vector<FrontSeries> read_fronts_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || strip_cr(line) != "problem,n,variant,orientation,f1,f2") {
        throw std::invalid_argument("fronts CSV must start with 'problem,n,variant,orientation,f1,f2'");
    }
    std::vector<FrontSeries> out;
    while (std::getline(in, line)) {
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != 6) {
            throw std::invalid_argument("fronts CSV: expected 6 fields in '" + line + "'");
        }
        const std::size_t n = parse_integer<std::size_t>(f[1], "n");
        if (f[3] != "max" && f[3] != "min") {
            throw std::invalid_argument("fronts CSV: bad orientation '" + f[3] + "'");
        }
        if (out.empty() || out.back().problem != f[0] || out.back().n != n || out.back().variant != f[2]) {
            out.push_back({f[0], n, f[2], f[3] == "max" ? Orientation::maximize : Orientation::minimize, {}});
        }
        out.back().points.push_back({parse_double(f[4], "f1"), parse_double(f[5], "f2")});
    }
    return out;
}

std::string render_front_svg(std::span<const FrontSeries> series) {
    constexpr double panel_w = 360;
    constexpr double panel_h = 320;
    constexpr double left = 70;
    constexpr double right = 20;
    constexpr double top = 40;
    constexpr double bottom = 50;

    std::vector<std::pair<std::string, std::size_t>> panels;
    for (const auto& s : series) {
        auto key = std::make_pair(s.problem, s.n);
        if (std::find(panels.begin(), panels.end(), key) == panels.end()) panels.push_back(key);
    }
    const bool empty = panels.empty();
    if (empty) panels.emplace_back("", 0);

    std::vector<std::string> variants;
    for (const auto& s : series) {
        if (std::find(variants.begin(), variants.end(), s.variant) == variants.end()) variants.push_back(s.variant);
    }
    auto style_of = [&](const std::string& v) {
        auto pos = std::find(variants.begin(), variants.end(), v) - variants.begin();
        return static_cast<std::size_t>(pos);
    };
    static const char* colors[] = {"#1f5fbf", "#000000", "#c0392b", "#27ae60"};

    auto marker = [&](std::ostringstream& o, std::size_t style, double x, double y, const char* cls) {
        const char* color = colors[style % 4];
        if (style % 2 == 0) {
            o << "<circle class=\"" << cls << "\" cx=\"" << format_fixed(x, 2) << "\" cy=\"" << format_fixed(y, 2)
              << "\" r=\"2.5\" fill=\"none\" stroke=\"" << color << "\"/>\n";
        } else {
            o << "<path class=\"" << cls << "\" d=\"M" << format_fixed(x - 3, 2) << ' ' << format_fixed(y - 3, 2)
              << " L" << format_fixed(x + 3, 2) << ' ' << format_fixed(y + 3, 2) << " M" << format_fixed(x - 3, 2)
              << ' ' << format_fixed(y + 3, 2) << " L" << format_fixed(x + 3, 2) << ' ' << format_fixed(y - 3, 2)
              << "\" stroke=\"" << color << "\" fill=\"none\"/>\n";
        }
    };

    const double width = panel_w * static_cast<double>(panels.size());
    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_fixed(width, 0) << "\" height=\""
      << format_fixed(panel_h, 0) << "\" viewBox=\"0 0 " << format_fixed(width, 0) << ' ' << format_fixed(panel_h, 0)
      << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (std::size_t p = 0; p < panels.size(); ++p) {
        const double x0 = panel_w * static_cast<double>(p) + left;
        const double x1 = panel_w * static_cast<double>(p + 1) - right;
        const double y0 = panel_h - bottom; // bottom of the plot area
        const double y1 = top;

        double lo[2] = {0, 0};
        double hi[2] = {1, 1};
        bool first = true;
        const std::string orient_hint = [&] {
            for (const auto& s : series) {
                if (s.problem == panels[p].first && s.n == panels[p].second) {
                    return std::string(s.orientation == Orientation::maximize ? "max" : "min");
                }
            }
            return std::string();
        }();
        for (const auto& s : series) {
            if (s.problem != panels[p].first || s.n != panels[p].second) continue;
            for (const auto& pt : s.points) {
                for (int d = 0; d < 2; ++d) {
                    if (first) {
                        lo[d] = hi[d] = pt[static_cast<std::size_t>(d)];
                    } else {
                        lo[d] = std::min(lo[d], pt[static_cast<std::size_t>(d)]);
                        hi[d] = std::max(hi[d], pt[static_cast<std::size_t>(d)]);
                    }
                }
                first = false;
            }
        }
        for (int d = 0; d < 2; ++d) {
            double span = hi[d] - lo[d];
            if (span <= 0) span = std::max(1.0, std::abs(hi[d]) * 0.1);
            lo[d] -= 0.05 * span;
            hi[d] += 0.05 * span;
        }
        auto sx = [&](double v) { return x0 + (v - lo[0]) / (hi[0] - lo[0]) * (x1 - x0); };
        auto sy = [&](double v) { return y0 - (v - lo[1]) / (hi[1] - lo[1]) * (y0 - y1); };

        o << "<g class=\"panel\">\n";
        o << "<rect x=\"" << format_fixed(x0, 2) << "\" y=\"" << format_fixed(y1, 2) << "\" width=\""
          << format_fixed(x1 - x0, 2) << "\" height=\"" << format_fixed(y0 - y1, 2)
          << "\" fill=\"none\" stroke=\"#444\"/>\n";
        for (int t = 0; t <= 4; ++t) {
            const double fx = lo[0] + (hi[0] - lo[0]) * t / 4.0;
            const double fy = lo[1] + (hi[1] - lo[1]) * t / 4.0;
            char label[32];
            std::snprintf(label, sizeof label, "%.4g", fx);
            o << "<text x=\"" << format_fixed(sx(fx), 2) << "\" y=\"" << format_fixed(y0 + 14, 2)
              << "\" text-anchor=\"middle\">" << label << "</text>\n";
            std::snprintf(label, sizeof label, "%.4g", fy);
            o << "<text x=\"" << format_fixed(x0 - 4, 2) << "\" y=\"" << format_fixed(sy(fy) + 4, 2)
              << "\" text-anchor=\"end\">" << label << "</text>\n";
        }
        const std::string title =
            empty ? std::string("no data") : panels[p].first + "-" + std::to_string(panels[p].second);
        o << "<text x=\"" << format_fixed((x0 + x1) / 2, 2) << "\" y=\"20\" text-anchor=\"middle\" font-size=\"13\">"
          << title << (orient_hint.empty() ? "" : " (" + orient_hint + ")") << "</text>\n";
        o << "<text x=\"" << format_fixed((x0 + x1) / 2, 2) << "\" y=\"" << format_fixed(panel_h - 12, 2)
          << "\" text-anchor=\"middle\">f1</text>\n";
        o << "<text x=\"" << format_fixed(x0 - 50, 2) << "\" y=\"" << format_fixed((y0 + y1) / 2, 2)
          << "\" text-anchor=\"middle\" transform=\"rotate(-90 " << format_fixed(x0 - 50, 2) << ' '
          << format_fixed((y0 + y1) / 2, 2) << ")\">f2</text>\n";

        for (const auto& s : series) {
            if (s.problem != panels[p].first || s.n != panels[p].second) continue;
            for (const auto& pt : s.points) marker(o, style_of(s.variant), sx(pt[0]), sy(pt[1]), "marker");
        }
        // legend
        double ly = y1 + 14;
        for (const auto& v : variants) {
            bool present = std::any_of(series.begin(), series.end(), [&](const FrontSeries& s) {
                return s.variant == v && s.problem == panels[p].first && s.n == panels[p].second;
            });
            if (!present) continue;
            o << "<g class=\"legend-entry\">\n";
            marker(o, style_of(v), x1 - 90, ly - 4, "legend-marker");
            o << "<text x=\"" << format_fixed(x1 - 80, 2) << "\" y=\"" << format_fixed(ly, 2) << "\">SMS-EMOA-" << v
              << "</text>\n</g>\n";
            ly += 16;
        }
        o << "</g>\n";
    }
    o << "</svg>\n";
    return o.str();
}

void emit_front_plot(std::span<const FrontSeries> series, const std::filesystem::path& path) {
    const std::string svg = render_front_svg(series);
    auto out = open_output(path);
    out << svg;
    finish_output(out, path);
}

// ---- drivers ----

ExperimentResult run_table2(const ExperimentSpec& spec, const ProgressFn& progress) {
    if (spec.id != ExperimentId::table2) {
        throw std::invalid_argument("run_table2 needs a table2 spec");
    }
    return run_runtime(spec, "table2", table2_problem, progress);
}

ExperimentResult run_table3(const ExperimentSpec& spec, const ProgressFn& progress) {
    if (spec.id != ExperimentId::table3) {
        throw std::invalid_argument("run_table3 needs a table3 spec");
    }
    return run_runtime(spec, "table3", table3_problem, progress);
}

ExperimentResult run_table4(const ExperimentSpec& spec, const ProgressFn& progress) {
    if (spec.id != ExperimentId::table4) {
        throw std::invalid_argument("run_table4 needs a table4 spec");
    }
    return run_practical(spec, "table4", progress);
}

ExperimentResult run_fronts(const ExperimentSpec& spec, const ProgressFn& progress) {
    if (spec.id != ExperimentId::fronts) {
        throw std::invalid_argument("run_fronts needs a fronts spec");
    }
    return run_practical(spec, "fronts", progress);
}

ExperimentResult run_experiment(const ExperimentSpec& spec, const ProgressFn& progress) {
    switch (spec.id) {
    case ExperimentId::table2: return run_table2(spec, progress);
    case ExperimentId::table3: return run_table3(spec, progress);
    case ExperimentId::table4: return run_table4(spec, progress);
    case ExperimentId::fronts: return run_fronts(spec, progress);
    case ExperimentId::custom: break;
    }
    throw std::invalid_argument("custom experiments are driven through the 'run' command");
}

void write_experiment_outputs(const ExperimentResult& result) {
    const auto& dir = result.spec.out_dir;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw IoError("cannot create directory '" + dir.string() + "': " + ec.message());
    }
    save_results_csv(dir / "results.csv", result.rows);

    const auto summary_path = dir / "summary.csv";
    auto summary = open_output(summary_path);
    if (result.spec.id == ExperimentId::table4 || result.spec.id == ExperimentId::fronts) {
        summary << "problem,n,runs,mean_A,std_A,mean_AR,std_AR,p,significant\n";
        for (const auto& c : summarize_hv(result.rows)) {
            summary << c.problem << ',' << c.n << ',' << c.runs << ',' << format_double(c.archive_only.mean) << ','
                    << format_double(c.archive_only.std) << ',' << format_double(c.archive_reuse.mean) << ','
                    << format_double(c.archive_reuse.std) << ',' << format_double(c.p) << ','
                    << (c.significant ? "yes" : "no") << '\n';
        }
    } else {
        summary << "problem,n,variant,runs,mean,std,censored_runs,cell\n";
        for (const auto& c : summarize_runtime(result.rows, result.spec.censor_fraction)) {
            summary << c.problem << ',' << c.n << ',' << c.variant << ',' << c.runs << ',' << format_double(c.mean)
                    << ',' << format_double(c.std) << ',' << c.censored_runs << ','
                    << (c.censored ? "-" : format_fixed(c.mean, 2)) << '\n';
        }
    }
    finish_output(summary, summary_path);

    if (!result.fronts.empty()) {
        const auto fronts_path = dir / "fronts.csv";
        auto fronts = open_output(fronts_path);
        write_fronts_csv(fronts, result.fronts);
        finish_output(fronts, fronts_path);
        emit_front_plot(result.fronts, dir / "fronts.svg");
    }

    const auto manifest_path = dir / "manifest.json";
    auto manifest = open_output(manifest_path);
    manifest << result.manifest.dump(2) << '\n';
    finish_output(manifest, manifest_path);
}

} // namespace smsemoa
