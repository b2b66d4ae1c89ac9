// Command-line front end: single runs, the batch experiments, instance
// generation and the small analysis helpers.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "smsemoa/harness.hpp"
#include "smsemoa/instance_io.hpp"

namespace {

using namespace smsemoa;

constexpr int exit_invalid = 2;
constexpr int exit_io = 3;

struct RunOptions {
    std::string problem = "ojzj";
    std::string variant = "AR";
    std::size_t n = 15;
    std::size_t k = 2;
    std::size_t a = 2;
    std::size_t mu = 0;
    std::uint64_t seed = 0;
    std::uint64_t budget = 1'000'000;
    std::string trace;
    std::string archive;
    std::string instance;
};

template <class Problem>
void report_run(const Problem& problem, const RunOptions& opt, const EngineConfig& config) {
    SmsEmoa<Problem> engine(problem, config);
    std::ofstream trace;
    if (!opt.trace.empty()) {
        trace.open(opt.trace);
        if (!trace) throw IoError("cannot open '" + opt.trace + "' for writing");
    }
    auto result = engine.run([&](const SmsEmoa<Problem>&, const StepRecord& r) {
        if (trace.is_open()) write_trace_ndjson(trace, std::span<const StepRecord>(&r, 1));
    });
    if (trace.is_open() && !trace.flush()) throw IoError("failed writing '" + opt.trace + "'");

    std::cout << "problem " << problem.id() << " n=" << problem.size() << " variant " << to_string(config.variant)
              << " mu=" << config.mu << " seed=" << config.seed << '\n';
    std::cout << "generations " << result.generations_used << '\n';
    std::cout << "evaluations " << result.evaluations << '\n';
    if (problem.analytic_front() != nullptr) {
        std::cout << "covered " << (result.covered ? "yes" : "no") << '\n';
    }
    const auto returned = result.returned_objectives();
    std::cout << "returned set size " << returned.size() << '\n';
    if (!opt.archive.empty()) {
        std::ofstream out(opt.archive);
        if (!out) throw IoError("cannot open '" + opt.archive + "' for writing");
        if (has_archive(config.variant)) {
            write_archive_csv(out, result.archive);
        } else {
            Archive<typename Problem::genotype_type> final_set;
            for (const auto& s : result.population) final_set.update(s);
            write_archive_csv(out, final_set);
        }
        if (!out.flush()) throw IoError("failed writing '" + opt.archive + "'");
    }
}

template <class Instance, class Problem>
void run_practical(const RunOptions& opt, Instance inst, Variant variant) {
    Problem problem(std::move(inst));
    auto config = practical_config(problem.id(), variant, opt.seed, opt.budget);
    if (opt.mu != 0) {
        config.mu = opt.mu;
        config.max_generations = opt.budget > opt.mu ? opt.budget - opt.mu : 0;
    }
    report_run(problem, opt, config);
}

int cmd_run(const RunOptions& opt) {
    const Variant variant = parse_variant(opt.variant);
    const std::string kind = [&] {
        std::string s;
        for (char c : opt.problem) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        return s;
    }();
    if (kind == "kp" || kind == "nk" || kind == "tsp" || kind == "qap") {
        AnyInstance inst = opt.instance.empty() ? generate_instance(kind, opt.n, opt.seed) : load_instance(opt.instance);
        std::visit(
            [&](auto&& i) {
                using T = std::decay_t<decltype(i)>;
                if constexpr (std::is_same_v<T, KpInstance>) run_practical<KpInstance, KnapsackProblem>(opt, i, variant);
                if constexpr (std::is_same_v<T, NkInstance>) run_practical<NkInstance, NkProblem>(opt, i, variant);
                if constexpr (std::is_same_v<T, TspInstance>) run_practical<TspInstance, TspProblem>(opt, i, variant);
                if constexpr (std::is_same_v<T, QapInstance>) run_practical<QapInstance, QapProblem>(opt, i, variant);
            },
            inst);
        return 0;
    }
    BenchmarkSpec spec;
    switch (parse_benchmark_kind(opt.problem)) {
    case BenchmarkKind::ojzj: spec = BenchmarkSpec::ojzj(opt.n, opt.k); break;
    case BenchmarkKind::ojzj_ss: spec = BenchmarkSpec::ojzj_ss(opt.n, opt.k, opt.a); break;
    case BenchmarkKind::omm: spec = BenchmarkSpec::omm(opt.n); break;
    case BenchmarkKind::lotz: spec = BenchmarkSpec::lotz(opt.n); break;
    }
    BenchmarkProblem problem(spec);
    auto config = benchmark_config(spec, variant, opt.seed, opt.budget);
    if (opt.mu != 0) config.mu = opt.mu;
    report_run(problem, opt, config);
    return 0;
}

int cmd_experiment(const std::string& id_name, double scale, std::size_t runs, std::uint64_t seed,
                   const std::string& out, std::size_t threads, bool quiet) {
    const auto id = parse_experiment_id(id_name);
    ExperimentSpec spec = scale > 0.0 ? scaled_spec(id, scale) : desk_spec(id);
    if (runs != 0) override_runs(spec, runs);
    spec.base_seed = seed;
    spec.out_dir = out;
    spec.threads = threads;
    ProgressFn progress;
    if (!quiet) {
        progress = [](std::size_t done, std::size_t total) {
            if (done == total || done % 100 == 0) std::fprintf(stderr, "\r%zu/%zu runs", done, total);
            if (done == total) std::fprintf(stderr, "\n");
        };
    }
    const auto result = run_experiment(spec, progress);
    write_experiment_outputs(result);
    if (id == ExperimentId::table4 || id == ExperimentId::fronts) {
        std::cout << format_hv_table(summarize_hv(result.rows));
    } else {
        std::cout << format_runtime_table(summarize_runtime(result.rows, spec.censor_fraction));
    }
    std::cout << "results written to " << spec.out_dir.string() << '\n';
    return 0;
}

std::vector<double> read_column(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::string first;
    std::getline(in, first);
    if (!first.empty() && first.back() == '\r') first.pop_back();
    std::vector<double> values;
    if (first == results_csv_header) {
        std::stringstream whole;
        whole << first << '\n' << in.rdbuf();
        for (const auto& r : read_results_csv(whole)) values.push_back(r.value);
        return values;
    }
    // otherwise one number per line
    auto take = [&](const std::string& line) {
        if (line.empty()) return;
        values.push_back(parse_rational(line).to_double());
    };
    take(first);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        take(line);
    }
    return values;
}

int cmd_stats(const std::string& a, const std::string& b) {
    const auto xs = read_column(a);
    const auto ys = read_column(b);
    const auto w = wilcoxon_rank_sum(xs, ys);
    std::cout << "n_a " << xs.size() << " mean_a " << format_double(mean_of(xs)) << '\n';
    std::cout << "n_b " << ys.size() << " mean_b " << format_double(mean_of(ys)) << '\n';
    std::cout << "U " << format_double(w.u) << '\n';
    std::cout << "p " << format_double(w.p) << (w.exact ? " (exact)" : " (normal approximation)") << '\n';
    std::cout << "significant " << (w.p < 0.05 ? "yes" : "no") << '\n';
    return 0;
}

ObjectiveVector parse_pair(const std::string& text) {
    std::string s = text;
    for (char& c : s) {
        if (c == ';' || c == '\t' || c == ' ') c = ',';
    }
    const auto comma = s.find(',');
    if (comma == std::string::npos) {
        throw std::invalid_argument("expected two values separated by a comma: '" + text + "'");
    }
    std::string rest = s.substr(comma + 1);
    while (!rest.empty() && rest.front() == ',') rest.erase(rest.begin());
    return {parse_rational(s.substr(0, comma)), parse_rational(rest)};
}

int cmd_hv(const std::string& front_path, const std::string& ref_text, const std::string& orientation) {
    if (orientation != "max" && orientation != "min") {
        throw std::invalid_argument("orientation must be 'max' or 'min'");
    }
    const auto ref = parse_pair(ref_text);
    std::ifstream in(front_path);
    if (!in) throw IoError("cannot open '" + front_path + "' for reading");
    std::vector<ObjectiveVector> front;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        if (std::isalpha(static_cast<unsigned char>(line.front()))) continue; // header
        front.push_back(parse_pair(line));
    }
    const double hv = hv_report(front, ref, orientation == "max" ? Orientation::maximize : Orientation::minimize);
    std::cout << format_double(hv) << '\n';
    return 0;
}

int cmd_plot(const std::string& results, const std::string& out) {
    const std::filesystem::path dir(results);
    const auto path = std::filesystem::is_directory(dir) ? dir / "fronts.csv" : dir;
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    const auto series = read_fronts_csv(in);
    emit_front_plot(series, out);
    std::cout << "wrote " << out << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SMS-EMOA with an external archive: runs, experiments and analysis helpers"};
    app.require_subcommand(1);

    RunOptions run_opt;
    auto* run = app.add_subcommand("run", "single run on a benchmark or practical problem");
    run->add_option("--problem", run_opt.problem, "ojzj, ojzj_ss, omm, lotz, kp, nk, tsp or qap")->capture_default_str();
    run->add_option("--variant", run_opt.variant, "L, A or AR")->capture_default_str();
    run->add_option("--n", run_opt.n, "problem size")->capture_default_str();
    run->add_option("--k", run_opt.k, "jump parameter")->capture_default_str();
    run->add_option("--a", run_opt.a, "stepping-stone parameter")->capture_default_str();
    run->add_option("--mu", run_opt.mu, "population size (0: the variant's default)")->capture_default_str();
    run->add_option("--seed", run_opt.seed, "run seed")->capture_default_str();
    run->add_option("--budget", run_opt.budget,
                    "generation cap (benchmarks) or evaluation budget (practical problems)")
        ->capture_default_str();
    run->add_option("--trace", run_opt.trace, "write one JSON line per generation");
    run->add_option("--archive", run_opt.archive, "write the returned set as CSV");
    run->add_option("--instance", run_opt.instance, "instance JSON for practical problems");

    std::string exp_id;
    double exp_scale = 0.0;
    std::size_t exp_runs = 0;
    std::uint64_t exp_seed = 0;
    std::string exp_out = "results";
    std::size_t exp_threads = 0;
    bool exp_quiet = false;
    auto* experiment = app.add_subcommand("experiment", "batch experiment: runtime tables, hypervolume table or front plots");
    experiment->add_option("--id", exp_id, "table2, table3, table4 or fronts")->required();
    experiment->add_option("--scale", exp_scale, "fraction of the full protocol, in (0, 1]");
    experiment->add_option("--runs", exp_runs, "override the number of runs per cell");
    experiment->add_option("--seed", exp_seed, "base seed")->capture_default_str();
    experiment->add_option("--out", exp_out, "output directory")->capture_default_str();
    experiment->add_option("--threads", exp_threads, "worker threads (0: all cores)")->capture_default_str();
    experiment->add_flag("--quiet", exp_quiet, "no progress output");

    std::string inst_kind;
    std::size_t inst_n = 100;
    std::uint64_t inst_seed = 0;
    std::string inst_out;
    auto* instances = app.add_subcommand("instances", "generate a practical problem instance");
    instances->add_option("--kind", inst_kind, "kp, nk, tsp or qap")->required();
    instances->add_option("--n", inst_n, "instance size")->capture_default_str();
    instances->add_option("--seed", inst_seed, "generator seed")->capture_default_str();
    instances->add_option("--out", inst_out, "output JSON file")->required();

    std::string stats_a;
    std::string stats_b;
    auto* stats = app.add_subcommand("stats", "rank-sum test between two samples");
    stats->add_option("--a", stats_a, "results CSV or one value per line")->required();
    stats->add_option("--b", stats_b, "results CSV or one value per line")->required();

    std::string hv_front;
    std::string hv_ref;
    std::string hv_orientation = "max";
    auto* hv = app.add_subcommand("hv", "hypervolume of a two-objective point set");
    hv->add_option("--front", hv_front, "file with one 'f1,f2' pair per line")->required();
    hv->add_option("--ref", hv_ref, "reference point 'r1,r2'")->required();
    hv->add_option("--orientation", hv_orientation, "max or min")->capture_default_str();

    std::string plot_results;
    std::string plot_out = "fronts.svg";
    auto* plot = app.add_subcommand("plot", "SVG scatter of final fronts");
    plot->add_option("--results", plot_results, "experiment directory or fronts CSV")->required();
    plot->add_option("--out", plot_out, "SVG file")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_invalid;
    }

    try {
        if (*run) return cmd_run(run_opt);
        if (*experiment) return cmd_experiment(exp_id, exp_scale, exp_runs, exp_seed, exp_out, exp_threads, exp_quiet);
        if (*instances) {
            save_instance(inst_out, generate_instance(inst_kind, inst_n, inst_seed));
            std::cout << "wrote " << inst_out << '\n';
            return 0;
        }
        if (*stats) return cmd_stats(stats_a, stats_b);
        if (*hv) return cmd_hv(hv_front, hv_ref, hv_orientation);
        if (*plot) return cmd_plot(plot_results, plot_out);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_invalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
