#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "smsemoa/harness.hpp"

using namespace smsemoa;
namespace fs = std::filesystem;

namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

fs::path scratch(const std::string& name) {
    auto dir = fs::temp_directory_path() / "smsemoa_harness_tests" / name;
    fs::remove_all(dir);
    return dir;
}

ResultRow row(const std::string& problem, std::size_t n, const std::string& variant, std::size_t run, double value,
              const std::string& metric = "generations", bool censored = false) {
    ResultRow r;
    r.experiment = metric == "hv" ? "table4" : "table3";
    r.problem = problem;
    r.n = n;
    r.variant = variant;
    r.run = run;
    r.seed = run_seed(1, n, run);
    r.metric = metric;
    r.value = value;
    r.covered = metric != "hv" && !censored;
    r.censored = censored;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST_CASE("experiment ids") {
    for (auto id : {ExperimentId::table2, ExperimentId::table3, ExperimentId::table4, ExperimentId::fronts}) {
        CHECK(parse_experiment_id(to_string(id)) == id);
    }
    CHECK_THROWS_AS(parse_experiment_id("table9"), std::invalid_argument);
}

TEST_CASE("protocol presets") {
    const auto t3 = full_spec(ExperimentId::table3);
    CHECK(t3.cells.size() == 4);
    CHECK(t3.cells[3].n == 30);
    CHECK(t3.cells[0].runs == 1000);
    CHECK(t3.budget == 1'000'000);
    CHECK(t3.variants.size() == 3);

    const auto t4 = full_spec(ExperimentId::table4);
    CHECK(t4.budget == 10'000'000);
    CHECK(t4.cells[2].n == 500);
    CHECK(t4.cells[2].runs == 30);
    CHECK(t4.variants == std::vector<Variant>{Variant::archive_store, Variant::archive_reuse});

    const auto desk = desk_spec(ExperimentId::table2);
    CHECK(desk.cells.size() == 2);
    CHECK(desk.cells[0].runs == 1000);
    CHECK(desk.cells[1].runs == 200);
    CHECK(desk_spec(ExperimentId::table4).budget == 100'000);

    const auto tenth = scaled_spec(ExperimentId::table3, 0.1);
    for (const auto& c : tenth.cells) CHECK(c.runs == 100);
    CHECK(tenth.budget == t3.budget);
    CHECK(tenth.variants == t3.variants);
    CHECK(scaled_spec(ExperimentId::table4, 0.01).budget == 100'000);
    CHECK_THROWS_AS(scaled_spec(ExperimentId::table3, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(scaled_spec(ExperimentId::table3, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(full_spec(ExperimentId::custom), std::invalid_argument);

    auto spec = desk;
    override_runs(spec, 7);
    for (const auto& c : spec.cells) CHECK(c.runs == 7);
    CHECK_THROWS_AS(override_runs(spec, 0), std::invalid_argument);
}

TEST_CASE("spec validation") {
    auto spec = desk_spec(ExperimentId::table3);
    CHECK_NOTHROW(spec.validate());
    spec.cells[0].runs = 0;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = desk_spec(ExperimentId::table3);
    spec.scale = 2.0;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec = desk_spec(ExperimentId::table4);
    spec.budget = 100;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}

TEST_CASE("seeds") {
    CHECK(run_seed(5, 15, 0) != run_seed(5, 15, 1));
    CHECK(run_seed(5, 15, 0) != run_seed(5, 20, 0));
    CHECK(run_seed(5, 15, 3) == run_seed(5, 15, 3));
    CHECK(instance_seed(5, "KP", 100) != instance_seed(5, "TSP", 100));
    CHECK(instance_seed(5, "KP", 100) != instance_seed(5, "KP", 200));
    CHECK(instance_seed(5, "KP", 100) != instance_seed(6, "KP", 100));
}

TEST_CASE("practical configurations") {
    const auto kp = practical_config("KP", Variant::archive_reuse, 3, 100'000);
    CHECK(kp.mu == 100);
    CHECK(kp.max_generations == 99'900);
    CHECK(kp.crossover_probability == 1.0);
    CHECK(kp.crossover == CrossoverKind::uniform);
    const auto tsp = practical_config("TSP", Variant::archive_store, 3, 1000);
    CHECK(tsp.crossover == CrossoverKind::order);
    CHECK(tsp.mutation == MutationKind::two_opt);
    CHECK(tsp.mutation_probability == 0.05);
    const auto qap = practical_config("QAP", Variant::archive_store, 3, 1000);
    CHECK(qap.crossover == CrossoverKind::cycle);
    CHECK(qap.mutation == MutationKind::two_swap);
    CHECK_THROWS_AS(practical_config("ZDT", Variant::archive_store, 3, 1000), std::invalid_argument);
}

TEST_CASE("csv round trip") {
    std::vector<ResultRow> rows{row("OJZJ_k2", 15, "AR", 0, 2929), row("OJZJ_k2", 15, "A", 1, 1e6, "generations", true),
                                row("KP", 100, "A", 0, 8.6084709999999997e5, "hv"),
                                row("TSP", 100, "AR", 2, 1.0110000000000001e11, "hv")};
    rows[2].value = 0.1;
    rows[3].value = std::numeric_limits<double>::denorm_min();
    rows[3].seed = std::numeric_limits<std::uint64_t>::max();
    std::ostringstream out;
    write_results_csv(out, rows);
    CHECK(out.str().rfind(std::string(results_csv_header) + "\n", 0) == 0);
    std::istringstream in(out.str());
    CHECK(read_results_csv(in) == rows);

    Rng rng(3);
    std::vector<ResultRow> many;
    for (std::size_t i = 0; i < 500; ++i) {
        auto r = row("P", 1 + rng.index(50), rng.index(2) ? "A" : "AR", i, 0.0, "hv");
        r.value = static_cast<double>(rng.next()) / static_cast<double>(rng.next() | 1);
        many.push_back(r);
    }
    std::ostringstream o2;
    write_results_csv(o2, many);
    std::istringstream i2(o2.str());
    CHECK(read_results_csv(i2) == many);

    std::istringstream bad_header("a,b\n");
    CHECK_THROWS_AS(read_results_csv(bad_header), std::invalid_argument);
    std::istringstream bad_row(std::string(results_csv_header) + "\ntable3,OJZJ,15,A,0,1,generations,abc,1,0\n");
    CHECK_THROWS_AS(read_results_csv(bad_row), std::invalid_argument);
    std::istringstream short_row(std::string(results_csv_header) + "\ntable3,OJZJ,15\n");
    CHECK_THROWS_AS(read_results_csv(short_row), std::invalid_argument);
    CHECK_THROWS_AS(load_results_csv(scratch("missing") / "results.csv"), IoError);
}

TEST_CASE("runtime summary and table") {
    std::vector<ResultRow> rows{row("OJZJ_k2", 15, "L", 0, 10), row("OJZJ_k2", 15, "L", 1, 20),
                                row("OJZJ_k2", 15, "AR", 0, 4),  row("OJZJ_k2", 15, "AR", 1, 6),
                                row("OJZJ_k2", 20, "A", 0, 1e6, "generations", true),
                                row("OJZJ_k2", 20, "A", 1, 50)};
    const auto cells = summarize_runtime(rows);
    REQUIRE(cells.size() == 3);
    CHECK(cells[0].variant == "L");
    CHECK(cells[0].mean == 15.0);
    CHECK(cells[0].std == doctest::Approx(std::sqrt(50.0)));
    CHECK(cells[1].mean == 5.0);
    CHECK(cells[2].censored);
    CHECK(cells[2].censored_runs == 1);
    CHECK_FALSE(cells[0].censored);
    // tolerate up to half the runs at the cap
    CHECK_FALSE(summarize_runtime(rows, 0.5)[2].censored);

    const auto table = format_runtime_table(cells);
    CHECK(table.find("15.00") != std::string::npos);
    CHECK(table.find("5.00") != std::string::npos);
    CHECK(table.find(" -\n") != std::string::npos);
    CHECK(table.find("SMS-EMOA-AR") != std::string::npos);
}

TEST_CASE("hypervolume summary and table") {
    std::vector<ResultRow> rows;
    for (std::size_t r = 0; r < 10; ++r) {
        rows.push_back(row("KP", 100, "A", r, 100.0 + static_cast<double>(r), "hv"));
        rows.push_back(row("KP", 100, "AR", r, 200.0 + static_cast<double>(r), "hv"));
        rows.push_back(row("NK", 100, "A", r, static_cast<double>(r % 3), "hv"));
        rows.push_back(row("NK", 100, "AR", r, static_cast<double>((r + 1) % 3), "hv"));
    }
    const auto cells = summarize_hv(rows);
    REQUIRE(cells.size() == 2);
    CHECK(cells[0].problem == "KP");
    CHECK(cells[0].runs == 10);
    CHECK(cells[0].archive_only.mean == doctest::Approx(104.5));
    CHECK(cells[0].archive_reuse.mean == doctest::Approx(204.5));
    CHECK(cells[0].significant);
    CHECK(cells[0].p < 0.001);
    CHECK_FALSE(cells[1].significant);
    const auto table = format_hv_table(cells);
    CHECK(count_of(table, " +") == 1);
    CHECK(table.find("KP-100") != std::string::npos);
}

TEST_CASE("fronts csv and plot") {
    std::vector<FrontSeries> series{
        {"KP", 100, "A", Orientation::maximize, {{1, 5}, {2, 4}, {3, 1}}},
        {"KP", 100, "AR", Orientation::maximize, {{1.5, 5}, {2.5, 3.25}, {4, 0.5}}},
    };
    std::ostringstream out;
    write_fronts_csv(out, series);
    std::istringstream in(out.str());
    const auto back = read_fronts_csv(in);
    REQUIRE(back.size() == 2);
    CHECK(back[1].points == series[1].points);
    CHECK(back[0].orientation == Orientation::maximize);

    const auto svg = render_front_svg(series);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(count_of(svg, "class=\"marker\"") == 6);
    CHECK(count_of(svg, "class=\"legend-entry\"") == 2);
    CHECK(render_front_svg(series) == svg);

    const auto blank = render_front_svg(std::vector<FrontSeries>{});
    CHECK(blank.find("</svg>") != std::string::npos);
    CHECK(count_of(blank, "class=\"marker\"") == 0);
    CHECK(count_of(blank, "<text") >= 10);

    std::vector<FrontSeries> two_panels = series;
    two_panels.push_back({"TSP", 100, "A", Orientation::minimize, {{10, 20}}});
    CHECK(count_of(render_front_svg(two_panels), "class=\"panel\"") == 2);

    std::istringstream bad("problem,n\n");
    CHECK_THROWS_AS(read_fronts_csv(bad), std::invalid_argument);
}

TEST_CASE("runtime experiment end to end") {
    ExperimentSpec spec = desk_spec(ExperimentId::table3);
    spec.cells = {{10, 6}};
    spec.base_seed = 77;
    spec.threads = 1;
    spec.out_dir = scratch("table3");
    const auto serial = run_experiment(spec);
    REQUIRE(serial.rows.size() == 18);
    spec.threads = 3;
    const auto parallel = run_experiment(spec);
    CHECK(parallel.rows == serial.rows);

    for (const auto& r : serial.rows) {
        CHECK(r.seed == run_seed(77, 10, r.run));
        CHECK(r.covered);
        CHECK(r.metric == "generations");
    }
    // the same seed is shared across variants
    CHECK(serial.rows[0].seed == serial.rows[6].seed);

    write_experiment_outputs(serial);
    CHECK(load_results_csv(spec.out_dir / "results.csv") == serial.rows);
    CHECK(fs::exists(spec.out_dir / "summary.csv"));
    const auto manifest = nlohmann::json::parse(slurp(spec.out_dir / "manifest.json"));
    CHECK(manifest.at("spec").at("base_seed") == 77);
    CHECK_FALSE(fs::exists(spec.out_dir / "fronts.svg"));

    // summaries are pure folds over persisted rows
    const auto reloaded = load_results_csv(spec.out_dir / "results.csv");
    CHECK(format_runtime_table(summarize_runtime(reloaded)) == format_runtime_table(summarize_runtime(serial.rows)));

    ExperimentSpec custom = spec;
    custom.id = ExperimentId::custom;
    CHECK_THROWS_AS(run_experiment(custom), std::invalid_argument);
    CHECK_THROWS_AS(run_table2(spec), std::invalid_argument);
}

TEST_CASE("practical experiment end to end") {
    ExperimentSpec spec = desk_spec(ExperimentId::table4);
    spec.problems = {"KP", "TSP"};
    spec.cells = {{12, 3}};
    spec.budget = 400;
    spec.reference_samples = 500;
    spec.base_seed = 4;
    spec.out_dir = scratch("table4");
    const auto result = run_experiment(spec);
    CHECK(result.rows.size() == 12);
    CHECK(result.fronts.size() == 4);
    for (const auto& r : result.rows) {
        CHECK(r.metric == "hv");
        CHECK(r.value >= 0.0);
    }
    CHECK(result.manifest.at("instances").size() == 2);
    write_experiment_outputs(result);
    CHECK(fs::exists(spec.out_dir / "fronts.csv"));
    CHECK(fs::exists(spec.out_dir / "fronts.svg"));
    const auto summary = slurp(spec.out_dir / "summary.csv");
    CHECK(summary.rfind("problem,n,runs,mean_A,std_A,mean_AR,std_AR,p,significant\n", 0) == 0);
    CHECK(count_of(summary, "\n") == 3);
    CHECK(run_experiment(spec).rows == result.rows);

    ExperimentSpec unknown = spec;
    unknown.problems = {"ZDT"};
    CHECK_THROWS_AS(run_experiment(unknown), std::invalid_argument);

    ExperimentResult broken = result;
    broken.spec.out_dir = "/proc/no/such/dir";
    CHECK_THROWS_AS(write_experiment_outputs(broken), IoError);
}
