#include "smsemoa/instance_io.hpp"

#include <fstream>

namespace smsemoa {

using nlohmann::json;

namespace {

json matrix_rows(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_rows(const json& j) { return IntMatrix::from_rows(j.get<std::vector<std::vector<std::int64_t>>>()); }

void expect_kind(const json& j, const char* kind) {
    if (j.at("kind").get<std::string>() != kind) {
        throw std::invalid_argument(std::string("instance document is not of kind '") + kind + "'");
    }
}

} // namespace

void to_json(json& j, const KpInstance& inst) {
    j = json{{"kind", "kp"},
             {"n", inst.n},
             {"seed", inst.seed},
             {"profits1", inst.profits1},
             {"profits2", inst.profits2},
             {"weights", inst.weights},
             {"capacity", inst.capacity}};
}

void from_json(const json& j, KpInstance& inst) {
    expect_kind(j, "kp");
    inst.n = j.at("n").get<std::size_t>();
    inst.seed = j.at("seed").get<std::uint64_t>();
    inst.profits1 = j.at("profits1").get<std::vector<std::int64_t>>();
    inst.profits2 = j.at("profits2").get<std::vector<std::int64_t>>();
    inst.weights = j.at("weights").get<std::vector<std::int64_t>>();
    inst.capacity = j.at("capacity").get<std::int64_t>();
    inst.validate();
}

void to_json(json& j, const NkInstance& inst) {
    json lands = json::array();
    for (const auto& land : inst.landscapes) {
        lands.push_back(json{{"neighbors", land.neighbors}, {"tables", land.tables}});
    }
    j = json{{"kind", "nk"}, {"n", inst.n}, {"seed", inst.seed}, {"K", inst.k}, {"landscapes", lands}};
}

void from_json(const json& j, NkInstance& inst) {
    expect_kind(j, "nk");
    inst.n = j.at("n").get<std::size_t>();
    inst.seed = j.at("seed").get<std::uint64_t>();
    inst.k = j.at("K").get<std::size_t>();
    const auto& lands = j.at("landscapes");
    if (lands.size() != 2) {
        throw std::invalid_argument("NK instance needs exactly two landscapes");
    }
    for (std::size_t m = 0; m < 2; ++m) {
        inst.landscapes[m].neighbors = lands[m].at("neighbors").get<std::vector<std::vector<std::uint32_t>>>();
        inst.landscapes[m].tables = lands[m].at("tables").get<std::vector<std::vector<std::int64_t>>>();
    }
    inst.validate();
}

void to_json(json& j, const TspInstance& inst) {
    j = json{{"kind", "tsp"},
             {"n", inst.n},
             {"seed", inst.seed},
             {"coordinates1", inst.coordinates[0]},
             {"coordinates2", inst.coordinates[1]},
             {"distances1", matrix_rows(inst.distances[0])},
             {"distances2", matrix_rows(inst.distances[1])}};
}

void from_json(const json& j, TspInstance& inst) {
    expect_kind(j, "tsp");
    inst.n = j.at("n").get<std::size_t>();
    inst.seed = j.at("seed").get<std::uint64_t>();
    for (std::size_t m = 0; m < 2; ++m) {
        const std::string suffix = std::to_string(m + 1);
        inst.coordinates[m] = j.value("coordinates" + suffix, std::vector<std::array<std::int64_t, 2>>{});
        inst.distances[m] = matrix_from_rows(j.at("distances" + suffix));
    }
    inst.validate();
}

void to_json(json& j, const QapInstance& inst) {
    j = json{{"kind", "qap"},
             {"n", inst.n},
             {"seed", inst.seed},
             {"distance", matrix_rows(inst.distance)},
             {"flow1", matrix_rows(inst.flows[0])},
             {"flow2", matrix_rows(inst.flows[1])}};
}

void from_json(const json& j, QapInstance& inst) {
    expect_kind(j, "qap");
    inst.n = j.at("n").get<std::size_t>();
    inst.seed = j.at("seed").get<std::uint64_t>();
    inst.distance = matrix_from_rows(j.at("distance"));
    inst.flows[0] = matrix_from_rows(j.at("flow1"));
    inst.flows[1] = matrix_from_rows(j.at("flow2"));
    inst.validate();
}

AnyInstance generate_instance(const std::string& kind, std::size_t n, std::uint64_t seed) {
    if (kind == "kp") return generate_kp(n, seed);
    if (kind == "nk") return generate_nk(n, seed);
    if (kind == "tsp") return generate_tsp(n, seed);
    if (kind == "qap") return generate_qap(n, seed);
    throw std::invalid_argument("unknown instance kind '" + kind + "'");
}

json instance_to_json(const AnyInstance& inst) {
    return std::visit([](const auto& i) { return json(i); }, inst);
}

AnyInstance instance_from_json(const json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "kp") return j.get<KpInstance>();
    if (kind == "nk") return j.get<NkInstance>();
    if (kind == "tsp") return j.get<TspInstance>();
    if (kind == "qap") return j.get<QapInstance>();
    throw std::invalid_argument("unknown instance kind '" + kind + "'");
}

void save_instance(const std::filesystem::path& path, const AnyInstance& inst) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out << instance_to_json(inst).dump() << '\n';
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

AnyInstance load_instance(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("'" + path.string() + "' is not valid JSON: " + e.what());
    }
    return instance_from_json(j);
}

} // namespace smsemoa
