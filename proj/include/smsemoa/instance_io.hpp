#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "smsemoa/practical.hpp"

namespace smsemoa {

// Instance documents have the shape {"kind", "n", "seed", <payload arrays>}.

void to_json(nlohmann::json& j, const KpInstance& inst);
void from_json(const nlohmann::json& j, KpInstance& inst);
void to_json(nlohmann::json& j, const NkInstance& inst);
void from_json(const nlohmann::json& j, NkInstance& inst);
void to_json(nlohmann::json& j, const TspInstance& inst);
void from_json(const nlohmann::json& j, TspInstance& inst);
void to_json(nlohmann::json& j, const QapInstance& inst);
void from_json(const nlohmann::json& j, QapInstance& inst);

using AnyInstance = std::variant<KpInstance, NkInstance, TspInstance, QapInstance>;

// Generates an instance of kind "kp", "nk", "tsp" or "qap".
AnyInstance generate_instance(const std::string& kind, std::size_t n, std::uint64_t seed);

nlohmann::json instance_to_json(const AnyInstance& inst);
AnyInstance instance_from_json(const nlohmann::json& j);

// Throws IoError naming the path on I/O failure.
void save_instance(const std::filesystem::path& path, const AnyInstance& inst);
AnyInstance load_instance(const std::filesystem::path& path);

} // namespace smsemoa
