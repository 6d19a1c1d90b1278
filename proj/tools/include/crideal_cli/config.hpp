#pragma once

#include <crideal/crideal.hpp>
#include <nlohmann/json.hpp>

#include <string>
#include <variant>

namespace crideal::cli {

using json = nlohmann::json;

using AnyBackend = std::variant<NumericalSemigroup, GridMonoid, FreeMonoid, OrderMultMonoid, AxbMonoid>;

struct LoadedBackend {
    AnyBackend backend;
    json descriptor;  // {"monoid": {...}, "order": {...}}; enough to rebuild the backend
};

// Accepts the [monoid]/[order] layout of the TOML config, as JSON.
LoadedBackend backend_from_json(const json& config);
LoadedBackend load_config_file(const std::string& path);
// "sigma", "numerical:2,5", "grid:2", "free:2", "mult:Z[sqrt-3]", "axb:Z[2i]".
LoadedBackend load_preset(const std::string& name);

std::shared_ptr<const NumberRing> ring_from_json(const json& order);

}  // namespace crideal::cli
