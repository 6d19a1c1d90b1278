#include "crideal_cli/config.hpp"

#include "crideal_cli/syntax.hpp"

#include <toml.hpp>

#include <stdexcept>

namespace crideal::cli {

namespace {

json toml_to_json(const toml::node& node) {
    if (auto t = node.as_table()) {
        json j = json::object();
        for (const auto& [k, v] : *t) j[std::string(k.str())] = toml_to_json(v);
        return j;
    }
    if (auto a = node.as_array()) {
        json j = json::array();
        for (const auto& v : *a) j.push_back(toml_to_json(v));
        return j;
    }
    if (auto i = node.as_integer()) return i->get();
    if (auto s = node.as_string()) return s->get();
    if (auto b = node.as_boolean()) return b->get();
    if (node.is_floating_point()) throw std::invalid_argument("floating point values are not accepted; use fraction strings");
    throw std::invalid_argument("unsupported TOML value");
}

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a fraction string, got " + j.dump());
}

IntVec intvec_from_json(const json& j) {
    IntVec v;
    for (const auto& x : j) {
        Rat q = rat_from_json(x);
        if (q.get_den() != 1) throw std::invalid_argument("expected integer entries in " + j.dump());
        v.push_back(q.get_num());
    }
    return v;
}

RatVec ratvec_from_json(const json& j) {
    RatVec v;
    for (const auto& x : j) v.push_back(rat_from_json(x));
    return v;
}

const json& section(const json& config, const char* key) {
    static const json empty = json::object();
    auto it = config.find(key);
    return it == config.end() ? empty : *it;
}

}  // namespace

std::shared_ptr<const NumberRing> ring_from_json(const json& order) {
    if (order.contains("preset")) return std::make_shared<NumberRing>(preset_ring(order.at("preset").get<std::string>()));
    RingSpec spec;
    spec.name = order.value("name", std::string("custom"));
    if (!order.contains("mult_table") || !order.contains("order_basis"))
        throw std::invalid_argument("[order] needs mult_table and order_basis, or a preset");
    for (const auto& row : order.at("mult_table")) {
        std::vector<IntVec> r;
        for (const auto& e : row) r.push_back(intvec_from_json(e));
        spec.mult_table.push_back(std::move(r));
    }
    spec.degree = spec.mult_table.size();
    for (const auto& c : order.at("order_basis")) spec.order_basis.push_back(intvec_from_json(c));
    if (order.contains("one")) spec.one = intvec_from_json(order.at("one"));
    if (order.contains("representatives"))
        for (const auto& r : order.at("representatives")) spec.representatives.push_back(ratvec_from_json(r));
    if (order.contains("noninvertible")) spec.noninvertible = ratvec_from_json(order.at("noninvertible"));
    return std::make_shared<NumberRing>(std::move(spec));
}

LoadedBackend backend_from_json(const json& config) {
    const json& monoid = section(config, "monoid");
    if (!monoid.contains("kind")) throw std::invalid_argument("[monoid] kind is required");
    const auto kind = monoid.at("kind").get<std::string>();
    json descriptor = json::object();
    descriptor["monoid"] = monoid;
    if (kind == "numerical") {
        std::vector<std::int64_t> gens = monoid.value("generators", std::vector<std::int64_t>{2, 3});
        return {NumericalSemigroup(gens), descriptor};
    }
    if (kind == "grid") return {GridMonoid(monoid.value("rank", 2)), descriptor};
    if (kind == "free") return {FreeMonoid(monoid.value("rank", 2)), descriptor};
    if (kind == "order-mult" || kind == "order-axb") {
        json order = section(config, "order");
        if (order.empty() && monoid.contains("preset")) order = json{{"preset", monoid.at("preset")}};
        if (order.empty()) throw std::invalid_argument("order-backed monoids need an [order] table or a preset");
        descriptor["order"] = order;
        auto ring = ring_from_json(order);
        if (kind == "order-mult") return {OrderMultMonoid(ring), descriptor};
        return {AxbMonoid(ring), descriptor};
    }
    throw std::invalid_argument("unknown monoid kind '" + kind + "'");
}

LoadedBackend load_config_file(const std::string& path) {
    toml::table table;
    try {
        table = toml::parse_file(path);
    } catch (const toml::parse_error& e) {
        throw std::invalid_argument("cannot parse " + path + ": " + std::string(e.description()));
    }
    return backend_from_json(toml_to_json(table));
}

LoadedBackend load_preset(const std::string& name) {
    auto colon = name.find(':');
    std::string head = name.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);
    json monoid;
    if (head == "sigma") {
        monoid = {{"kind", "numerical"}, {"generators", {2, 3}}};
    } else if (head == "numerical") {
        std::vector<std::int64_t> gens;
        for (const auto& g : split_top_level(arg, ',')) gens.push_back(std::stoll(g));
        monoid = {{"kind", "numerical"}, {"generators", gens}};
    } else if (head == "grid" || head == "free") {
        monoid = {{"kind", head}, {"rank", arg.empty() ? 2 : std::stoi(arg)}};
    } else if (head == "mult" || head == "axb") {
        monoid = {{"kind", head == "mult" ? "order-mult" : "order-axb"}};
        return backend_from_json({{"monoid", monoid}, {"order", {{"preset", arg}}}});
    } else {
        throw std::invalid_argument("unknown preset '" + name + "'");
    }
    return backend_from_json({{"monoid", monoid}});
}

}  // namespace crideal::cli
