#pragma once

#include "crideal_cli/config.hpp"
#include "crideal_cli/syntax.hpp"

namespace crideal::cli {

inline std::string rat_string(const Rat& q) { return q.get_str(); }

template <MonoidBackend B>
json ideal_list(const B& b, const std::vector<typename B::Ideal>& family) {
    json j = json::array();
    for (const auto& r : family) j.push_back(b.describe(r));
    return j;
}

template <MonoidBackend B>
json element_list(const B& b, const std::vector<typename B::Element>& els) {
    json j = json::array();
    for (const auto& x : els) j.push_back(b.format(x));
    return j;
}

template <MonoidBackend B>
json to_json(const B& b, const Certificate<B>& c) {
    json j;
    j["kind"] = std::string(kind_name(c.kind));
    if (c.subject) j["subject"] = b.describe(*c.subject);
    j["family"] = ideal_list(b, c.family);
    j["points"] = element_list(b, c.points);
    json table = json::array();
    for (const auto& [cell, idx] : c.table) table.push_back(json::array({b.format(cell), idx}));
    j["table"] = table;
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

template <MonoidBackend B>
Certificate<B> certificate_from_json(const B& b, const json& j) {
    Certificate<B> c;
    auto kind = kind_from_name(j.at("kind").get<std::string>());
    if (!kind) throw std::invalid_argument("unknown certificate kind " + j.at("kind").dump());
    c.kind = *kind;
    if (j.contains("subject")) c.subject = parse_ideal(b, j.at("subject").get<std::string>());
    for (const auto& r : j.value("family", json::array())) c.family.push_back(parse_ideal(b, r.get<std::string>()));
    for (const auto& p : j.value("points", json::array())) c.points.push_back(parse_element(b, p.get<std::string>()));
    for (const auto& row : j.value("table", json::array()))
        c.table.emplace_back(parse_element(b, row.at(0).get<std::string>()), row.at(1).get<std::size_t>());
    c.note = j.value("note", std::string());
    return c;
}

template <MonoidBackend B>
json outcome_json(const B& b, const Outcome<B>& o) {
    json j;
    j["answer"] = o.answer ? json(*o.answer) : json(nullptr);
    if (o.witness) j["witness"] = b.format(*o.witness);
    j["certificate"] = to_json(b, o.certificate);
    return j;
}

template <MonoidBackend B>
json diagonal_json(const B& b, const DiagonalElement<B>& a) {
    json j = json::array();
    for (const auto& [i, q] : a.terms()) j.push_back({{"ideal", b.describe(i)}, {"coefficient", rat_string(q)}});
    return j;
}

// "2:2+Sigma, -1/2:3+Sigma"; a bare ideal has coefficient 1.
template <MonoidBackend B>
DiagonalElement<B> parse_combination(const B& b, const std::string& s) {
    DiagonalElement<B> a;
    if (trim(s).empty()) return a;
    for (const auto& part : split_top_level(s, ',')) {
        auto colon = find_top_level(part, ':');
        if (colon == std::string::npos)
            a.add(b, parse_ideal(b, part), Rat(1));
        else
            a.add(b, parse_ideal(b, part.substr(colon + 1)), parse_rational(part.substr(0, colon)));
    }
    return a;
}

}  // namespace crideal::cli
