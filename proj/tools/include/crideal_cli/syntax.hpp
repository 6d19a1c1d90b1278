#pragma once

#include <crideal/crideal.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace crideal::cli {

std::string trim(const std::string& s);
// Splits at sep outside of (), [] and {}.
std::vector<std::string> split_top_level(const std::string& s, char sep);
// Position of the first sep outside brackets, or npos.
std::size_t find_top_level(const std::string& s, char sep);
Rat parse_rational(const std::string& s);

FieldElement parse_field(const NumberRing& ring, const std::string& s);
// "O", "OK", "lattice([..],[..])" and products "x*L".
Lattice parse_lattice(const NumberRing& ring, const std::string& s);

std::int64_t parse_element(const NumericalSemigroup& b, const std::string& s);
GridVector parse_element(const GridMonoid& b, const std::string& s);
FreeWord parse_element(const FreeMonoid& b, const std::string& s);
FieldElement parse_element(const OrderMultMonoid& b, const std::string& s);
AxbElement parse_element(const AxbMonoid& b, const std::string& s);

TailSet parse_ideal_atom(const NumericalSemigroup& b, const std::string& s);
GridIdeal parse_ideal_atom(const GridMonoid& b, const std::string& s);
PrefixIdeal parse_ideal_atom(const FreeMonoid& b, const std::string& s);
Lattice parse_ideal_atom(const OrderMultMonoid& b, const std::string& s);
CosetIdeal parse_ideal_atom(const AxbMonoid& b, const std::string& s);

template <MonoidBackend B>
std::vector<typename B::Element> parse_element_list(const B& b, const std::string& s) {
    std::vector<typename B::Element> out;
    if (trim(s).empty()) return out;
    for (const auto& part : split_top_level(s, ',')) out.push_back(parse_element(b, trim(part)));
    return out;
}

// Ideals: "P", "empty", "K(p1,...,p2k)", backend atoms, joined by '&'.
template <MonoidBackend B>
typename B::Ideal parse_ideal(const B& b, const std::string& text) {
    auto parts = split_top_level(text, '&');
    if (parts.size() > 1) {
        auto acc = parse_ideal(b, parts[0]);
        for (std::size_t k = 1; k < parts.size(); ++k) acc = b.intersect(acc, parse_ideal(b, parts[k]));
        return acc;
    }
    const std::string s = trim(text);
    if (s.empty()) throw std::invalid_argument("empty ideal expression");
    if (s == "P") return b.whole();
    if (s.size() > 3 && s.rfind("K(", 0) == 0 && s.back() == ')') {
        auto entries = parse_element_list(b, s.substr(2, s.size() - 3));
        return ideal_of_word(b, make_word(b, std::move(entries)));
    }
    return parse_ideal_atom(b, s);
}

template <MonoidBackend B>
std::vector<typename B::Ideal> parse_family(const B& b, const std::string& s) {
    std::vector<typename B::Ideal> out;
    if (trim(s).empty()) return out;
    for (const auto& part : split_top_level(s, ',')) out.push_back(parse_ideal(b, part));
    return out;
}

}  // namespace crideal::cli
