#pragma once

#include <concepts>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace crideal {

enum class LcmKind { Empty, Principal, NonPrincipal, Unknown };

template <class Element, class Ideal>
struct LcmResult {
    LcmKind kind = LcmKind::Unknown;
    std::optional<Element> generator;
    Ideal ideal{};
};

enum class GeneratorStatus { Empty, Principal, NotPrincipal, Unknown };

template <class Element>
struct GeneratorResult {
    GeneratorStatus status = GeneratorStatus::Unknown;
    std::optional<Element> generator;
};

// Thrown when a bounded search cannot settle a question.
class Inconclusive : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotApplicable : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A concrete submonoid P of a group G with canonical constructible-ideal
// representations.
//
// cover_cells(S, F) returns finitely many points of S such that S is covered
// by F as soon as each cell lies in a member of F. foundation_cells(S, C) does
// the same for the condition pP ∩ ⋃C ≠ ∅.
//
// principal_ideals_only() means every nonempty constructible ideal is principal,
// which makes cover failures and non-principal intersections impossible.
template <class B>
concept MonoidBackend = requires(const B& b, const typename B::Element& g, const typename B::Ideal& i,
                                 std::span<const typename B::Ideal> fam, long bound) {
    typename B::Element;
    typename B::Ideal;
    { b.name() } -> std::convertible_to<std::string>;
    { b.identity() } -> std::same_as<typename B::Element>;
    { b.multiply(g, g) } -> std::same_as<typename B::Element>;
    { b.inverse(g) } -> std::same_as<typename B::Element>;
    { b.in_P(g) } -> std::same_as<bool>;
    { b.is_unit(g) } -> std::same_as<bool>;
    { b.whole() } -> std::same_as<typename B::Ideal>;
    { b.is_empty(i) } -> std::same_as<bool>;
    { b.member(g, i) } -> std::same_as<bool>;
    { b.intersect(i, i) } -> std::same_as<typename B::Ideal>;
    { b.meet_translate(i, g, i) } -> std::same_as<typename B::Ideal>;
    { b.left_translate(g, i) } -> std::same_as<typename B::Ideal>;
    { b.pre_translate(g, i) } -> std::same_as<typename B::Ideal>;
    { b.cover_cells(i, fam) } -> std::same_as<std::vector<typename B::Element>>;
    { b.foundation_cells(i, fam) } -> std::same_as<std::vector<typename B::Element>>;
    { b.principal_generator(i) } -> std::same_as<GeneratorResult<typename B::Element>>;
    { b.enumerate_ideals(bound) } -> std::same_as<std::vector<typename B::Ideal>>;
    { b.enumerate_elements(bound) } -> std::same_as<std::vector<typename B::Element>>;
    { b.left_reversible() } -> std::same_as<bool>;
    { b.trivial_units() } -> std::same_as<bool>;
    { b.known_right_lcm() } -> std::same_as<bool>;
    { b.principal_ideals_only() } -> std::same_as<bool>;
    { b.format(g) } -> std::convertible_to<std::string>;
    { b.describe(i) } -> std::convertible_to<std::string>;
    { g == g } -> std::convertible_to<bool>;
    { i == i } -> std::convertible_to<bool>;
    { i < i } -> std::convertible_to<bool>;
};

}  // namespace crideal
