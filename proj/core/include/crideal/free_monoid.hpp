#pragma once

#include "crideal/backend.hpp"

#include <span>
#include <string>
#include <vector>

namespace crideal {

// Reduced word in the free group: letter +i is generator i (1-based), -i its inverse.
struct FreeWord {
    std::vector<int> letters;

    bool positive() const;
    std::size_t size() const { return letters.size(); }
    bool operator==(const FreeWord& o) const { return letters == o.letters; }
    bool operator<(const FreeWord& o) const {
        if (letters.size() != o.letters.size()) return letters.size() < o.letters.size();
        return letters < o.letters;
    }
};

// Empty, or the prefix ideal wP for a positive word w.
struct PrefixIdeal {
    bool empty = true;
    FreeWord word;

    bool operator==(const PrefixIdeal& o) const {
        if (empty || o.empty) return empty == o.empty;
        return word == o.word;
    }
    bool operator<(const PrefixIdeal& o) const {
        if (empty || o.empty) return empty && !o.empty;
        return word < o.word;
    }
};

bool is_prefix(const FreeWord& p, const FreeWord& w);

class FreeMonoid {
public:
    using Element = FreeWord;
    using Ideal = PrefixIdeal;

    explicit FreeMonoid(int rank);

    std::string name() const { return "free<" + std::to_string(rank_) + ">"; }
    int rank() const { return rank_; }

    Element identity() const { return FreeWord{}; }
    Element multiply(const Element& a, const Element& b) const;
    Element inverse(const Element& a) const;
    bool in_P(const Element& g) const { return g.positive(); }
    bool is_unit(const Element& g) const { return g.letters.empty(); }
    Element letter(int i) const;

    Ideal whole() const { return PrefixIdeal{false, FreeWord{}}; }
    Ideal principal(const Element& p) const { return PrefixIdeal{false, p}; }
    bool is_empty(const Ideal& i) const { return i.empty; }
    bool member(const Element& g, const Ideal& i) const;
    Ideal intersect(const Ideal& a, const Ideal& b) const;
    // P ∩ gP: uP when g = u v^-1 with u, v positive, otherwise empty.
    Ideal meet_with_translate_of_whole(const Element& g) const;
    Ideal meet_translate(const Ideal& a, const Element& g, const Ideal& b) const;
    Ideal left_translate(const Element& p, const Ideal& i) const;
    Ideal pre_translate(const Element& p, const Ideal& i) const;

    std::vector<Element> cover_cells(const Ideal& s, std::span<const Ideal> family) const;
    // Extensions of the generator of s up to the longest generator in the family.
    std::vector<Element> foundation_cells(const Ideal& s, std::span<const Ideal> family) const;
    GeneratorResult<Element> principal_generator(const Ideal& i) const;

    std::vector<Ideal> enumerate_ideals(long bound) const;
    // Positive words of length <= bound in shortlex order.
    std::vector<Element> enumerate_elements(long bound) const;

    bool left_reversible() const { return false; }
    bool trivial_units() const { return true; }
    bool known_right_lcm() const { return true; }
    bool principal_ideals_only() const { return true; }

    std::string format(const Element& g) const;
    std::string describe(const Ideal& i) const;
    Element parse(const std::string& text) const;

private:
    int rank_;
};

}  // namespace crideal
