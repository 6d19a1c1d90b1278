#pragma once

#include "crideal/backend.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace crideal {

using GridVector = std::vector<std::int64_t>;

// Empty, or the cone corner + N^k. Corners may leave N^k while an ideal is
// being translated by a group element.
struct GridIdeal {
    bool empty = true;
    GridVector corner;

    bool operator==(const GridIdeal& o) const {
        if (empty || o.empty) return empty == o.empty;
        return corner == o.corner;
    }
    bool operator<(const GridIdeal& o) const {
        if (empty || o.empty) return empty && !o.empty;
        return corner < o.corner;
    }
};

class GridMonoid {
public:
    using Element = GridVector;
    using Ideal = GridIdeal;

    explicit GridMonoid(std::size_t rank);

    std::string name() const { return "grid<" + std::to_string(rank_) + ">"; }
    std::size_t rank() const { return rank_; }

    Element identity() const { return Element(rank_, 0); }
    Element multiply(const Element& a, const Element& b) const;
    Element inverse(const Element& a) const;
    bool in_P(const Element& g) const;
    bool is_unit(const Element& g) const { return g == identity(); }

    Ideal whole() const { return GridIdeal{false, identity()}; }
    Ideal principal(const Element& p) const { return GridIdeal{false, p}; }
    bool is_empty(const Ideal& i) const { return i.empty; }
    bool member(const Element& g, const Ideal& i) const;
    Ideal intersect(const Ideal& a, const Ideal& b) const;
    Ideal meet_translate(const Ideal& a, const Element& g, const Ideal& b) const;
    Ideal left_translate(const Element& p, const Ideal& i) const;
    Ideal pre_translate(const Element& p, const Ideal& i) const;

    std::vector<Element> cover_cells(const Ideal& s, std::span<const Ideal> family) const;
    std::vector<Element> foundation_cells(const Ideal& s, std::span<const Ideal> family) const;
    GeneratorResult<Element> principal_generator(const Ideal& i) const;

    // Cones with |corner|_1 <= bound, by total degree then reverse lexicographic.
    std::vector<Ideal> enumerate_ideals(long bound) const;
    std::vector<Element> enumerate_elements(long bound) const;

    bool left_reversible() const { return true; }
    bool trivial_units() const { return true; }
    bool known_right_lcm() const { return true; }
    bool principal_ideals_only() const { return true; }

    std::string format(const Element& g) const;
    std::string describe(const Ideal& i) const;

private:
    void check_dim(const Element& g) const;
    std::size_t rank_;
};

}  // namespace crideal
