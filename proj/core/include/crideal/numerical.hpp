#pragma once

#include "crideal/backend.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace crideal {

// A subset of Z bounded below that contains a whole tail [threshold, inf).
class TailSet {
public:
    TailSet() = default;

    static TailSet empty_set() { return TailSet(); }
    static TailSet tail(std::int64_t from);
    // Members are the x in [lo, hi) with member(x), plus all of [hi, inf).
    template <class Pred>
    static TailSet build(std::int64_t lo, std::int64_t hi, Pred member);

    bool empty() const { return empty_; }
    std::int64_t min() const { return min_; }
    std::int64_t threshold() const { return threshold_; }
    bool contains(std::int64_t x) const;

    TailSet shifted(std::int64_t g) const;
    friend TailSet intersect(const TailSet& a, const TailSet& b);

    bool operator==(const TailSet& o) const {
        if (empty_ || o.empty_) return empty_ == o.empty_;
        return min_ == o.min_ && threshold_ == o.threshold_ && mask_ == o.mask_;
    }
    bool operator<(const TailSet& o) const;

private:
    bool empty_ = true;
    std::int64_t min_ = 0;
    std::int64_t threshold_ = 0;
    std::vector<bool> mask_;  // over [min, threshold)
};

TailSet intersect(const TailSet& a, const TailSet& b);

template <class Pred>
TailSet TailSet::build(std::int64_t lo, std::int64_t hi, Pred member) {
    TailSet t;
    t.empty_ = false;
    std::int64_t first = hi;
    for (std::int64_t x = lo; x < hi; ++x)
        if (member(x)) {
            first = x;
            break;
        }
    std::int64_t thr = hi;
    while (thr > first && member(thr - 1)) --thr;
    t.min_ = first;
    t.threshold_ = thr;
    t.mask_.resize(static_cast<std::size_t>(thr - first));
    for (std::int64_t x = first; x < thr; ++x) t.mask_[static_cast<std::size_t>(x - first)] = member(x);
    return t;
}

class NumericalSemigroup {
public:
    using Element = std::int64_t;
    using Ideal = TailSet;

    explicit NumericalSemigroup(std::vector<std::int64_t> generators);

    std::string name() const;
    const std::vector<std::int64_t>& generators() const { return gens_; }
    std::int64_t frobenius() const { return frobenius_; }
    // "Sigma" for <2,3>, "P" otherwise; used by describe() and the parser.
    std::string label() const;

    Element identity() const { return 0; }
    Element multiply(Element a, Element b) const { return a + b; }
    Element inverse(Element a) const { return -a; }
    bool in_P(Element g) const { return g >= 0 && whole_.contains(g); }
    bool is_unit(Element g) const { return g == 0; }

    Ideal whole() const { return whole_; }
    Ideal principal(Element p) const { return whole_.shifted(p); }
    bool is_empty(const Ideal& i) const { return i.empty(); }
    bool member(Element g, const Ideal& i) const { return i.contains(g); }
    Ideal intersect(const Ideal& a, const Ideal& b) const { return crideal::intersect(a, b); }
    Ideal meet_translate(const Ideal& a, Element g, const Ideal& b) const {
        return crideal::intersect(a, b.shifted(g));
    }
    Ideal left_translate(Element p, const Ideal& i) const;
    Ideal pre_translate(Element p, const Ideal& i) const;

    std::vector<Element> cover_cells(const Ideal& s, std::span<const Ideal> family) const;
    std::vector<Element> foundation_cells(const Ideal& s, std::span<const Ideal> family) const;
    GeneratorResult<Element> principal_generator(const Ideal& i) const;

    // Constructible ideals with minimum <= bound, ordered by minimum with
    // principal ideals first.
    std::vector<Ideal> enumerate_ideals(long bound) const;
    std::vector<Element> enumerate_elements(long bound) const;

    bool left_reversible() const { return true; }
    bool trivial_units() const { return true; }
    bool known_right_lcm() const { return gens_.size() == 1; }
    bool principal_ideals_only() const { return false; }

    std::string format(Element g) const { return std::to_string(g); }
    std::string describe(const Ideal& i) const;

private:
    std::vector<std::int64_t> gens_;
    std::int64_t frobenius_ = -1;
    TailSet whole_;
};

}  // namespace crideal
