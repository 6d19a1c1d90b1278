#pragma once

#include "crideal/backend.hpp"
#include "crideal/number_ring.hpp"

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace crideal {

// P = O \ {0} inside K^*. An ideal I^x is stored as the lattice I; it is
// never empty since P is left reversible.
class OrderMultMonoid {
public:
    using Element = FieldElement;
    using Ideal = Lattice;

    explicit OrderMultMonoid(std::shared_ptr<const NumberRing> ring) : ring_(std::move(ring)) {}

    const NumberRing& ring() const { return *ring_; }
    std::shared_ptr<const NumberRing> ring_ptr() const { return ring_; }
    std::string name() const { return "order-mult<" + ring_->name() + ">"; }

    Element identity() const { return ring_->one(); }
    Element multiply(const Element& a, const Element& b) const { return ring_->mul(a, b); }
    Element inverse(const Element& a) const;
    bool in_P(const Element& g) const { return !ring_->is_zero(g) && ring_->in_order(g); }
    bool is_unit(const Element& g) const { return ring_->is_order_unit(g); }

    Ideal whole() const { return ring_->order(); }
    Ideal principal(const Element& p) const { return ring_->principal_order_ideal(p); }
    bool is_empty(const Ideal&) const { return false; }
    bool member(const Element& g, const Ideal& i) const { return !ring_->is_zero(g) && i.contains(g.c); }
    Ideal intersect(const Ideal& a, const Ideal& b) const { return lattice_intersect(a, b); }
    Ideal meet_translate(const Ideal& a, const Element& g, const Ideal& b) const;
    Ideal left_translate(const Element& p, const Ideal& i) const;
    Ideal pre_translate(const Element& p, const Ideal& i) const;

    std::vector<Element> cover_cells(const Ideal& s, std::span<const Ideal> family) const;
    std::vector<Element> foundation_cells(const Ideal& s, std::span<const Ideal> family) const;
    GeneratorResult<Element> principal_generator(const Ideal& i) const;

    // Divisorial ideals of O with index <= bound.
    std::vector<Ideal> enumerate_ideals(long bound) const;
    std::vector<Element> enumerate_elements(long bound) const;

    bool left_reversible() const { return true; }
    bool trivial_units() const { return false; }
    bool known_right_lcm() const { return false; }
    bool principal_ideals_only() const { return false; }

    std::string format(const Element& g) const;
    std::string describe(const Ideal& i) const;

private:
    std::shared_ptr<const NumberRing> ring_;
};

struct AxbElement {
    FieldElement b;  // additive part
    FieldElement a;  // multiplicative part

    bool operator==(const AxbElement& o) const { return b == o.b && a == o.a; }
    bool operator<(const AxbElement& o) const {
        if (b != o.b) return b < o.b;
        return a < o.a;
    }
};

// Empty, or (r + I) x I^x with r reduced modulo I.
struct CosetIdeal {
    bool empty = true;
    FieldElement r;
    Lattice lattice;

    bool operator==(const CosetIdeal& o) const {
        if (empty || o.empty) return empty == o.empty;
        return r == o.r && lattice == o.lattice;
    }
    bool operator<(const CosetIdeal& o) const {
        if (empty || o.empty) return empty && !o.empty;
        if (lattice != o.lattice) return lattice < o.lattice;
        return r < o.r;
    }
};

// P = O ⋊ O^x inside K ⋊ K^*, with (b,a)(d,c) = (b + ad, ac).
class AxbMonoid {
public:
    using Element = AxbElement;
    using Ideal = CosetIdeal;

    explicit AxbMonoid(std::shared_ptr<const NumberRing> ring) : ring_(std::move(ring)) {}

    const NumberRing& ring() const { return *ring_; }
    std::shared_ptr<const NumberRing> ring_ptr() const { return ring_; }
    std::string name() const { return "order-axb<" + ring_->name() + ">"; }

    Element identity() const { return AxbElement{ring_->zero(), ring_->one()}; }
    Element multiply(const Element& x, const Element& y) const;
    Element inverse(const Element& x) const;
    bool in_P(const Element& g) const;
    bool is_unit(const Element& g) const;

    Ideal make_ideal(const FieldElement& r, const Lattice& l) const;
    Ideal whole() const { return make_ideal(ring_->zero(), ring_->order()); }
    Ideal principal(const Element& p) const { return translate(p, whole()); }
    bool is_empty(const Ideal& i) const { return i.empty; }
    bool member(const Element& g, const Ideal& i) const;
    Ideal intersect(const Ideal& x, const Ideal& y) const;
    // g * X as a set of group elements.
    Ideal translate(const Element& g, const Ideal& i) const;
    Ideal meet_translate(const Ideal& x, const Element& g, const Ideal& y) const;
    Ideal left_translate(const Element& p, const Ideal& i) const;
    Ideal pre_translate(const Element& p, const Ideal& i) const;

    // Pairs (s + c, a) with c running over reps of L = I ∩ ⋂J inside I and a
    // over reps of L inside I, the zero class replaced by a nonzero element of L.
    std::vector<Element> cover_cells(const Ideal& s, std::span<const Ideal> family) const;
    // (s + c, a0) with a0 a fixed nonzero element of L; foundation reduces to
    // the additive cover s + I ⊆ ⋃(r_j + J_j).
    std::vector<Element> foundation_cells(const Ideal& s, std::span<const Ideal> family) const;
    GeneratorResult<Element> principal_generator(const Ideal& i) const;

    std::vector<Ideal> enumerate_ideals(long bound) const;
    std::vector<Element> enumerate_elements(long bound) const;

    bool left_reversible() const { return false; }
    bool trivial_units() const { return false; }
    bool known_right_lcm() const { return false; }
    bool principal_ideals_only() const { return false; }

    std::string format(const Element& g) const;
    std::string describe(const Ideal& i) const;

private:
    Lattice common_lattice(const Ideal& s, std::span<const Ideal> family) const;
    std::shared_ptr<const NumberRing> ring_;
};

std::string format_field(const NumberRing& ring, const FieldElement& x);
std::string describe_lattice(const NumberRing& ring, const Lattice& l);

}  // namespace crideal
