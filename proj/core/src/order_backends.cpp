#include "crideal/order_backends.hpp"

namespace crideal {

std::string format_field(const NumberRing& ring, const FieldElement& x) {
    const FieldElement one = ring.one();
    std::size_t pivot = 0;
    while (one.c[pivot] == 0) ++pivot;
    Rat q = x.c[pivot] / one.c[pivot];
    if (ring.scale(one, q) == x) return q.get_str();
    return to_string(x.c);
}

std::string describe_lattice(const NumberRing& ring, const Lattice& l) {
    const RatVec one = ring.one().c;
    for (const auto& [base, label] : {std::pair{ring.order(), "O"}, std::pair{ring.maximal(), "OK"}}) {
        Rat q = line_generator(l, one) / line_generator(base, one);
        if (base.scaled(q) == l) return q == 1 ? std::string(label) : q.get_str() + "*" + label;
    }
    if (ring.degree() <= 2) {
        // Quadratic orders: the norm search is cheap, so name principal ideals by a generator.
        auto found = ring.principal_generator(l);
        if (found.generator && ring.principal_order_ideal(*found.generator) == l) {
            FieldElement g = *found.generator;
            for (const auto& c : g.c)
                if (c != 0) {
                    if (c < 0) g = ring.neg(g);
                    break;
                }
            return format_field(ring, g) + "*O";
        }
    }
    std::string s = "lattice(";
    for (std::size_t j = 0; j < l.dim(); ++j) s += (j ? "," : "") + to_string(l.column(j));
    return s + ")";
}

namespace {

GeneratorStatus map_status(Principality p) {
    switch (p) {
        case Principality::Principal: return GeneratorStatus::Principal;
        case Principality::NotPrincipal: return GeneratorStatus::NotPrincipal;
        default: return GeneratorStatus::Unknown;
    }
}

}  // namespace

FieldElement OrderMultMonoid::inverse(const Element& a) const {
    auto inv = ring_->inverse(a);
    if (!inv) throw std::domain_error("zero has no inverse");
    return *inv;
}

Lattice OrderMultMonoid::meet_translate(const Ideal& a, const Element& g, const Ideal& b) const {
    return lattice_intersect(a, ring_->element_times_lattice(g, b));
}

Lattice OrderMultMonoid::left_translate(const Element& p, const Ideal& i) const {
    if (!in_P(p)) throw std::invalid_argument("element " + format(p) + " is not in P");
    return ring_->element_times_lattice(p, i);
}

Lattice OrderMultMonoid::pre_translate(const Element& p, const Ideal& i) const {
    if (!in_P(p)) throw std::invalid_argument("element " + format(p) + " is not in P");
    return lattice_intersect(ring_->order(), ring_->element_times_lattice(inverse(p), i));
}

std::vector<FieldElement> OrderMultMonoid::cover_cells(const Ideal& s, std::span<const Ideal> family) const {
    Lattice common = s;
    for (const auto& r : family) common = lattice_intersect(common, r);
    std::vector<FieldElement> cells;
    for (auto& c : coset_reps(common, s)) cells.push_back(FieldElement{std::move(c)});
    cells.front() = FieldElement{common.column(0)};
    return cells;
}

std::vector<FieldElement> OrderMultMonoid::foundation_cells(const Ideal& s, std::span<const Ideal>) const {
    return {FieldElement{s.column(0)}};
}

GeneratorResult<FieldElement> OrderMultMonoid::principal_generator(const Ideal& i) const {
    PrincipalSearch ps = ring_->principal_generator(i);
    return {map_status(ps.status), ps.generator};
}

std::vector<Lattice> OrderMultMonoid::enumerate_ideals(long bound) const {
    std::vector<Lattice> out;
    for (auto& l : ring_->order_ideals_up_to(bound))
        if (ring_->divisorial_check(l)) out.push_back(std::move(l));
    return out;
}

std::vector<FieldElement> OrderMultMonoid::enumerate_elements(long bound) const {
    std::vector<FieldElement> out;
    for (auto& x : ring_->order_elements(bound))
        if (!ring_->is_zero(x)) out.push_back(std::move(x));
    return out;
}

std::string OrderMultMonoid::format(const Element& g) const { return format_field(*ring_, g); }

std::string OrderMultMonoid::describe(const Ideal& i) const { return describe_lattice(*ring_, i); }

AxbElement AxbMonoid::multiply(const Element& x, const Element& y) const {
    return AxbElement{ring_->add(x.b, ring_->mul(x.a, y.b)), ring_->mul(x.a, y.a)};
}

AxbElement AxbMonoid::inverse(const Element& x) const {
    auto inv = ring_->inverse(x.a);
    if (!inv) throw std::domain_error("ax+b element with zero multiplicative part");
    return AxbElement{ring_->neg(ring_->mul(x.b, *inv)), *inv};
}

bool AxbMonoid::in_P(const Element& g) const {
    return ring_->in_order(g.b) && !ring_->is_zero(g.a) && ring_->in_order(g.a);
}

bool AxbMonoid::is_unit(const Element& g) const { return ring_->in_order(g.b) && ring_->is_order_unit(g.a); }

CosetIdeal AxbMonoid::make_ideal(const FieldElement& r, const Lattice& l) const {
    return CosetIdeal{false, FieldElement{l.reduce(r.c)}, l};
}

bool AxbMonoid::member(const Element& g, const Ideal& i) const {
    if (i.empty || ring_->is_zero(g.a)) return false;
    return i.lattice.contains(g.a.c) && i.lattice.contains(ring_->sub(g.b, i.r).c);
}

CosetIdeal AxbMonoid::intersect(const Ideal& x, const Ideal& y) const {
    if (x.empty || y.empty) return CosetIdeal{};
    if (x == y) return x;
    auto part = split_in_sum(x.lattice, y.lattice, ring_->sub(x.r, y.r).c);
    if (!part) return CosetIdeal{};
    FieldElement t = ring_->sub(x.r, FieldElement{*part});
    return make_ideal(t, lattice_intersect(x.lattice, y.lattice));
}

CosetIdeal AxbMonoid::translate(const Element& g, const Ideal& i) const {
    if (i.empty) return i;
    return make_ideal(ring_->add(g.b, ring_->mul(g.a, i.r)), ring_->element_times_lattice(g.a, i.lattice));
}

CosetIdeal AxbMonoid::meet_translate(const Ideal& x, const Element& g, const Ideal& y) const {
    return intersect(x, translate(g, y));
}

CosetIdeal AxbMonoid::left_translate(const Element& p, const Ideal& i) const {
    if (!in_P(p)) throw std::invalid_argument("element " + format(p) + " is not in P");
    return translate(p, i);
}

CosetIdeal AxbMonoid::pre_translate(const Element& p, const Ideal& i) const {
    if (!in_P(p)) throw std::invalid_argument("element " + format(p) + " is not in P");
    return intersect(whole(), translate(inverse(p), i));
}

Lattice AxbMonoid::common_lattice(const Ideal& s, std::span<const Ideal> family) const {
    Lattice common = s.lattice;
    for (const auto& r : family)
        if (!r.empty) common = lattice_intersect(common, r.lattice);
    return common;
}

std::vector<AxbElement> AxbMonoid::cover_cells(const Ideal& s, std::span<const Ideal> family) const {
    if (s.empty) return {};
    Lattice common = common_lattice(s, family);
    std::vector<FieldElement> reps;
    for (auto& c : coset_reps(common, s.lattice)) reps.push_back(FieldElement{std::move(c)});
    std::vector<FieldElement> mults = reps;
    mults.front() = FieldElement{common.column(0)};
    std::vector<AxbElement> cells;
    cells.reserve(reps.size() * mults.size());
    for (const auto& c : reps)
        for (const auto& a : mults) cells.push_back(AxbElement{ring_->add(s.r, c), a});
    return cells;
}

std::vector<AxbElement> AxbMonoid::foundation_cells(const Ideal& s, std::span<const Ideal> family) const {
    if (s.empty) return {};
    Lattice common = common_lattice(s, family);
    FieldElement a0{common.column(0)};
    std::vector<AxbElement> cells;
    for (auto& c : coset_reps(common, s.lattice))
        cells.push_back(AxbElement{ring_->add(s.r, FieldElement{std::move(c)}), a0});
    return cells;
}

GeneratorResult<AxbElement> AxbMonoid::principal_generator(const Ideal& i) const {
    if (i.empty) return {GeneratorStatus::Empty, std::nullopt};
    PrincipalSearch ps = ring_->principal_generator(i.lattice);
    GeneratorResult<AxbElement> out{map_status(ps.status), std::nullopt};
    if (ps.generator) out.generator = AxbElement{i.r, *ps.generator};
    return out;
}

std::vector<CosetIdeal> AxbMonoid::enumerate_ideals(long bound) const {
    std::vector<CosetIdeal> out;
    for (const auto& l : ring_->order_ideals_up_to(bound)) {
        if (!ring_->divisorial_check(l)) continue;
        for (const auto& r : coset_reps(l, ring_->order())) out.push_back(make_ideal(FieldElement{r}, l));
    }
    return out;
}

std::vector<AxbElement> AxbMonoid::enumerate_elements(long bound) const {
    auto els = ring_->order_elements(bound);
    std::vector<AxbElement> out;
    for (const auto& b : els)
        for (const auto& a : els)
            if (!ring_->is_zero(a)) out.push_back(AxbElement{b, a});
    return out;
}

std::string AxbMonoid::format(const Element& g) const {
    return "(" + format_field(*ring_, g.b) + "," + format_field(*ring_, g.a) + ")";
}

std::string AxbMonoid::describe(const Ideal& i) const {
    if (i.empty) return "empty";
    if (i == whole()) return "P";
    return format_field(*ring_, i.r) + "+" + describe_lattice(*ring_, i.lattice);
}

}  // namespace crideal
