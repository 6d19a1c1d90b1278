#pragma once

#include "crideal/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crideal {

// Element of the number field, as rational coordinates in the chosen Z-basis
// of the maximal order.
struct FieldElement {
    RatVec c;

    bool operator==(const FieldElement& o) const { return c == o.c; }
    bool operator!=(const FieldElement& o) const { return c != o.c; }
    bool operator<(const FieldElement& o) const { return c < o.c; }
};

enum class Principality { Principal, NotPrincipal, Inconclusive };

struct PrincipalSearch {
    Principality status = Principality::Inconclusive;
    std::optional<FieldElement> generator;
};

struct DependenceRow {
    FieldElement h;
    Int n;
    FieldElement h_prime;
    bool in_conductor = false;
    Lattice ideal;                    // I_h
    bool contains_coset = false;      // h + m O_K inside I_h
    bool proper = false;              // I_h strictly inside O_K
    std::optional<std::size_t> doubled_from;  // index of h1 when h == 2*h1
};

struct DependenceReport {
    Int m;
    Lattice conductor;
    std::vector<DependenceRow> rows;
    bool covers = false;
    std::optional<FieldElement> uncovered;
};

struct RingSpec {
    std::string name;
    std::size_t degree = 0;
    std::vector<std::vector<IntVec>> mult_table;  // e_i * e_j = sum_k table[i][j][k] e_k
    std::vector<IntVec> order_basis;              // columns of O inside O_K
    std::optional<IntVec> one;                    // defaults to e_0
    std::vector<RatVec> representatives;          // optional preset H
    std::optional<RatVec> noninvertible;          // r0 for the pair-witness construction
};

class NumberRing {
public:
    explicit NumberRing(RingSpec spec);

    const std::string& name() const { return name_; }
    std::size_t degree() const { return d_; }

    FieldElement zero() const { return FieldElement{RatVec(d_, Rat(0))}; }
    FieldElement one() const { return one_; }
    FieldElement from_integer(const Int& n) const;
    FieldElement from_coordinates(RatVec c) const;

    FieldElement add(const FieldElement& x, const FieldElement& y) const;
    FieldElement sub(const FieldElement& x, const FieldElement& y) const;
    FieldElement neg(const FieldElement& x) const;
    FieldElement mul(const FieldElement& x, const FieldElement& y) const;
    FieldElement scale(const FieldElement& x, const Rat& q) const;
    std::optional<FieldElement> inverse(const FieldElement& x) const;
    FieldElement divide(const FieldElement& x, const FieldElement& y) const;
    bool is_zero(const FieldElement& x) const;

    RatMatrix mult_matrix(const FieldElement& x) const;
    Rat norm(const FieldElement& x) const;

    const Lattice& maximal() const { return maximal_; }
    const Lattice& order() const { return order_; }
    bool in_maximal(const FieldElement& x) const { return is_integral(x.c); }
    bool in_order(const FieldElement& x) const { return order_.contains(x.c); }
    bool is_maximal_order() const { return order_ == maximal_; }
    bool is_order_unit(const FieldElement& x) const;

    Lattice element_times_lattice(const FieldElement& x, const Lattice& l) const;
    Lattice principal_order_ideal(const FieldElement& x) const { return element_times_lattice(x, order_); }
    Lattice ideal_quotient(const Lattice& l1, const Lattice& l2) const;
    bool is_order_module(const Lattice& l) const;
    bool divisorial_check(const Lattice& l) const;

    Lattice conductor() const;
    Int smallest_m() const;
    Int n_of(const FieldElement& h) const;
    FieldElement h_prime(const FieldElement& h) const;
    DependenceReport dependence_report(bool use_preset_representatives = true) const;

    bool imaginary_quadratic() const;
    PrincipalSearch principal_generator(const Lattice& l, long search_bound = 6) const;
    // Elements of the order of norm +-1; complete only for imaginary quadratic
    // orders and degree one.
    std::optional<std::vector<FieldElement>> torsion_units() const;

    // Sublattices of O of index <= bound that are O-ideals, in HNF order.
    std::vector<Lattice> order_ideals_up_to(long bound) const;

    const std::vector<RatVec>& preset_representatives() const { return representatives_; }
    FieldElement noninvertible() const;

    // Order elements sum c_j * b_j with b_j the order basis and |c_j| <= bound.
    std::vector<FieldElement> order_elements(long bound) const;

private:
    std::vector<FieldElement> elements_of_norm(const Lattice& l, const Int& target) const;

    std::string name_;
    std::size_t d_;
    std::vector<std::vector<IntVec>> table_;
    FieldElement one_;
    Lattice maximal_;
    Lattice order_;
    std::vector<RatVec> representatives_;
    std::optional<RatVec> noninvertible_;
};

RingSpec preset_ring(const std::string& name);
std::vector<std::string> preset_ring_names();

}  // namespace crideal
