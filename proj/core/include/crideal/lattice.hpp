#pragma once

#include "crideal/matrix.hpp"

#include <optional>
#include <vector>

namespace crideal {

// Full-rank lattice (1/denominator) * span(columns of basis) in Q^d, with the
// basis in column Hermite normal form. Equal lattices have identical fields.
class Lattice {
public:
    Lattice() = default;

    static Lattice from_generators(const std::vector<RatVec>& gens, std::size_t dim);
    static Lattice standard(std::size_t dim);

    std::size_t dim() const { return basis_.rows(); }
    const Int& denominator() const { return den_; }
    const IntMatrix& basis() const { return basis_; }

    RatVec column(std::size_t j) const;
    std::vector<RatVec> columns() const;

    bool contains(const RatVec& v) const;
    std::optional<IntVec> coordinates(const RatVec& v) const;
    bool subset_of(const Lattice& other) const;

    // Covolume det(basis) / denominator^d.
    Rat covolume() const;

    // Canonical representative of v + L inside the HNF fundamental box.
    RatVec reduce(const RatVec& v) const;

    Lattice scaled(const Rat& q) const;

    bool operator==(const Lattice& o) const { return den_ == o.den_ && basis_ == o.basis_; }
    bool operator!=(const Lattice& o) const { return !(*this == o); }
    bool operator<(const Lattice& o) const {
        if (den_ != o.den_) return den_ < o.den_;
        return basis_ < o.basis_;
    }

private:
    Int den_ = 1;
    IntMatrix basis_;
};

Lattice lattice_sum(const Lattice& a, const Lattice& b);
Lattice lattice_intersect(const Lattice& a, const Lattice& b);

// [outer : inner]; requires inner subset of outer.
Int lattice_index(const Lattice& inner, const Lattice& outer);

// One representative per coset of inner in outer, in lexicographic order of
// their coordinates in the reduced box; the zero coset comes first.
std::vector<RatVec> coset_reps(const Lattice& inner, const Lattice& outer);

// Solves target = i + j with i in a, j in b; nullopt if target is not in a + b.
std::optional<RatVec> split_in_sum(const Lattice& a, const Lattice& b, const RatVec& target);

// Generator t0 of the rank-one group L ∩ Q*line, as L ∩ Q*line = t0 * Z * line.
Rat line_generator(const Lattice& l, const RatVec& line);

}  // namespace crideal
