#pragma once

#include "crideal/foundation.hpp"
#include "crideal/matrix.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace crideal {

// Finite rational combination of ideal indicators. Empty ideals and zero
// coefficients are never stored.
template <MonoidBackend B>
class DiagonalElement {
public:
    using Ideal = typename B::Ideal;

    DiagonalElement() = default;

    static DiagonalElement indicator(const B& b, const Ideal& i) {
        DiagonalElement a;
        a.add(b, i, Rat(1));
        return a;
    }

    void add(const B& b, const Ideal& i, const Rat& q) {
        if (q == 0 || b.is_empty(i)) return;
        auto& c = terms_[i];
        c += q;
        if (c == 0) terms_.erase(i);
    }

    const std::map<Ideal, Rat>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool formally_zero() const { return terms_.empty(); }

    std::vector<Ideal> support() const {
        std::vector<Ideal> out;
        for (const auto& [i, q] : terms_) out.push_back(i);
        return out;
    }

private:
    std::map<Ideal, Rat> terms_;
};

inline constexpr std::size_t kDefaultSubsetCap = 16;

inline void check_cap(std::size_t n, std::size_t cap) {
    if (n > cap)
        throw std::invalid_argument("family of size " + std::to_string(n) + " exceeds the subset cap of " +
                                    std::to_string(cap));
}

template <MonoidBackend B>
Rat evaluate(const B& b, const DiagonalElement<B>& a, const typename B::Element& p) {
    if (!b.in_P(p)) throw std::invalid_argument("evaluation point " + b.format(p) + " is not in P");
    Rat v = 0;
    for (const auto& [i, q] : a.terms())
        if (b.member(p, i)) v += q;
    return v;
}

// One subset A of the support: Q_A = ⋂_A ∏_{F∖A}(1 - K).
template <MonoidBackend B>
struct SubsetTerm {
    std::uint64_t mask = 0;  // bit k set when support()[k] is in A
    typename B::Ideal meet;  // ⋂_A
    bool nonzero = false;
    Rat lambda = 0;
    std::optional<typename B::Element> witness;
};

template <MonoidBackend B>
struct Decomposition {
    std::vector<typename B::Ideal> family;
    std::vector<SubsetTerm<B>> subsets;  // all nonempty subsets, mask ascending
};

template <MonoidBackend B>
std::vector<typename B::Ideal> complement_family(const B& b, const std::vector<typename B::Ideal>& family,
                                                 std::uint64_t mask, const typename B::Ideal& meet) {
    std::vector<typename B::Ideal> rest;
    for (std::size_t k = 0; k < family.size(); ++k)
        if (!(mask >> k & 1)) rest.push_back(b.intersect(meet, family[k]));
    return rest;
}

template <MonoidBackend B>
Decomposition<B> decompose(const B& b, const DiagonalElement<B>& a, std::size_t cap = kDefaultSubsetCap) {
    Decomposition<B> d;
    std::vector<Rat> coeff;
    for (const auto& [i, q] : a.terms()) {
        d.family.push_back(i);
        coeff.push_back(q);
    }
    const std::size_t n = d.family.size();
    check_cap(n, cap);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        SubsetTerm<B> t;
        t.mask = mask;
        t.meet = b.whole();
        for (std::size_t k = 0; k < n; ++k)
            if (mask >> k & 1) {
                t.meet = b.intersect(t.meet, d.family[k]);
                t.lambda += coeff[k];
            }
        if (!b.is_empty(t.meet)) {
            t.witness = point_outside(b, t.meet, complement_family(b, d.family, mask, t.meet));
            t.nonzero = t.witness.has_value();
        }
        d.subsets.push_back(std::move(t));
    }
    return d;
}

// max |λ_A| over the nonzero Q_A.
template <MonoidBackend B>
Rat sup_norm(const B& b, const DiagonalElement<B>& a, std::size_t cap = kDefaultSubsetCap) {
    Rat best = 0;
    for (const auto& t : decompose(b, a, cap).subsets)
        if (t.nonzero && abs(t.lambda) > best) best = abs(t.lambda);
    return best;
}

// Zero as a function on P, which is what the relations care about.
template <MonoidBackend B>
bool is_zero(const B& b, const DiagonalElement<B>& a) {
    return sup_norm(b, a) == 0;
}

// ∏_{R in F}(1_S - 1_R) expanded as Σ_{A ⊆ F} (-1)^|A| 1_{S ∩ ⋂A}.
template <MonoidBackend B>
DiagonalElement<B> t4_defect(const B& b, const typename B::Ideal& s, const std::vector<typename B::Ideal>& family,
                             std::size_t cap = kDefaultSubsetCap) {
    for (const auto& r : family)
        if (!contained_in(b, r, s))
            throw std::invalid_argument("family member " + b.describe(r) + " is not contained in " + b.describe(s));
    check_cap(family.size(), cap);
    DiagonalElement<B> out;
    const std::size_t n = family.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        auto meet = s;
        int sign = 1;
        for (std::size_t k = 0; k < n; ++k)
            if (mask >> k & 1) {
                meet = b.intersect(meet, family[k]);
                sign = -sign;
            }
        out.add(b, meet, Rat(sign));
    }
    return out;
}

// A point outside ⋃F for a family of proper ideals. The identity always works.
template <MonoidBackend B>
typename B::Element jointly_proper_witness(const B& b, const std::vector<typename B::Ideal>& family) {
    for (const auto& r : family)
        if (r == b.whole()) throw std::invalid_argument("family contains P itself");
    auto e = b.identity();
    if (!outside_all(b, e, family)) throw std::logic_error("identity lies in a proper ideal");
    return e;
}

// Per surviving subset: is the complementary relative family a foundation set
// for ⋂_A? Projections Q_A given by foundation sets lie in the boundary ideal;
// the others survive in the quotient, are mutually orthogonal and nonzero there,
// so the quotient norm is the max of |λ_A| over them.
template <MonoidBackend B>
struct BoundaryTerm {
    SubsetTerm<B> subset;
    bool foundation = false;
    Certificate<B> certificate;
};

template <MonoidBackend B>
struct BoundaryAnalysis {
    std::vector<typename B::Ideal> family;
    std::vector<BoundaryTerm<B>> terms;  // nonzero subsets with λ_A ≠ 0
    bool in_ideal = true;
    Rat norm = 0;
    std::optional<std::size_t> failing;  // first term that is not a foundation set
};

template <MonoidBackend B>
BoundaryAnalysis<B> boundary_analysis(const B& b, const DiagonalElement<B>& a, std::size_t cap = kDefaultSubsetCap) {
    auto d = decompose(b, a, cap);
    BoundaryAnalysis<B> out;
    out.family = d.family;
    for (auto& t : d.subsets) {
        if (!t.nonzero || t.lambda == 0) continue;
        auto rel = complement_family(b, d.family, t.mask, t.meet);
        auto f = is_foundation_set(b, t.meet, rel);
        BoundaryTerm<B> bt{t, *f.answer, std::move(f.certificate)};
        if (!bt.foundation) {
            if (!out.failing) out.failing = out.terms.size();
            out.in_ideal = false;
            if (abs(t.lambda) > out.norm) out.norm = abs(t.lambda);
        }
        out.terms.push_back(std::move(bt));
    }
    return out;
}

template <MonoidBackend B>
bool in_boundary_ideal(const B& b, const DiagonalElement<B>& a) {
    return boundary_analysis(b, a).in_ideal;
}

template <MonoidBackend B>
Rat boundary_norm(const B& b, const DiagonalElement<B>& a) {
    return boundary_analysis(b, a).norm;
}

}  // namespace crideal
