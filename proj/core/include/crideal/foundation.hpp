#pragma once

#include "crideal/ideal_engine.hpp"

namespace crideal {

// Is C a foundation set for S, i.e. does pP meet ⋃C for every p in S?
// Each foundation cell is checked; the cells are chosen per backend so that
// this is a complete test.
template <MonoidBackend B>
Outcome<B> is_foundation_set(const B& b, const typename B::Ideal& s, const std::vector<typename B::Ideal>& family) {
    for (const auto& r : family)
        if (!contained_in(b, r, s))
            throw std::invalid_argument("family member " + b.describe(r) + " is not contained in " + b.describe(s));
    Outcome<B> out;
    out.certificate.subject = s;
    out.certificate.family = family;
    for (const auto& cell : b.foundation_cells(s, family)) {
        auto pp = principal_of(b, cell);
        std::size_t j = 0;
        while (j < family.size() && b.is_empty(b.intersect(pp, family[j]))) ++j;
        if (j == family.size()) {
            out.answer = false;
            out.witness = cell;
            out.certificate.kind = CertificateKind::NonFoundation;
            out.certificate.points = {cell};
            out.certificate.table.clear();
            return out;
        }
        out.certificate.table.emplace_back(cell, j);
    }
    out.answer = true;
    out.certificate.kind = CertificateKind::Foundation;
    return out;
}

// The relative family {S ∩ R : R in C}, which always lies inside S.
template <MonoidBackend B>
std::vector<typename B::Ideal> relative_family(const B& b, const typename B::Ideal& s,
                                               const std::vector<typename B::Ideal>& family) {
    std::vector<typename B::Ideal> out;
    out.reserve(family.size());
    for (const auto& r : family) out.push_back(b.intersect(s, r));
    return out;
}

}  // namespace crideal
