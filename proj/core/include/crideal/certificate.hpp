#pragma once

#include "crideal/backend.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace crideal {

enum class CertificateKind {
    Cover,             // table: every cover cell of S lies in the indexed member
    NonCover,          // points[0] in S outside every member
    Foundation,        // table: every foundation cell p has pP meeting the indexed member
    NonFoundation,     // points[0] in S with pP missing every member
    ProperFoundation,  // Foundation plus points[0] in S outside every member
    Disjointness,      // points p, t, s with psP ∩ tsP = ∅
    Separation,        // points s, s' with s' in sP and s'P disjoint from each member
    PrimeWitness,      // points x, a with a outside every member and x not in aP
    UnitFix,           // points u, t with t outside every member and t^-1 u t not a unit
    NonPrincipalPair,  // points p, q with subject = pP ∩ qP not principal
    PrincipalIdeals,   // the backend has only principal constructible ideals
    Inconclusive,      // bounded search ran out; note says which bound
};

inline std::string_view kind_name(CertificateKind k) {
    switch (k) {
        case CertificateKind::Cover: return "cover";
        case CertificateKind::NonCover: return "non-cover";
        case CertificateKind::Foundation: return "foundation";
        case CertificateKind::NonFoundation: return "non-foundation";
        case CertificateKind::ProperFoundation: return "proper-foundation";
        case CertificateKind::Disjointness: return "disjointness";
        case CertificateKind::Separation: return "separation";
        case CertificateKind::PrimeWitness: return "prime-witness";
        case CertificateKind::UnitFix: return "unit-fix";
        case CertificateKind::NonPrincipalPair: return "non-principal-pair";
        case CertificateKind::PrincipalIdeals: return "principal-ideals";
        case CertificateKind::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

inline std::optional<CertificateKind> kind_from_name(std::string_view s) {
    for (int k = 0; k <= static_cast<int>(CertificateKind::Inconclusive); ++k)
        if (kind_name(static_cast<CertificateKind>(k)) == s) return static_cast<CertificateKind>(k);
    return std::nullopt;
}

template <MonoidBackend B>
struct Certificate {
    using Element = typename B::Element;
    using Ideal = typename B::Ideal;

    CertificateKind kind = CertificateKind::Inconclusive;
    std::optional<Ideal> subject;
    std::vector<Ideal> family;
    std::vector<Element> points;
    std::vector<std::pair<Element, std::size_t>> table;
    std::string note;
};

// Answer of a decision or search. answer is empty when a bounded search was
// inconclusive; witness carries the element a search produced.
template <MonoidBackend B>
struct Outcome {
    std::optional<bool> answer;
    std::optional<typename B::Element> witness;
    Certificate<B> certificate;
};

template <MonoidBackend B>
Outcome<B> inconclusive(std::string note) {
    Outcome<B> o;
    o.certificate.kind = CertificateKind::Inconclusive;
    o.certificate.note = std::move(note);
    return o;
}

template <MonoidBackend B>
bool outside_all(const B& b, const typename B::Element& g, const std::vector<typename B::Ideal>& family) {
    for (const auto& r : family)
        if (b.member(g, r)) return false;
    return true;
}

template <MonoidBackend B>
typename B::Ideal principal_of(const B& b, const typename B::Element& p) {
    return b.left_translate(p, b.whole());
}

template <MonoidBackend B>
bool contained_in(const B& b, const typename B::Ideal& r, const typename B::Ideal& s) {
    return b.intersect(r, s) == r;
}

namespace detail {

template <MonoidBackend B>
bool check_cover_table(const B& b, const Certificate<B>& c) {
    const auto& s = *c.subject;
    auto cells = b.cover_cells(s, c.family);
    if (cells.size() != c.table.size()) return false;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        const auto& [cell, j] = c.table[k];
        if (!(cell == cells[k]) || j >= c.family.size() || !b.member(cell, c.family[j])) return false;
    }
    for (const auto& r : c.family)
        if (!contained_in(b, r, s)) return false;
    return true;
}

template <MonoidBackend B>
bool check_foundation_table(const B& b, const Certificate<B>& c) {
    const auto& s = *c.subject;
    auto cells = b.foundation_cells(s, c.family);
    if (cells.size() != c.table.size()) return false;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        const auto& [cell, j] = c.table[k];
        if (!(cell == cells[k]) || j >= c.family.size() || !b.member(cell, s)) return false;
        if (b.is_empty(b.intersect(principal_of(b, cell), c.family[j]))) return false;
    }
    return true;
}

}  // namespace detail

// Re-checks a certificate using only backend primitives.
template <MonoidBackend B>
bool verify(const B& b, const Certificate<B>& c) {
    const auto& pts = c.points;
    auto need = [&](std::size_t n) { return pts.size() >= n; };
    try {
        switch (c.kind) {
            case CertificateKind::Cover:
                return c.subject && detail::check_cover_table(b, c);
            case CertificateKind::NonCover:
                return c.subject && need(1) && b.member(pts[0], *c.subject) && outside_all(b, pts[0], c.family);
            case CertificateKind::Foundation:
                return c.subject && detail::check_foundation_table(b, c);
            case CertificateKind::ProperFoundation:
                return c.subject && need(1) && detail::check_foundation_table(b, c) &&
                       b.member(pts[0], *c.subject) && outside_all(b, pts[0], c.family);
            case CertificateKind::NonFoundation: {
                if (!c.subject || !need(1) || !b.member(pts[0], *c.subject)) return false;
                auto pp = principal_of(b, pts[0]);
                for (const auto& r : c.family)
                    if (!b.is_empty(b.intersect(pp, r))) return false;
                return true;
            }
            case CertificateKind::Disjointness: {
                if (!need(3) || pts[0] == pts[1] || !b.in_P(pts[2])) return false;
                auto x = principal_of(b, b.multiply(pts[0], pts[2]));
                auto y = principal_of(b, b.multiply(pts[1], pts[2]));
                return b.is_empty(b.intersect(x, y));
            }
            case CertificateKind::Separation: {
                if (!need(2) || !b.member(pts[1], principal_of(b, pts[0]))) return false;
                auto sp = principal_of(b, pts[1]);
                for (const auto& r : c.family)
                    if (!b.is_empty(b.intersect(sp, r))) return false;
                return true;
            }
            case CertificateKind::PrimeWitness:
                return need(2) && b.in_P(pts[1]) && outside_all(b, pts[1], c.family) &&
                       !b.member(pts[0], principal_of(b, pts[1]));
            case CertificateKind::UnitFix: {
                if (!need(2) || !b.is_unit(pts[0]) || pts[0] == b.identity() || !b.in_P(pts[1])) return false;
                if (!outside_all(b, pts[1], c.family)) return false;
                return !b.is_unit(b.multiply(b.multiply(b.inverse(pts[1]), pts[0]), pts[1]));
            }
            case CertificateKind::NonPrincipalPair: {
                if (!need(2) || !c.subject) return false;
                auto meet = b.intersect(principal_of(b, pts[0]), principal_of(b, pts[1]));
                return meet == *c.subject && b.principal_generator(meet).status == GeneratorStatus::NotPrincipal;
            }
            case CertificateKind::PrincipalIdeals:
                return b.principal_ideals_only();
            case CertificateKind::Inconclusive:
                return true;
        }
    } catch (const std::exception&) {
        return false;
    }
    return false;
}

}  // namespace crideal
