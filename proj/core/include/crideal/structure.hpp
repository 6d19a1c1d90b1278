#pragma once

#include "crideal/diagonal.hpp"
#include "crideal/order_backends.hpp"

#include <set>
#include <string>
#include <vector>

namespace crideal {

template <MonoidBackend B>
LcmResult<typename B::Element, typename B::Ideal> lcm_pair(const B& b, const typename B::Element& p,
                                                           const typename B::Element& q) {
    for (const auto& x : {p, q})
        if (!b.in_P(x)) throw std::invalid_argument("element " + b.format(x) + " is not in P");
    LcmResult<typename B::Element, typename B::Ideal> r;
    r.ideal = b.intersect(principal_of(b, p), principal_of(b, q));
    auto g = b.principal_generator(r.ideal);
    switch (g.status) {
        case GeneratorStatus::Empty: r.kind = LcmKind::Empty; break;
        case GeneratorStatus::Principal:
            r.kind = LcmKind::Principal;
            r.generator = g.generator;
            break;
        case GeneratorStatus::NotPrincipal: r.kind = LcmKind::NonPrincipal; break;
        case GeneratorStatus::Unknown: r.kind = LcmKind::Unknown; break;
    }
    return r;
}

// Classifies pP ∩ qP for all pairs of enumerated elements. A counterexample
// settles the question; otherwise only a backend with principal ideals only
// gets a definite yes.
template <MonoidBackend B>
Outcome<B> is_right_lcm(const B& b, long bound) {
    auto els = b.enumerate_elements(bound);
    for (std::size_t i = 0; i < els.size(); ++i)
        for (std::size_t j = i; j < els.size(); ++j) {
            auto r = lcm_pair(b, els[i], els[j]);
            if (r.kind != LcmKind::NonPrincipal) continue;
            Outcome<B> out;
            out.answer = false;
            out.certificate.kind = CertificateKind::NonPrincipalPair;
            out.certificate.subject = r.ideal;
            out.certificate.points = {els[i], els[j]};
            return out;
        }
    if (b.principal_ideals_only()) {
        Outcome<B> out;
        out.answer = true;
        out.certificate.kind = CertificateKind::PrincipalIdeals;
        out.certificate.note = "all pairs up to " + std::to_string(bound) + " classified";
        return out;
    }
    return inconclusive<B>("no non-principal intersection among elements up to " + std::to_string(bound));
}

// Searches families of proper ideals, smallest first, for one that is a
// foundation set for P. Finding one means the boundary quotient is proper.
template <MonoidBackend B>
Outcome<B> boundary_equals_toeplitz(const B& b, long bound, std::size_t max_family = 3) {
    using Ideal = typename B::Ideal;
    const auto whole = b.whole();
    std::vector<Ideal> pool;
    for (const auto& r : b.enumerate_ideals(bound))
        if (!b.is_empty(r) && !(r == whole)) pool.push_back(r);

    std::vector<std::size_t> idx;
    std::optional<Outcome<B>> hit;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t size) {
        if (hit) return;
        if (idx.size() == size) {
            std::vector<Ideal> fam;
            for (auto k : idx) fam.push_back(pool[k]);
            auto f = is_foundation_set(b, whole, fam);
            if (!*f.answer) return;
            auto outside = point_outside(b, whole, fam);
            if (!outside) return;
            f.answer = false;
            f.certificate.kind = CertificateKind::ProperFoundation;
            f.certificate.points = {*outside};
            hit = std::move(f);
            return;
        }
        for (std::size_t k = start; k < pool.size() && !hit; ++k) {
            idx.push_back(k);
            rec(k + 1, size);
            idx.pop_back();
        }
    };
    for (std::size_t size = 1; size <= max_family && !hit; ++size) rec(0, size);
    if (hit) return *hit;
    return inconclusive<B>("no proper foundation set among families of size <= " + std::to_string(max_family) +
                           " from ideals up to " + std::to_string(bound));
}

// gpP = pP exactly when p^-1 g p is a unit of P.
template <MonoidBackend B>
bool units_fix_ideal(const B& b, const typename B::Element& g, const typename B::Element& p) {
    return b.is_unit(b.multiply(b.multiply(b.inverse(p), g), p));
}

namespace detail {

template <MonoidBackend B>
void check_unit_and_family(const B& b, const typename B::Element& u, const std::vector<typename B::Ideal>& family) {
    if (b.trivial_units()) throw NotApplicable("the units of P are trivial, so there is no unit u != e");
    if (!b.is_unit(u) || u == b.identity())
        throw std::invalid_argument(b.format(u) + " is not a unit different from the identity");
    for (const auto& r : family)
        if (b.member(b.identity(), r)) throw std::invalid_argument("ideal " + b.describe(r) + " is not proper");
}

template <MonoidBackend B>
Outcome<B> unit_fix_outcome(const typename B::Element& u, const typename B::Element& t,
                            const std::vector<typename B::Ideal>& family) {
    Outcome<B> out;
    out.answer = true;
    out.witness = t;
    out.certificate.kind = CertificateKind::UnitFix;
    out.certificate.family = family;
    out.certificate.points = {u, t};
    return out;
}

template <MonoidBackend B>
Outcome<B> disjointness_outcome(const typename B::Element& p, const typename B::Element& t,
                                const typename B::Element& s) {
    Outcome<B> out;
    out.answer = true;
    out.witness = s;
    out.certificate.kind = CertificateKind::Disjointness;
    out.certificate.points = {p, t, s};
    return out;
}

}  // namespace detail

// t in P outside ⋃C with utP != tP, searched in enumeration order.
template <MonoidBackend B>
Outcome<B> topfree_unit_witness(const B& b, const typename B::Element& u, const std::vector<typename B::Ideal>& family,
                                long bound) {
    detail::check_unit_and_family(b, u, family);
    for (const auto& t : b.enumerate_elements(bound))
        if (outside_all(b, t, family) && !units_fix_ideal(b, u, t)) return detail::unit_fix_outcome<B>(u, t, family);
    return inconclusive<B>("no witness among elements up to " + std::to_string(bound));
}

// Prime search: t = (s, p) with p a rational prime, s in {0, 1}.
Outcome<AxbMonoid> topfree_unit_witness(const AxbMonoid& b, const AxbElement& u, const std::vector<CosetIdeal>& family,
                                        long prime_bound);

// s in P with psP ∩ tsP = ∅, searched in enumeration order.
template <MonoidBackend B>
Outcome<B> topfree_pair_witness(const B& b, const typename B::Element& p, const typename B::Element& t, long bound) {
    if (p == t) throw std::invalid_argument("p and t must differ");
    for (const auto& x : {p, t})
        if (!b.in_P(x)) throw std::invalid_argument("element " + b.format(x) + " is not in P");
    for (const auto& s : b.enumerate_elements(bound))
        if (b.is_empty(b.intersect(principal_of(b, b.multiply(p, s)), principal_of(b, b.multiply(t, s)))))
            return detail::disjointness_outcome<B>(p, t, s);
    return inconclusive<B>("no separating element up to " + std::to_string(bound));
}

// Direct construction: make the additive parts differ, then s = (0, ac) when
// b - d is outside acO, else s = (0, ac x r0) with b - d = ac x and r0 a fixed
// noninvertible element.
Outcome<AxbMonoid> topfree_pair_witness(const AxbMonoid& b, const AxbElement& p, const AxbElement& t, long bound);

// A rational prime a outside ⋃C with x not in aO.
Outcome<OrderMultMonoid> integral_domain_witness(const OrderMultMonoid& b, const FieldElement& x,
                                                 const std::vector<Lattice>& family, long prime_bound);

// s2 in s1P with s2P meeting P ∖ ⋃ qP and s0^-1 s2 P ∩ x s0^-1 s2 P = ∅.
// Only defined for right LCM monoids with nontrivial units.
template <MonoidBackend B>
Outcome<B> d2_check(const B& b, const typename B::Element& s0, const typename B::Element& s1,
                    const std::vector<typename B::Element>& qs, const typename B::Element& x, long bound) {
    if (!b.known_right_lcm()) throw NotApplicable(b.name() + " is not known to be right LCM");
    if (b.trivial_units()) throw NotApplicable("the units of " + b.name() + " are trivial; no unit x != e exists");
    if (!b.is_unit(x) || x == b.identity()) throw std::invalid_argument(b.format(x) + " is not a nontrivial unit");
    if (!b.member(s1, principal_of(b, s0))) throw std::invalid_argument("s1 is not in s0P");
    std::vector<typename B::Ideal> qideals;
    for (const auto& q : qs) qideals.push_back(principal_of(b, q));
    for (const auto& r : b.enumerate_elements(bound)) {
        auto s2 = b.multiply(s1, r);
        auto s2p = principal_of(b, s2);
        if (!point_outside(b, s2p, relative_family(b, s2p, qideals))) continue;
        auto g = b.multiply(b.inverse(s0), s2);
        if (!b.is_empty(b.intersect(principal_of(b, g), principal_of(b, b.multiply(x, g))))) continue;
        Outcome<B> out;
        out.answer = true;
        out.witness = s2;
        out.certificate.kind = CertificateKind::Disjointness;
        out.certificate.points = {g, b.multiply(x, g), b.identity()};
        return out;
    }
    return inconclusive<B>("no s2 found up to " + std::to_string(bound));
}

// s' in sP with s'P ∩ qP = ∅ for every q.
template <MonoidBackend B>
Outcome<B> d3_check(const B& b, const typename B::Element& s, const std::vector<typename B::Element>& qs, long bound) {
    if (!b.in_P(s)) throw std::invalid_argument("element " + b.format(s) + " is not in P");
    std::vector<typename B::Ideal> qideals;
    for (const auto& q : qs) qideals.push_back(principal_of(b, q));
    const auto sp = principal_of(b, s);
    if (!point_outside(b, sp, relative_family(b, sp, qideals)))
        throw std::invalid_argument("sP lies inside the union of the qP");
    for (const auto& r : b.enumerate_elements(bound)) {
        auto s1 = b.multiply(s, r);
        auto s1p = principal_of(b, s1);
        bool ok = true;
        for (const auto& qi : qideals)
            if (!b.is_empty(b.intersect(s1p, qi))) {
                ok = false;
                break;
            }
        if (!ok) continue;
        Outcome<B> out;
        out.answer = true;
        out.witness = s1;
        out.certificate.kind = CertificateKind::Separation;
        out.certificate.family = qideals;
        out.certificate.points = {s, s1};
        return out;
    }
    return inconclusive<B>("no s' found up to " + std::to_string(bound));
}

template <MonoidBackend B>
struct CoverAnalysis {
    typename B::Ideal subject;
    std::vector<typename B::Ideal> candidates;
    std::vector<std::vector<typename B::Ideal>> covers;
    std::vector<Certificate<B>> certificates;  // one cover certificate per family
    std::vector<typename B::Ideal> mandatory;  // members shared by every minimal cover
};

template <MonoidBackend B>
CoverAnalysis<B> minimal_cover_analysis(const B& b, const typename B::Ideal& s, long bound,
                                        std::size_t max_family = 3) {
    CoverAnalysis<B> out{s, proper_subideals(b, s, b.enumerate_ideals(bound)), {}, {}, {}};
    out.covers = minimal_covers(b, s, out.candidates, max_family);
    for (const auto& f : out.covers) out.certificates.push_back(cover_decide(b, s, f).certificate);
    if (out.covers.empty()) return out;
    std::set<typename B::Ideal> common(out.covers.front().begin(), out.covers.front().end());
    for (const auto& f : out.covers) {
        std::set<typename B::Ideal> next;
        for (const auto& r : f)
            if (common.count(r)) next.insert(r);
        common = std::move(next);
    }
    out.mandatory.assign(common.begin(), common.end());
    return out;
}

}  // namespace crideal
