#pragma once

#include "crideal/certificate.hpp"
#include "crideal/word.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace crideal {

// K(α) by the nested recursion X <- P ∩ p2j^-1 (p2j-1 X), innermost pair first.
template <MonoidBackend B>
typename B::Ideal ideal_of_word(const B& b, const Word<typename B::Element>& w) {
    auto x = b.whole();
    for (std::size_t k = 0; k + 1 < w.size(); k += 2) {
        x = b.left_translate(w.entries[k], x);
        x = b.pre_translate(w.entries[k + 1], x);
        if (b.is_empty(x)) break;
    }
    return x;
}

// K(α) = P ∩ ⋂ gP over g in Q(α).
template <MonoidBackend B>
typename B::Ideal ideal_of_word_direct(const B& b, const Word<typename B::Element>& w) {
    auto x = b.whole();
    for (const auto& g : quotient_set(b, w)) x = b.meet_translate(x, g, b.whole());
    return x;
}

// Distinct ideals, first-seen order kept.
template <MonoidBackend B>
std::vector<typename B::Ideal> dedupe(const B&, const std::vector<typename B::Ideal>& in) {
    std::vector<typename B::Ideal> out;
    std::set<typename B::Ideal> seen;
    for (const auto& i : in)
        if (seen.insert(i).second) out.push_back(i);
    return out;
}

template <MonoidBackend B>
std::optional<typename B::Element> point_outside(const B& b, const typename B::Ideal& s,
                                                 const std::vector<typename B::Ideal>& family) {
    for (const auto& cell : b.cover_cells(s, family))
        if (outside_all(b, cell, family)) return cell;
    return std::nullopt;
}

// Does S = ⋃F? Members of F must lie in S.
template <MonoidBackend B>
Outcome<B> cover_decide(const B& b, const typename B::Ideal& s, const std::vector<typename B::Ideal>& family) {
    for (const auto& r : family)
        if (!contained_in(b, r, s))
            throw std::invalid_argument("family member " + b.describe(r) + " is not contained in " + b.describe(s));
    Outcome<B> out;
    out.certificate.subject = s;
    out.certificate.family = family;
    for (const auto& cell : b.cover_cells(s, family)) {
        std::size_t j = 0;
        while (j < family.size() && !b.member(cell, family[j])) ++j;
        if (j == family.size()) {
            out.answer = false;
            out.witness = cell;
            out.certificate.kind = CertificateKind::NonCover;
            out.certificate.points = {cell};
            out.certificate.table.clear();
            return out;
        }
        out.certificate.table.emplace_back(cell, j);
    }
    out.answer = true;
    out.certificate.kind = CertificateKind::Cover;
    return out;
}

// All ideals K(α) for words of length <= max_length with entries from the
// given list, computed level by level on distinct ideals.
template <MonoidBackend B>
std::vector<typename B::Ideal> enumerate_word_ideals(const B& b, const std::vector<typename B::Element>& entries,
                                                     std::size_t max_length) {
    std::set<typename B::Ideal> all{b.whole()};
    std::set<typename B::Ideal> level{b.whole()};
    for (std::size_t len = 2; len <= max_length; len += 2) {
        std::set<typename B::Ideal> next;
        for (const auto& x : level) {
            if (b.is_empty(x)) continue;
            for (const auto& p : entries) {
                auto y = b.left_translate(p, x);
                for (const auto& q : entries) next.insert(b.pre_translate(q, y));
            }
        }
        level.clear();
        for (const auto& i : next)
            if (all.insert(i).second) level.insert(i);
        if (level.empty()) break;
    }
    return {all.begin(), all.end()};
}

// Families drawn from candidates that cover S and lose that property when any
// member is dropped. Each step branches over the candidates containing the
// first uncovered cell, so every minimal cover of size <= max_size is reached.
template <MonoidBackend B>
std::vector<std::vector<typename B::Ideal>> minimal_covers(const B& b, const typename B::Ideal& s,
                                                           const std::vector<typename B::Ideal>& candidates,
                                                           std::size_t max_size) {
    using Ideal = typename B::Ideal;
    std::set<std::vector<Ideal>> found;
    std::vector<Ideal> chosen;
    std::function<void()> rec = [&]() {
        auto w = point_outside(b, s, chosen);
        if (!w) {
            auto f = chosen;
            std::sort(f.begin(), f.end());
            found.insert(std::move(f));
            return;
        }
        if (chosen.size() == max_size) return;
        for (const auto& c : candidates) {
            if (!b.member(*w, c)) continue;
            chosen.push_back(c);
            rec();
            chosen.pop_back();
        }
    };
    rec();
    std::vector<std::vector<Ideal>> out;
    for (const auto& f : found) {
        bool minimal = true;
        for (std::size_t k = 0; k < f.size() && minimal; ++k) {
            auto g = f;
            g.erase(g.begin() + static_cast<std::ptrdiff_t>(k));
            if (!point_outside(b, s, g)) minimal = false;
        }
        if (minimal) out.push_back(f);
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
    return out;
}

// Nonempty ideals from the enumeration strictly inside S.
template <MonoidBackend B>
std::vector<typename B::Ideal> proper_subideals(const B& b, const typename B::Ideal& s,
                                                const std::vector<typename B::Ideal>& pool) {
    std::vector<typename B::Ideal> out;
    for (const auto& r : pool)
        if (!b.is_empty(r) && !(r == s) && contained_in(b, r, s)) out.push_back(r);
    return out;
}

template <MonoidBackend B>
struct IndependenceFailure {
    typename B::Ideal subject;
    std::vector<typename B::Ideal> family;
    Certificate<B> certificate;
};

template <MonoidBackend B>
struct IndependenceSearch {
    std::vector<IndependenceFailure<B>> failures;
    // True when the empty result is a proof rather than a bounded observation.
    bool exhaustive = false;
};

// Covers S = ⋃F with S outside F among enumerated ideals, minimal families
// first within each S.
template <MonoidBackend B>
IndependenceSearch<B> independence_failure_search(const B& b, long bound, std::size_t max_family = 3) {
    IndependenceSearch<B> out;
    out.exhaustive = b.principal_ideals_only();
    if (out.exhaustive) return out;
    auto pool = b.enumerate_ideals(bound);
    for (const auto& s : pool) {
        if (b.is_empty(s)) continue;
        auto candidates = proper_subideals(b, s, pool);
        for (auto& f : minimal_covers(b, s, candidates, max_family)) {
            auto cert = cover_decide(b, s, f).certificate;
            out.failures.push_back({s, std::move(f), std::move(cert)});
        }
    }
    return out;
}

}  // namespace crideal
