#pragma once

// Independent reference computations used by the unit and acceptance tests.
// None of these go through the ideal engine; they work on explicit point sets.

#include <crideal/crideal.hpp>

#include <bitset>
#include <memory>
#include <random>
#include <set>

namespace crideal::testing {

inline std::shared_ptr<const NumberRing> ring(const std::string& name) {
    return std::make_shared<NumberRing>(preset_ring(name));
}

inline NumericalSemigroup sigma() { return NumericalSemigroup({2, 3}); }

// ---- Σ = N \ {1} as explicit bitsets -------------------------------------
//
// Bit x stands for x in the set; bits past the window repeat bit kWindow-1.
// Every ideal met in the tests has threshold well below the window.

inline constexpr std::size_t kWindow = 256;
using SigmaSet = std::bitset<kWindow>;

inline SigmaSet sigma_whole() {
    SigmaSet s;
    s.set();
    s.reset(1);
    return s;
}

// p + X
inline SigmaSet sigma_shift(const SigmaSet& x, std::size_t p) { return x << p; }

// P ∩ (X - q)
inline SigmaSet sigma_pull(const SigmaSet& x, std::size_t q) {
    SigmaSet y = x >> q;
    if (x.test(kWindow - 1))
        for (std::size_t k = kWindow - q; k < kWindow; ++k) y.set(k);
    return y & sigma_whole();
}

// K(p1,...,p2k) = p2k^-1 p2k-1 ... p2^-1 p1 P ∩ P, unwound from the inside.
inline SigmaSet sigma_word_set(const std::vector<std::int64_t>& w) {
    SigmaSet s = sigma_whole();
    for (std::size_t k = 0; k + 1 < w.size(); k += 2)
        s = sigma_pull(sigma_shift(s, static_cast<std::size_t>(w[k])), static_cast<std::size_t>(w[k + 1]));
    return s;
}

inline SigmaSet to_sigma_set(const NumericalSemigroup& b, const TailSet& t) {
    SigmaSet s;
    for (std::size_t x = 0; x < kWindow; ++x)
        if (b.member(static_cast<std::int64_t>(x), t)) s.set(x);
    return s;
}

// p + Σ for p in Σ, or m + N for m >= 2.
inline bool sigma_classified(const SigmaSet& s) {
    for (std::size_t p = 0; p < 64; ++p) {
        if (p == 1) continue;
        if (s == sigma_shift(sigma_whole(), p)) return true;
    }
    for (std::size_t m = 2; m < 64; ++m) {
        SigmaSet t;
        for (std::size_t x = m; x < kWindow; ++x) t.set(x);
        if (s == t) return true;
    }
    return false;
}

// ---- Random sampling ------------------------------------------------------

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

inline Rat random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    int n = 0;
    while (n == 0) n = num(rng);
    Rat q(n, den(rng));
    q.canonicalize();
    return q;
}

template <MonoidBackend B>
Word<typename B::Element> random_word(std::mt19937_64& rng, const B& b, const std::vector<typename B::Element>& pool,
                                      std::size_t max_pairs) {
    std::uniform_int_distribution<std::size_t> len(1, max_pairs);
    std::vector<typename B::Element> entries;
    for (std::size_t k = 0, n = 2 * len(rng); k < n; ++k) entries.push_back(pick(rng, pool));
    return make_word(b, std::move(entries));
}

// ---- Pointwise evaluation -------------------------------------------------

// sup |a(p)| over an explicit point set, from membership alone.
template <MonoidBackend B>
Rat pointwise_sup(const B& b, const DiagonalElement<B>& a, const std::vector<typename B::Element>& points) {
    Rat best = 0;
    for (const auto& p : points) {
        Rat v = 0;
        for (const auto& [i, q] : a.terms())
            if (b.member(p, i)) v += q;
        if (abs(v) > best) best = abs(v);
    }
    return best;
}

// Order elements with order-basis coordinates in [-h, h], nonzero ones only.
inline std::vector<FieldElement> order_box(const NumberRing& r, long h) {
    std::vector<FieldElement> out;
    for (const auto& x : r.order_elements(h))
        if (!r.is_zero(x)) out.push_back(x);
    return out;
}

// ---- Ideal containment on a point set ----------------------------------------

template <MonoidBackend B>
bool pointwise_subset(const B& b, const typename B::Ideal& x, const typename B::Ideal& y,
                      const std::vector<typename B::Element>& points) {
    for (const auto& p : points)
        if (b.member(p, x) && !b.member(p, y)) return false;
    return true;
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace crideal::testing
