#pragma once

#include "crideal/backend.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace crideal {

// Word p1 p2 ... p2k with every entry in P. Stored as group elements since all
// quotient arithmetic happens in G.
template <class E>
struct Word {
    std::vector<E> entries;

    std::size_t size() const { return entries.size(); }
    std::size_t pairs() const { return entries.size() / 2; }
    bool empty() const { return entries.empty(); }
    bool operator==(const Word& o) const { return entries == o.entries; }
};

template <MonoidBackend B>
Word<typename B::Element> make_word(const B& backend, std::vector<typename B::Element> entries) {
    if (entries.size() % 2 != 0) throw std::invalid_argument("word length must be even");
    for (std::size_t k = 0; k < entries.size(); ++k)
        if (!backend.in_P(entries[k]))
            throw std::invalid_argument("word entry " + std::to_string(k + 1) + " (" + backend.format(entries[k]) +
                                        ") is not in P");
    return Word<typename B::Element>{std::move(entries)};
}

// p1^-1 p2 p3^-1 p4 ... p2k-1^-1 p2k
template <MonoidBackend B>
typename B::Element dot(const B& backend, const Word<typename B::Element>& w) {
    auto g = backend.identity();
    for (std::size_t k = 0; k + 1 < w.size(); k += 2)
        g = backend.multiply(backend.multiply(g, backend.inverse(w.entries[k])), w.entries[k + 1]);
    return g;
}

template <class E>
Word<E> reverse(const Word<E>& w) {
    return Word<E>{std::vector<E>(w.entries.rbegin(), w.entries.rend())};
}

template <class E>
Word<E> concat(const Word<E>& a, const Word<E>& b) {
    Word<E> r = a;
    r.entries.insert(r.entries.end(), b.entries.begin(), b.entries.end());
    return r;
}

template <MonoidBackend B>
Word<typename B::Element> translate_word(const B& backend, const typename B::Element& p,
                                         const Word<typename B::Element>& w) {
    if (!backend.in_P(p)) throw std::invalid_argument("translating element " + backend.format(p) + " is not in P");
    Word<typename B::Element> r;
    r.entries.reserve(w.size());
    for (const auto& x : w.entries) r.entries.push_back(backend.multiply(p, x));
    return r;
}

// e, p2k^-1 p2k-1, p2k^-1 p2k-1 p2k-2^-1 p2k-3, ..., dot(w)^-1.
// Insertion order is kept and duplicates dropped.
template <MonoidBackend B>
std::vector<typename B::Element> quotient_set(const B& backend, const Word<typename B::Element>& w) {
    std::vector<typename B::Element> q{backend.identity()};
    auto g = backend.identity();
    for (std::size_t k = w.size(); k >= 2; k -= 2) {
        g = backend.multiply(backend.multiply(g, backend.inverse(w.entries[k - 1])), w.entries[k - 2]);
        if (std::find(q.begin(), q.end(), g) == q.end()) q.push_back(g);
    }
    return q;
}

// Order-insensitive comparison of two element lists without duplicates.
template <class E>
bool same_elements(const std::vector<E>& a, const std::vector<E>& b) {
    if (a.size() != b.size()) return false;
    return std::all_of(a.begin(), a.end(), [&](const E& x) { return std::find(b.begin(), b.end(), x) != b.end(); });
}

}  // namespace crideal
