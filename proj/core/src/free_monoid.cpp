#include "crideal/free_monoid.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace crideal {

bool FreeWord::positive() const {
    return std::all_of(letters.begin(), letters.end(), [](int l) { return l > 0; });
}

bool is_prefix(const FreeWord& p, const FreeWord& w) {
    return p.size() <= w.size() && std::equal(p.letters.begin(), p.letters.end(), w.letters.begin());
}

FreeMonoid::FreeMonoid(int rank) : rank_(rank) {
    if (rank < 1 || rank > 26) throw std::invalid_argument("free monoid rank must be between 1 and 26");
}

FreeWord FreeMonoid::multiply(const Element& a, const Element& b) const {
    FreeWord r = a;
    for (int l : b.letters) {
        if (!r.letters.empty() && r.letters.back() == -l)
            r.letters.pop_back();
        else
            r.letters.push_back(l);
    }
    return r;
}

FreeWord FreeMonoid::inverse(const Element& a) const {
    FreeWord r;
    for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it) r.letters.push_back(-*it);
    return r;
}

FreeWord FreeMonoid::letter(int i) const {
    if (i < 1 || i > rank_) throw std::invalid_argument("letter index out of range");
    return FreeWord{{i}};
}

bool FreeMonoid::member(const Element& g, const Ideal& i) const {
    return !i.empty && g.positive() && is_prefix(i.word, g);
}

PrefixIdeal FreeMonoid::intersect(const Ideal& a, const Ideal& b) const {
    if (a.empty || b.empty) return PrefixIdeal{};
    if (is_prefix(a.word, b.word)) return b;
    if (is_prefix(b.word, a.word)) return a;
    return PrefixIdeal{};
}

PrefixIdeal FreeMonoid::meet_with_translate_of_whole(const Element& g) const {
    FreeWord u;
    std::size_t k = 0;
    while (k < g.size() && g.letters[k] > 0) u.letters.push_back(g.letters[k++]);
    for (; k < g.size(); ++k)
        if (g.letters[k] > 0) return PrefixIdeal{};
    return PrefixIdeal{false, u};
}

PrefixIdeal FreeMonoid::meet_translate(const Ideal& a, const Element& g, const Ideal& b) const {
    if (a.empty || b.empty) return PrefixIdeal{};
    return intersect(a, meet_with_translate_of_whole(multiply(g, b.word)));
}

PrefixIdeal FreeMonoid::left_translate(const Element& p, const Ideal& i) const {
    if (!in_P(p)) throw std::invalid_argument("element " + format(p) + " is not in P");
    if (i.empty) return i;
    return PrefixIdeal{false, multiply(p, i.word)};
}

PrefixIdeal FreeMonoid::pre_translate(const Element& p, const Ideal& i) const {
    if (!in_P(p)) throw std::invalid_argument("element " + format(p) + " is not in P");
    if (i.empty) return i;
    if (is_prefix(p, i.word)) return PrefixIdeal{false, multiply(inverse(p), i.word)};
    if (is_prefix(i.word, p)) return whole();
    return PrefixIdeal{};
}

// wP is covered iff w itself is.
std::vector<FreeWord> FreeMonoid::cover_cells(const Ideal& s, std::span<const Ideal>) const {
    if (s.empty) return {};
    return {s.word};
}

std::vector<FreeWord> FreeMonoid::foundation_cells(const Ideal& s, std::span<const Ideal> family) const {
    if (s.empty) return {};
    std::size_t depth = s.word.size();
    for (const auto& r : family)
        if (!r.empty) depth = std::max(depth, r.word.size());
    std::vector<FreeWord> cells;
    for (const auto& x : enumerate_elements(static_cast<long>(depth - s.word.size())))
        cells.push_back(multiply(s.word, x));
    return cells;
}

GeneratorResult<FreeWord> FreeMonoid::principal_generator(const Ideal& i) const {
    if (i.empty) return {GeneratorStatus::Empty, std::nullopt};
    return {GeneratorStatus::Principal, i.word};
}

std::vector<PrefixIdeal> FreeMonoid::enumerate_ideals(long bound) const {
    std::vector<PrefixIdeal> out;
    for (const auto& w : enumerate_elements(bound)) out.push_back(PrefixIdeal{false, w});
    return out;
}

std::vector<FreeWord> FreeMonoid::enumerate_elements(long bound) const {
    std::vector<FreeWord> out{FreeWord{}};
    std::size_t layer_start = 0;
    for (long len = 1; len <= bound; ++len) {
        std::size_t layer_end = out.size();
        for (std::size_t k = layer_start; k < layer_end; ++k)
            for (int l = 1; l <= rank_; ++l) {
                FreeWord w = out[k];
                w.letters.push_back(l);
                out.push_back(std::move(w));
            }
        layer_start = layer_end;
    }
    return out;
}

std::string FreeMonoid::format(const Element& g) const {
    if (g.letters.empty()) return rank_ < 5 ? "e" : "1";
    std::string s;
    for (int l : g.letters) s += l > 0 ? static_cast<char>('a' + l - 1) : static_cast<char>('A' - l - 1);
    return s;
}

std::string FreeMonoid::describe(const Ideal& i) const {
    if (i.empty) return "empty";
    if (i.word.letters.empty()) return "P";
    return format(i.word) + "P";
}

FreeWord FreeMonoid::parse(const std::string& text) const {
    if (text.empty() || text == "1" || (text == "e" && rank_ < 5)) return FreeWord{};
    FreeWord w;
    for (std::size_t k = 0; k < text.size(); ++k) {
        char c = text[k];
        int l;
        if (c >= 'a' && c <= 'z')
            l = c - 'a' + 1;
        else if (c >= 'A' && c <= 'Z')
            l = -(c - 'A' + 1);
        else
            throw std::invalid_argument("invalid letter '" + std::string(1, c) + "' at position " + std::to_string(k));
        if (std::abs(l) > rank_)
            throw std::invalid_argument("letter '" + std::string(1, c) + "' exceeds the rank at position " +
                                        std::to_string(k));
        w = multiply(w, FreeWord{{l}});
    }
    return w;
}

}  // namespace crideal
