#include "crideal/grid.hpp"

#include <algorithm>
#include <functional>

namespace crideal {

GridMonoid::GridMonoid(std::size_t rank) : rank_(rank) {
    if (rank == 0) throw std::invalid_argument("grid rank must be positive");
}

void GridMonoid::check_dim(const Element& g) const {
    if (g.size() != rank_) throw std::invalid_argument("grid element has wrong dimension");
}

GridVector GridMonoid::multiply(const Element& a, const Element& b) const {
    check_dim(a);
    check_dim(b);
    Element r(rank_);
    for (std::size_t i = 0; i < rank_; ++i) r[i] = a[i] + b[i];
    return r;
}

GridVector GridMonoid::inverse(const Element& a) const {
    check_dim(a);
    Element r(rank_);
    for (std::size_t i = 0; i < rank_; ++i) r[i] = -a[i];
    return r;
}

bool GridMonoid::in_P(const Element& g) const {
    check_dim(g);
    return std::all_of(g.begin(), g.end(), [](std::int64_t x) { return x >= 0; });
}

bool GridMonoid::member(const Element& g, const Ideal& i) const {
    if (i.empty) return false;
    for (std::size_t k = 0; k < rank_; ++k)
        if (g[k] < i.corner[k] || g[k] < 0) return false;
    return true;
}

GridIdeal GridMonoid::intersect(const Ideal& a, const Ideal& b) const {
    if (a.empty || b.empty) return GridIdeal{};
    Element c(rank_);
    for (std::size_t k = 0; k < rank_; ++k) c[k] = std::max(a.corner[k], b.corner[k]);
    return GridIdeal{false, c};
}

GridIdeal GridMonoid::meet_translate(const Ideal& a, const Element& g, const Ideal& b) const {
    if (b.empty) return GridIdeal{};
    return intersect(a, GridIdeal{false, multiply(g, b.corner)});
}

GridIdeal GridMonoid::left_translate(const Element& p, const Ideal& i) const {
    if (!in_P(p)) throw std::invalid_argument("element " + format(p) + " is not in P");
    if (i.empty) return i;
    return GridIdeal{false, multiply(p, i.corner)};
}

GridIdeal GridMonoid::pre_translate(const Element& p, const Ideal& i) const {
    if (!in_P(p)) throw std::invalid_argument("element " + format(p) + " is not in P");
    return meet_translate(whole(), inverse(p), i);
}

// A cone is covered iff its corner is.
std::vector<GridVector> GridMonoid::cover_cells(const Ideal& s, std::span<const Ideal>) const {
    if (s.empty) return {};
    return {s.corner};
}

std::vector<GridVector> GridMonoid::foundation_cells(const Ideal& s, std::span<const Ideal>) const {
    if (s.empty) return {};
    return {s.corner};
}

GeneratorResult<GridVector> GridMonoid::principal_generator(const Ideal& i) const {
    if (i.empty) return {GeneratorStatus::Empty, std::nullopt};
    return {GeneratorStatus::Principal, i.corner};
}

std::vector<GridIdeal> GridMonoid::enumerate_ideals(long bound) const {
    std::vector<GridIdeal> out;
    for (const auto& v : enumerate_elements(bound)) out.push_back(GridIdeal{false, v});
    return out;
}

std::vector<GridVector> GridMonoid::enumerate_elements(long bound) const {
    std::vector<Element> out;
    Element cur(rank_, 0);
    for (long total = 0; total <= bound; ++total) {
        std::vector<Element> layer;
        std::function<void(std::size_t, long)> rec = [&](std::size_t k, long left) {
            if (k + 1 == rank_) {
                cur[k] = left;
                layer.push_back(cur);
                return;
            }
            for (long v = left; v >= 0; --v) {
                cur[k] = v;
                rec(k + 1, left - v);
            }
        };
        rec(0, total);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::string GridMonoid::format(const Element& g) const {
    std::string s = "(";
    for (std::size_t k = 0; k < g.size(); ++k) s += (k ? "," : "") + std::to_string(g[k]);
    return s + ")";
}

std::string GridMonoid::describe(const Ideal& i) const {
    if (i.empty) return "empty";
    if (i.corner == identity()) return "P";
    return format(i.corner) + "+P";
}

}  // namespace crideal
