#include "crideal/numerical.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace crideal {

TailSet TailSet::tail(std::int64_t from) {
    TailSet t;
    t.empty_ = false;
    t.min_ = from;
    t.threshold_ = from;
    return t;
}

bool TailSet::contains(std::int64_t x) const {
    if (empty_ || x < min_) return false;
    if (x >= threshold_) return true;
    return mask_[static_cast<std::size_t>(x - min_)];
}

TailSet TailSet::shifted(std::int64_t g) const {
    TailSet t = *this;
    if (!empty_) {
        t.min_ += g;
        t.threshold_ += g;
    }
    return t;
}

TailSet intersect(const TailSet& a, const TailSet& b) {
    if (a.empty_ || b.empty_) return TailSet();
    std::int64_t lo = std::max(a.min_, b.min_);
    std::int64_t hi = std::max({a.threshold_, b.threshold_, lo});
    return TailSet::build(lo, hi, [&](std::int64_t x) { return a.contains(x) && b.contains(x); });
}

bool TailSet::operator<(const TailSet& o) const {
    if (empty_ || o.empty_) return empty_ && !o.empty_;
    if (min_ != o.min_) return min_ < o.min_;
    if (threshold_ != o.threshold_) return threshold_ < o.threshold_;
    return mask_ < o.mask_;
}

NumericalSemigroup::NumericalSemigroup(std::vector<std::int64_t> generators) : gens_(std::move(generators)) {
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    if (gens_.empty()) throw std::invalid_argument("numerical semigroup needs at least one generator");
    std::int64_t g = 0;
    for (auto x : gens_) {
        if (x <= 0) throw std::invalid_argument("numerical semigroup generators must be positive");
        g = std::gcd(g, x);
    }
    if (g != 1) throw std::invalid_argument("numerical semigroup generators must have gcd 1");

    const std::int64_t run = gens_.front();
    std::vector<bool> reach{true};
    std::int64_t streak = 1;
    while (streak < run) {
        std::int64_t x = static_cast<std::int64_t>(reach.size());
        bool r = false;
        for (auto s : gens_)
            if (s <= x && reach[static_cast<std::size_t>(x - s)]) r = true;
        reach.push_back(r);
        streak = r ? streak + 1 : 0;
    }
    frobenius_ = -1;
    for (std::int64_t x = 0; x < static_cast<std::int64_t>(reach.size()); ++x)
        if (!reach[static_cast<std::size_t>(x)]) frobenius_ = x;
    whole_ = TailSet::build(0, frobenius_ + 1, [&](std::int64_t x) { return reach[static_cast<std::size_t>(x)]; });
}

std::string NumericalSemigroup::name() const {
    std::string s = "numerical<";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? "," : "") + std::to_string(gens_[i]);
    return s + ">";
}

std::string NumericalSemigroup::label() const {
    return gens_ == std::vector<std::int64_t>{2, 3} ? "Sigma" : "P";
}

TailSet NumericalSemigroup::left_translate(Element p, const Ideal& i) const {
    if (!in_P(p)) throw std::invalid_argument("element " + std::to_string(p) + " is not in P");
    return i.shifted(p);
}

TailSet NumericalSemigroup::pre_translate(Element p, const Ideal& i) const {
    if (!in_P(p)) throw std::invalid_argument("element " + std::to_string(p) + " is not in P");
    return crideal::intersect(whole_, i.shifted(-p));
}

std::vector<std::int64_t> NumericalSemigroup::cover_cells(const Ideal& s, std::span<const Ideal> family) const {
    std::vector<Element> cells;
    if (s.empty()) return cells;
    std::int64_t hi = s.threshold();
    for (const auto& r : family)
        if (!r.empty()) hi = std::max(hi, r.threshold());
    for (std::int64_t x = s.min(); x <= hi; ++x)
        if (s.contains(x)) cells.push_back(x);
    return cells;
}

std::vector<std::int64_t> NumericalSemigroup::foundation_cells(const Ideal& s, std::span<const Ideal>) const {
    if (s.empty()) return {};
    return {s.min()};
}

GeneratorResult<std::int64_t> NumericalSemigroup::principal_generator(const Ideal& i) const {
    if (i.empty()) return {GeneratorStatus::Empty, std::nullopt};
    if (i == whole_.shifted(i.min())) return {GeneratorStatus::Principal, i.min()};
    return {GeneratorStatus::NotPrincipal, std::nullopt};
}

std::vector<TailSet> NumericalSemigroup::enumerate_ideals(long bound) const {
    const std::int64_t cap = bound + frobenius_ + 2 * gens_.back() + 2;
    std::set<TailSet> seen{whole_};
    std::vector<TailSet> all{whole_};
    std::deque<TailSet> queue{whole_};
    auto offer = [&](const TailSet& t) {
        if (t.empty() || t.min() > cap) return;
        if (seen.insert(t).second) {
            all.push_back(t);
            queue.push_back(t);
        }
    };
    while (!queue.empty()) {
        TailSet cur = queue.front();
        queue.pop_front();
        for (auto g : gens_) {
            offer(cur.shifted(g));
            offer(pre_translate(g, cur));
        }
        const std::size_t n = all.size();
        for (std::size_t k = 0; k < n; ++k) offer(crideal::intersect(cur, all[k]));
    }
    std::vector<TailSet> out;
    for (const auto& t : all)
        if (t.min() <= bound) out.push_back(t);
    std::sort(out.begin(), out.end(), [&](const TailSet& a, const TailSet& b) {
        if (a.min() != b.min()) return a.min() < b.min();
        bool pa = a == whole_.shifted(a.min());
        bool pb = b == whole_.shifted(b.min());
        if (pa != pb) return pa;
        return a < b;
    });
    return out;
}

std::vector<std::int64_t> NumericalSemigroup::enumerate_elements(long bound) const {
    std::vector<Element> out;
    for (std::int64_t x = 0; x <= bound; ++x)
        if (in_P(x)) out.push_back(x);
    return out;
}

std::string NumericalSemigroup::describe(const Ideal& i) const {
    if (i.empty()) return "empty";
    if (i == whole_.shifted(i.min())) return i.min() == 0 ? label() : std::to_string(i.min()) + "+" + label();
    if (i.threshold() == i.min()) return std::to_string(i.min()) + "+N";
    std::string s = "{";
    for (std::int64_t x = i.min(); x < i.threshold(); ++x)
        if (i.contains(x)) s += std::to_string(x) + ",";
    return s + std::to_string(i.threshold()) + "..}";
}

}  // namespace crideal
