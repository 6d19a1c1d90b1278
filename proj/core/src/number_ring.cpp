#include "crideal/number_ring.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace crideal {

namespace {

RatVec to_rat(const IntVec& v) {
    RatVec r;
    r.reserve(v.size());
    for (const auto& x : v) r.emplace_back(x);
    return r;
}

Int isqrt_ceil(const Rat& q) {
    if (q <= 0) return 0;
    Int c = floor_div(q) + 1;
    Int s;
    mpz_sqrt(s.get_mpz_t(), c.get_mpz_t());
    return s + 1;
}

}  // namespace

NumberRing::NumberRing(RingSpec spec)
    : name_(std::move(spec.name)),
      d_(spec.degree),
      table_(std::move(spec.mult_table)),
      representatives_(std::move(spec.representatives)),
      noninvertible_(std::move(spec.noninvertible)) {
    if (d_ == 0) throw std::invalid_argument("number ring: degree must be positive");
    if (table_.size() != d_) throw std::invalid_argument("number ring: mult_table has wrong shape");
    for (const auto& row : table_) {
        if (row.size() != d_) throw std::invalid_argument("number ring: mult_table has wrong shape");
        for (const auto& v : row)
            if (v.size() != d_) throw std::invalid_argument("number ring: mult_table has wrong shape");
    }
    if (spec.one) {
        if (spec.one->size() != d_) throw std::invalid_argument("number ring: one has wrong dimension");
        one_ = FieldElement{to_rat(*spec.one)};
    } else {
        one_ = FieldElement{RatVec(d_, Rat(0))};
        one_.c[0] = 1;
    }

    for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t j = 0; j < d_; ++j)
            if (table_[i][j] != table_[j][i]) throw std::invalid_argument("number ring: multiplication is not commutative");

    std::vector<FieldElement> basis;
    for (std::size_t i = 0; i < d_; ++i) {
        FieldElement e{RatVec(d_, Rat(0))};
        e.c[i] = 1;
        basis.push_back(e);
    }
    for (const auto& e : basis)
        if (mul(one_, e) != e) throw std::invalid_argument("number ring: one is not a multiplicative identity");
    for (const auto& a : basis)
        for (const auto& b : basis)
            for (const auto& c : basis)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw std::invalid_argument("number ring: multiplication is not associative");

    maximal_ = Lattice::standard(d_);
    std::vector<RatVec> gens;
    for (const auto& col : spec.order_basis) {
        if (col.size() != d_) throw std::invalid_argument("number ring: order_basis has wrong shape");
        gens.push_back(to_rat(col));
    }
    if (gens.size() != d_) throw std::invalid_argument("number ring: order_basis must have degree many columns");
    order_ = Lattice::from_generators(gens, d_);
    if (!order_.subset_of(maximal_)) throw std::invalid_argument("number ring: order is not integral");
    if (!order_.contains(one_.c)) throw std::invalid_argument("number ring: order does not contain 1");
    for (const auto& a : order_.columns())
        for (const auto& b : order_.columns())
            if (!order_.contains(mul(FieldElement{a}, FieldElement{b}).c))
                throw std::invalid_argument("number ring: order is not closed under multiplication");
    for (const auto& r : representatives_)
        if (r.size() != d_) throw std::invalid_argument("number ring: representative has wrong dimension");
}

FieldElement NumberRing::from_integer(const Int& n) const { return scale(one_, Rat(n)); }

FieldElement NumberRing::from_coordinates(RatVec c) const {
    if (c.size() != d_) throw std::invalid_argument("field element has wrong dimension");
    for (auto& x : c) x.canonicalize();
    return FieldElement{std::move(c)};
}

FieldElement NumberRing::add(const FieldElement& x, const FieldElement& y) const {
    FieldElement r = x;
    for (std::size_t i = 0; i < d_; ++i) r.c[i] += y.c[i];
    return r;
}

FieldElement NumberRing::sub(const FieldElement& x, const FieldElement& y) const {
    FieldElement r = x;
    for (std::size_t i = 0; i < d_; ++i) r.c[i] -= y.c[i];
    return r;
}

FieldElement NumberRing::neg(const FieldElement& x) const {
    FieldElement r = x;
    for (auto& v : r.c) v = -v;
    return r;
}

FieldElement NumberRing::mul(const FieldElement& x, const FieldElement& y) const {
    FieldElement r{RatVec(d_, Rat(0))};
    for (std::size_t i = 0; i < d_; ++i) {
        if (x.c[i] == 0) continue;
        for (std::size_t j = 0; j < d_; ++j) {
            if (y.c[j] == 0) continue;
            Rat p = x.c[i] * y.c[j];
            for (std::size_t k = 0; k < d_; ++k)
                if (table_[i][j][k] != 0) r.c[k] += p * Rat(table_[i][j][k]);
        }
    }
    return r;
}

FieldElement NumberRing::scale(const FieldElement& x, const Rat& q) const {
    FieldElement r = x;
    for (auto& v : r.c) v *= q;
    return r;
}

bool NumberRing::is_zero(const FieldElement& x) const {
    return std::all_of(x.c.begin(), x.c.end(), [](const Rat& v) { return v == 0; });
}

RatMatrix NumberRing::mult_matrix(const FieldElement& x) const {
    RatMatrix m(d_, d_);
    for (std::size_t j = 0; j < d_; ++j) {
        FieldElement e{RatVec(d_, Rat(0))};
        e.c[j] = 1;
        FieldElement col = mul(x, e);
        for (std::size_t i = 0; i < d_; ++i) m(i, j) = col.c[i];
    }
    return m;
}

Rat NumberRing::norm(const FieldElement& x) const { return determinant(mult_matrix(x)); }

std::optional<FieldElement> NumberRing::inverse(const FieldElement& x) const {
    if (is_zero(x)) return std::nullopt;
    auto sol = solve(mult_matrix(x), one_.c);
    if (!sol) return std::nullopt;
    return FieldElement{*sol};
}

FieldElement NumberRing::divide(const FieldElement& x, const FieldElement& y) const {
    auto inv = inverse(y);
    if (!inv) throw std::domain_error("division by zero field element");
    return mul(x, *inv);
}

bool NumberRing::is_order_unit(const FieldElement& x) const {
    if (is_zero(x) || !in_order(x)) return false;
    Rat n = norm(x);
    return n == 1 || n == -1;
}

Lattice NumberRing::element_times_lattice(const FieldElement& x, const Lattice& l) const {
    if (is_zero(x)) throw std::invalid_argument("element_times_lattice: zero multiplier");
    std::vector<RatVec> gens;
    for (const auto& c : l.columns()) gens.push_back(mul(x, FieldElement{c}).c);
    return Lattice::from_generators(gens, d_);
}

Lattice NumberRing::ideal_quotient(const Lattice& l1, const Lattice& l2) const {
    std::optional<Lattice> acc;
    for (const auto& c : l2.columns()) {
        auto inv = inverse(FieldElement{c});
        Lattice part = element_times_lattice(*inv, l1);
        acc = acc ? lattice_intersect(*acc, part) : part;
    }
    return *acc;
}

bool NumberRing::is_order_module(const Lattice& l) const {
    for (const auto& b : order_.columns())
        for (const auto& v : l.columns())
            if (!l.contains(mul(FieldElement{b}, FieldElement{v}).c)) return false;
    return true;
}

bool NumberRing::divisorial_check(const Lattice& l) const {
    return ideal_quotient(order_, ideal_quotient(order_, l)) == l;
}

Lattice NumberRing::conductor() const { return ideal_quotient(order_, maximal_); }

Int NumberRing::smallest_m() const {
    auto inv = crideal::inverse(to_rational(order_.basis()));
    Int m = 1;
    for (std::size_t i = 0; i < d_; ++i)
        for (std::size_t j = 0; j < d_; ++j) {
            Rat v = (*inv)(i, j) * Rat(order_.denominator());
            mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), v.get_den_mpz_t());
        }
    return m;
}

Int NumberRing::n_of(const FieldElement& h) const {
    if (is_zero(h)) throw std::invalid_argument("n_of: zero element");
    if (!in_maximal(h)) throw std::invalid_argument("n_of: element is not integral");
    Lattice l = element_times_lattice(h, maximal_);
    Rat t = line_generator(l, one_.c);
    return t.get_num();
}

FieldElement NumberRing::h_prime(const FieldElement& h) const {
    FieldElement hp = divide(from_integer(n_of(h)), h);
    if (!in_maximal(hp)) throw std::logic_error("h_prime: integrality failure, structure constants are inconsistent");
    return hp;
}

DependenceReport NumberRing::dependence_report(bool use_preset_representatives) const {
    if (is_maximal_order()) throw std::domain_error("order is maximal: independence holds trivially here");
    DependenceReport rep;
    rep.m = smallest_m();
    rep.conductor = conductor();
    Lattice m_ok = maximal_.scaled(Rat(rep.m));

    std::vector<RatVec> hs;
    if (use_preset_representatives && !representatives_.empty()) {
        hs = representatives_;
    } else {
        hs = coset_reps(m_ok, maximal_);
        hs.erase(hs.begin());
    }

    std::vector<Lattice> family;
    for (std::size_t k = 0; k < hs.size(); ++k) {
        DependenceRow row;
        row.h = from_coordinates(hs[k]);
        row.n = n_of(row.h);
        row.h_prime = h_prime(row.h);
        row.in_conductor = rep.conductor.contains(row.h_prime.c);
        FieldElement g = divide(row.in_conductor ? from_integer(rep.m) : one_, row.h_prime);
        row.ideal = lattice_intersect(element_times_lattice(g, order_), maximal_);
        row.contains_coset = row.ideal.contains(row.h.c) && m_ok.subset_of(row.ideal);
        row.proper = row.ideal != maximal_;
        for (std::size_t i = 0; i < k; ++i)
            if (scale(rep.rows[i].h, Rat(2)) == row.h) {
                row.doubled_from = i;
                break;
            }
        family.push_back(row.ideal);
        rep.rows.push_back(std::move(row));
    }

    Lattice common = maximal_;
    for (const auto& l : family) common = lattice_intersect(common, l);
    rep.covers = true;
    for (const auto& c : coset_reps(common, maximal_)) {
        bool hit = std::any_of(family.begin(), family.end(), [&](const Lattice& l) { return l.contains(c); });
        if (!hit) {
            rep.covers = false;
            rep.uncovered = FieldElement{c};
            break;
        }
    }
    return rep;
}

bool NumberRing::imaginary_quadratic() const {
    if (d_ != 2) return false;
    FieldElement e0{RatVec{1, 0}}, e1{RatVec{0, 1}};
    Rat a = norm(e0), c = norm(e1);
    Rat b = norm(add(e0, e1)) - a - c;
    return b * b - 4 * a * c < 0;
}

std::vector<FieldElement> NumberRing::elements_of_norm(const Lattice& l, const Int& target) const {
    std::vector<FieldElement> out;
    if (d_ == 1) {
        FieldElement g{l.column(0)};
        Rat n = norm(g);
        if (n == Rat(target) || n == -Rat(target)) {
            out.push_back(g);
            out.push_back(neg(g));
        }
        return out;
    }
    FieldElement b1{l.column(0)}, b2{l.column(1)};
    Rat a = norm(b1), c = norm(b2);
    Rat b = norm(add(b1, b2)) - a - c;
    Rat disc = 4 * a * c - b * b;
    Int ub = isqrt_ceil(4 * c * Rat(target) / disc);
    Int vb = isqrt_ceil(4 * a * Rat(target) / disc);
    for (Int u = -ub; u <= ub; ++u)
        for (Int v = -vb; v <= vb; ++v) {
            Rat q = a * Rat(u * u) + b * Rat(u * v) + c * Rat(v * v);
            if (q == Rat(target)) out.push_back(add(scale(b1, Rat(u)), scale(b2, Rat(v))));
        }
    return out;
}

PrincipalSearch NumberRing::principal_generator(const Lattice& l, long search_bound) const {
    PrincipalSearch res;
    Rat target = l.covolume() / order_.covolume();
    if (d_ == 1 || imaginary_quadratic()) {
        // Scale to an integral norm target; the norm form is definite here.
        Int s = l.denominator();
        Lattice scaled = l.scaled(Rat(s));
        Rat t = scaled.covolume() / order_.covolume();
        res.status = Principality::NotPrincipal;
        if (t.get_den() != 1) return res;
        auto found = elements_of_norm(scaled, t.get_num());
        if (!found.empty()) {
            res.status = Principality::Principal;
            res.generator = scale(found.front(), Rat(1, s));
        }
        return res;
    }
    std::vector<Int> digit(d_, Int(-search_bound));
    while (true) {
        FieldElement x = zero();
        for (std::size_t j = 0; j < d_; ++j) x = add(x, scale(FieldElement{l.column(j)}, Rat(digit[j])));
        if (!is_zero(x)) {
            Rat n = norm(x);
            if (n == target || n == -target) {
                res.status = Principality::Principal;
                res.generator = x;
                return res;
            }
        }
        std::size_t k = d_;
        bool done = true;
        while (k > 0) {
            --k;
            if (++digit[k] <= search_bound) {
                done = false;
                break;
            }
            digit[k] = -search_bound;
        }
        if (done) break;
    }
    res.status = Principality::Inconclusive;
    return res;
}

std::optional<std::vector<FieldElement>> NumberRing::torsion_units() const {
    if (d_ != 1 && !imaginary_quadratic()) return std::nullopt;
    auto units = elements_of_norm(order_, Int(1));
    std::sort(units.begin(), units.end());
    return units;
}

std::vector<Lattice> NumberRing::order_ideals_up_to(long bound) const {
    std::vector<std::pair<long, Lattice>> found;
    std::vector<long> diag(d_);
    IntMatrix m(d_, d_);
    const auto basis = order_.columns();

    auto emit = [&]() {
        std::vector<RatVec> gens;
        for (std::size_t j = 0; j < d_; ++j) {
            RatVec v(d_, Rat(0));
            for (std::size_t k = 0; k < d_; ++k)
                if (m(k, j) != 0)
                    for (std::size_t i = 0; i < d_; ++i) v[i] += Rat(m(k, j)) * basis[k][i];
            gens.push_back(std::move(v));
        }
        Lattice l = Lattice::from_generators(gens, d_);
        if (!is_order_module(l)) return;
        long idx = 1;
        for (auto x : diag) idx *= x;
        found.emplace_back(idx, std::move(l));
    };

    // Fill entries below the diagonal row by row, each reduced mod its row pivot.
    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t i, std::size_t j) {
        if (i == d_) {
            emit();
            return;
        }
        if (j == i) {
            fill(i + 1, 0);
            return;
        }
        for (long v = 0; v < diag[i]; ++v) {
            m(i, j) = v;
            fill(i, j + 1);
        }
        m(i, j) = 0;
    };

    std::function<void(std::size_t, long)> choose_diag = [&](std::size_t i, long budget) {
        if (i == d_) {
            for (std::size_t k = 0; k < d_; ++k) m(k, k) = diag[k];
            fill(0, 0);
            return;
        }
        for (long v = 1; v <= budget; ++v) {
            diag[i] = v;
            choose_diag(i + 1, budget / v);
        }
    };
    choose_diag(0, bound);

    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    std::vector<Lattice> out;
    for (auto& f : found) out.push_back(std::move(f.second));
    return out;
}

FieldElement NumberRing::noninvertible() const {
    if (noninvertible_) return from_coordinates(*noninvertible_);
    return from_integer(2);
}

std::vector<FieldElement> NumberRing::order_elements(long bound) const {
    std::vector<std::pair<long, std::vector<long>>> coords;
    std::vector<long> digit(d_, -bound);
    while (true) {
        long mx = 0;
        for (auto v : digit) mx = std::max(mx, std::labs(v));
        coords.emplace_back(mx, digit);
        std::size_t k = d_;
        bool done = true;
        while (k > 0) {
            --k;
            if (++digit[k] <= bound) {
                done = false;
                break;
            }
            digit[k] = -bound;
        }
        if (done) break;
    }
    std::stable_sort(coords.begin(), coords.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    const auto basis = order_.columns();
    std::vector<FieldElement> out;
    for (const auto& [mx, dg] : coords) {
        FieldElement x = zero();
        for (std::size_t j = 0; j < d_; ++j)
            if (dg[j] != 0) x = add(x, scale(FieldElement{basis[j]}, Rat(dg[j])));
        out.push_back(std::move(x));
    }
    return out;
}

RingSpec preset_ring(const std::string& name) {
    RingSpec s;
    s.name = name;
    auto iv = [](std::initializer_list<long> xs) {
        IntVec v;
        for (long x : xs) v.emplace_back(x);
        return v;
    };
    auto rv = [](std::initializer_list<long> xs) {
        RatVec v;
        for (long x : xs) v.emplace_back(x);
        return v;
    };
    if (name == "Z") {
        s.degree = 1;
        s.mult_table = {{iv({1})}};
        s.order_basis = {iv({1})};
        s.noninvertible = rv({2});
    } else if (name == "Z[sqrt-3]") {
        // basis 1, w with w^2 = w - 1 (w a primitive sixth root of unity)
        s.degree = 2;
        s.mult_table = {{iv({1, 0}), iv({0, 1})}, {iv({0, 1}), iv({-1, 1})}};
        s.order_basis = {iv({1, 0}), iv({-1, 2})};
        s.representatives = {rv({1, 0}), rv({0, 1}), rv({-1, 1})};
        s.noninvertible = rv({0, 2});
    } else if (name == "Z[2i]") {
        s.degree = 2;
        s.mult_table = {{iv({1, 0}), iv({0, 1})}, {iv({0, 1}), iv({-1, 0})}};
        s.order_basis = {iv({1, 0}), iv({0, 2})};
        s.representatives = {rv({1, 0}), rv({0, 1}), rv({1, 1})};
        s.noninvertible = rv({2, 0});
    } else if (name == "Z[cbrt19]") {
        // basis 1, t, w with t^3 = 19 and w = (1 + t + t^2)/3
        s.degree = 3;
        s.mult_table = {
            {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})},
            {iv({0, 1, 0}), iv({-1, -1, 3}), iv({6, 0, 1})},
            {iv({0, 0, 1}), iv({6, 0, 1}), iv({4, 2, 1})},
        };
        s.order_basis = {iv({1, 0, 0}), iv({0, 1, 0}), iv({-1, -1, 3})};
        s.noninvertible = rv({2, 0, 0});
    } else {
        throw std::invalid_argument("unknown order preset: " + name);
    }
    return s;
}

std::vector<std::string> preset_ring_names() { return {"Z", "Z[sqrt-3]", "Z[2i]", "Z[cbrt19]"}; }

}  // namespace crideal
