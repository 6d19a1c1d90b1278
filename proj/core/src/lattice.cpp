#include "crideal/lattice.hpp"

#include <stdexcept>

namespace crideal {

namespace {

IntMatrix scale_to_integer(const std::vector<RatVec>& gens, std::size_t dim, Int& den) {
    den = 1;
    for (const auto& g : gens) {
        if (g.size() != dim) throw std::invalid_argument("lattice generator has wrong dimension");
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), lcm_of_denominators(g).get_mpz_t());
    }
    IntMatrix m(dim, gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) {
            Rat x = gens[j][i] * Rat(den);
            m(i, j) = x.get_num();
        }
    return m;
}

}  // namespace

Lattice Lattice::from_generators(const std::vector<RatVec>& gens, std::size_t dim) {
    Int den;
    IntMatrix m = scale_to_integer(gens, dim, den);
    HermiteResult hr = hermite_form(m);
    if (hr.rank != dim) throw std::invalid_argument("lattice generators are not of full rank");
    Lattice l;
    l.basis_ = IntMatrix(dim, dim);
    Int content = den;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            l.basis_(i, j) = hr.h(i, j);
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), hr.h(i, j).get_mpz_t());
        }
    l.den_ = den / content;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j <= i; ++j) l.basis_(i, j) /= content;
    return l;
}

Lattice Lattice::standard(std::size_t dim) {
    Lattice l;
    l.basis_ = IntMatrix::identity(dim);
    return l;
}

RatVec Lattice::column(std::size_t j) const {
    RatVec c(dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = Rat(basis_(i, j), den_);
    for (auto& x : c) x.canonicalize();
    return c;
}

std::vector<RatVec> Lattice::columns() const {
    std::vector<RatVec> out;
    for (std::size_t j = 0; j < dim(); ++j) out.push_back(column(j));
    return out;
}

std::optional<IntVec> Lattice::coordinates(const RatVec& v) const {
    RatVec scaled(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) scaled[i] = v[i] * Rat(den_);
    RatVec y = solve_lower(basis_, scaled);
    IntVec out;
    out.reserve(y.size());
    for (const auto& c : y) {
        if (c.get_den() != 1) return std::nullopt;
        out.push_back(c.get_num());
    }
    return out;
}

bool Lattice::contains(const RatVec& v) const { return coordinates(v).has_value(); }

bool Lattice::subset_of(const Lattice& other) const {
    for (std::size_t j = 0; j < dim(); ++j)
        if (!other.contains(column(j))) return false;
    return true;
}

Rat Lattice::covolume() const {
    Int det = 1;
    for (std::size_t i = 0; i < dim(); ++i) det *= basis_(i, i);
    Int d = 1;
    for (std::size_t i = 0; i < dim(); ++i) d *= den_;
    Rat r(det, d);
    r.canonicalize();
    return r;
}

RatVec Lattice::reduce(const RatVec& v) const {
    RatVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] * Rat(den_);
    for (std::size_t i = 0; i < dim(); ++i) {
        Int q = floor_div(w[i] / Rat(basis_(i, i)));
        if (q == 0) continue;
        for (std::size_t r = i; r < dim(); ++r) w[r] -= Rat(q * basis_(r, i));
    }
    for (auto& x : w) {
        x /= Rat(den_);
        x.canonicalize();
    }
    return w;
}

Lattice Lattice::scaled(const Rat& q) const {
    if (q == 0) throw std::invalid_argument("cannot scale a lattice by zero");
    std::vector<RatVec> cols = columns();
    for (auto& c : cols)
        for (auto& x : c) x *= q;
    return from_generators(cols, dim());
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
    std::vector<RatVec> gens = a.columns();
    for (auto& c : b.columns()) gens.push_back(std::move(c));
    return Lattice::from_generators(gens, a.dim());
}

Lattice lattice_intersect(const Lattice& a, const Lattice& b) {
    if (a == b) return a;
    const std::size_t n = a.dim();
    Int d;
    mpz_lcm(d.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
    Int fa = d / a.denominator();
    Int fb = d / b.denominator();
    IntMatrix stacked(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            stacked(i, j) = fa * a.basis()(i, j);
            stacked(i, n + j) = -fb * b.basis()(i, j);
        }
    HermiteResult hr = hermite_form(stacked);
    std::vector<RatVec> gens;
    for (std::size_t k = hr.rank; k < 2 * n; ++k) {
        RatVec v(n, Rat(0));
        for (std::size_t i = 0; i < n; ++i) {
            Int s = 0;
            for (std::size_t j = 0; j < n; ++j) s += a.basis()(i, j) * hr.transform(j, k);
            v[i] = Rat(s, a.denominator());
            v[i].canonicalize();
        }
        gens.push_back(std::move(v));
    }
    return Lattice::from_generators(gens, n);
}

Int lattice_index(const Lattice& inner, const Lattice& outer) {
    Rat r = inner.covolume() / outer.covolume();
    if (r.get_den() != 1) throw std::invalid_argument("lattice is not a sublattice");
    return r.get_num();
}

std::vector<RatVec> coset_reps(const Lattice& inner, const Lattice& outer) {
    if (!inner.subset_of(outer)) throw std::invalid_argument("coset_reps: inner lattice is not contained in outer");
    const std::size_t n = outer.dim();
    std::vector<IntVec> cols;
    for (std::size_t j = 0; j < n; ++j) cols.push_back(*outer.coordinates(inner.column(j)));
    HermiteResult hr = hermite_form(Matrix<Int>::from_columns(cols, n));
    std::vector<Int> bounds(n);
    for (std::size_t i = 0; i < n; ++i) bounds[i] = hr.h(i, i);

    std::vector<RatVec> reps;
    std::vector<Int> digit(n, Int(0));
    while (true) {
        RatVec v(n, Rat(0));
        for (std::size_t j = 0; j < n; ++j) {
            if (digit[j] == 0) continue;
            RatVec c = outer.column(j);
            for (std::size_t i = 0; i < n; ++i) v[i] += Rat(digit[j]) * c[i];
        }
        reps.push_back(std::move(v));
        std::size_t k = n;
        while (k > 0) {
            --k;
            digit[k] += 1;
            if (digit[k] < bounds[k]) break;
            digit[k] = 0;
            if (k == 0) return reps;
        }
        if (n == 0) return reps;
    }
}

std::optional<RatVec> split_in_sum(const Lattice& a, const Lattice& b, const RatVec& target) {
    const std::size_t n = a.dim();
    Int d;
    mpz_lcm(d.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), lcm_of_denominators(target).get_mpz_t());
    Int fa = d / a.denominator();
    Int fb = d / b.denominator();
    IntMatrix stacked(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            stacked(i, j) = fa * a.basis()(i, j);
            stacked(i, n + j) = fb * b.basis()(i, j);
        }
    HermiteResult hr = hermite_form(stacked);
    RatVec t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = target[i] * Rat(d);
    IntMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = hr.h(i, j);
    RatVec y = solve_lower(h, t);
    if (!is_integral(y)) return std::nullopt;
    // z = U[:, :n] y ; the a-part is the first n entries of z.
    RatVec part(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < n; ++j) {
            Int zj = 0;
            for (std::size_t k = 0; k < n; ++k) zj += hr.transform(j, k) * y[k].get_num();
            s += a.basis()(i, j) * zj;
        }
        part[i] = Rat(s, a.denominator());
        part[i].canonicalize();
    }
    return part;
}

Rat line_generator(const Lattice& l, const RatVec& line) {
    RatVec scaled(line.size());
    for (std::size_t i = 0; i < line.size(); ++i) scaled[i] = line[i] * Rat(l.denominator());
    RatVec y = solve_lower(l.basis(), scaled);
    Int q = lcm_of_denominators(y);
    IntVec z;
    for (const auto& c : y) z.push_back(Rat(c * Rat(q)).get_num());
    Int g = gcd_of(z);
    if (g == 0) throw std::invalid_argument("line_generator: zero direction");
    Rat t(q, g);
    t.canonicalize();
    return t;
}

}  // namespace crideal
