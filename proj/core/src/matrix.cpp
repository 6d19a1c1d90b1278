#include "crideal/matrix.hpp"

#include <stdexcept>

namespace crideal {

namespace {

// new_a = x*col_a + y*col_b, new_b = u*col_a + v*col_b
void combine_columns(IntMatrix& m, std::size_t a, std::size_t b, const Int& x, const Int& y,
                     const Int& u, const Int& v) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int ca = m(i, a);
        Int cb = m(i, b);
        m(i, a) = x * ca + y * cb;
        m(i, b) = u * ca + v * cb;
    }
}

void add_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Int& q) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, target) -= q * m(i, source);
}

void negate_column(IntMatrix& m, std::size_t j) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = -m(i, j);
}

}  // namespace

HermiteResult hermite_form(const IntMatrix& a) {
    HermiteResult r;
    r.h = a;
    r.transform = IntMatrix::identity(a.cols());
    IntMatrix& h = r.h;
    IntMatrix& u = r.transform;
    const std::size_t m = a.cols();
    std::size_t piv = 0;
    for (std::size_t i = 0; i < a.rows() && piv < m; ++i) {
        for (std::size_t j = piv + 1; j < m; ++j) {
            if (h(i, j) == 0) continue;
            if (h(i, piv) == 0) {
                h.swap_columns(piv, j);
                u.swap_columns(piv, j);
                continue;
            }
            Int g, x, y;
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), h(i, piv).get_mpz_t(),
                       h(i, j).get_mpz_t());
            Int p = h(i, piv) / g;
            Int q = h(i, j) / g;
            combine_columns(h, piv, j, x, y, -q, p);
            combine_columns(u, piv, j, x, y, -q, p);
        }
        if (h(i, piv) == 0) continue;
        if (h(i, piv) < 0) {
            negate_column(h, piv);
            negate_column(u, piv);
        }
        for (std::size_t k = 0; k < piv; ++k) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, k).get_mpz_t(), h(i, piv).get_mpz_t());
            if (q == 0) continue;
            add_multiple(h, k, piv, q);
            add_multiple(u, k, piv, q);
        }
        ++piv;
    }
    r.rank = piv;
    return r;
}

RatMatrix to_rational(const IntMatrix& a) {
    RatMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Rat(a(i, j));
    return r;
}

Rat determinant(RatMatrix a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a(r, c) == 0) continue;
            Rat f = a(r, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
        }
    }
    return det;
}

std::optional<RatMatrix> inverse(const RatMatrix& a) {
    const std::size_t n = a.rows();
    RatMatrix w(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w(i, j) = a(i, j);
        w(i, n + i) = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && w(p, c) == 0) ++p;
        if (p == n) return std::nullopt;
        if (p != c)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(w(p, j), w(c, j));
        Rat inv = 1 / w(c, c);
        for (std::size_t j = 0; j < 2 * n; ++j) w(c, j) *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || w(r, c) == 0) continue;
            Rat f = w(r, c);
            for (std::size_t j = 0; j < 2 * n; ++j) w(r, j) -= f * w(c, j);
        }
    }
    RatMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = w(i, n + j);
    return out;
}

std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b) {
    auto inv = inverse(a);
    if (!inv) return std::nullopt;
    return mat_vec(*inv, b);
}

RatVec mat_vec(const RatMatrix& a, const RatVec& v) {
    RatVec out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

RatVec solve_lower(const IntMatrix& h, const RatVec& v) {
    const std::size_t n = h.rows();
    RatVec y(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rat s = v[i];
        for (std::size_t j = 0; j < i; ++j) s -= Rat(h(i, j)) * y[j];
        y[i] = s / Rat(h(i, i));
    }
    return y;
}

Int gcd_of(const IntVec& v) {
    Int g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

Int lcm_of_denominators(const RatVec& v) {
    Int l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

bool is_integral(const RatVec& v) {
    for (const auto& x : v)
        if (x.get_den() != 1) return false;
    return true;
}

Int floor_div(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

std::string to_string(const Rat& q) { return q.get_str(); }

std::string to_string(const RatVec& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + "]";
}

}  // namespace crideal
