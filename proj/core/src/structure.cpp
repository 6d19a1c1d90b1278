#include "crideal/structure.hpp"

namespace crideal {

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

Outcome<AxbMonoid> topfree_unit_witness(const AxbMonoid& b, const AxbElement& u, const std::vector<CosetIdeal>& family,
                                        long prime_bound) {
    detail::check_unit_and_family(b, u, family);
    const NumberRing& ring = b.ring();
    // t^-1 u t = ((x + (y-1)s)/p, y) for u = (x, y) and t = (s, p), so t works as
    // soon as x + (y-1)s is outside pO.
    for (long p = 2; p <= prime_bound; ++p) {
        if (!is_prime(p)) continue;
        FieldElement pe = ring.from_integer(p);
        Lattice po = ring.principal_order_ideal(pe);
        FieldElement s;
        if (!po.contains(u.b.c))
            s = ring.zero();
        else if (!po.contains(ring.sub(u.a, ring.one()).c))
            s = ring.one();
        else
            continue;
        AxbElement t{s, pe};
        if (!outside_all(b, t, family) || units_fix_ideal(b, u, t)) continue;
        return detail::unit_fix_outcome<AxbMonoid>(u, t, family);
    }
    return inconclusive<AxbMonoid>("no prime up to " + std::to_string(prime_bound) + " gives a witness");
}

Outcome<AxbMonoid> topfree_pair_witness(const AxbMonoid& b, const AxbElement& p, const AxbElement& t, long) {
    if (p == t) throw std::invalid_argument("p and t must differ");
    for (const auto& x : {p, t})
        if (!b.in_P(x)) throw std::invalid_argument("element " + b.format(x) + " is not in P");
    const NumberRing& ring = b.ring();
    AxbElement s0 = b.identity();
    if (p.b == t.b) s0 = AxbElement{ring.one(), ring.one()};
    AxbElement p1 = b.multiply(p, s0);
    AxbElement t1 = b.multiply(t, s0);
    FieldElement diff = ring.sub(p1.b, t1.b);
    FieldElement ac = ring.mul(p1.a, t1.a);
    AxbElement s1{ring.zero(), ac};
    if (ring.principal_order_ideal(ac).contains(diff.c)) {
        FieldElement xbar = ring.divide(diff, ac);
        s1.a = ring.mul(ring.mul(ac, xbar), ring.noninvertible());
    }
    AxbElement s = b.multiply(s0, s1);
    if (!b.is_empty(b.intersect(b.principal(b.multiply(p, s)), b.principal(b.multiply(t, s)))))
        throw std::logic_error("pair construction failed for " + b.format(p) + ", " + b.format(t));
    return detail::disjointness_outcome<AxbMonoid>(p, t, s);
}

Outcome<OrderMultMonoid> integral_domain_witness(const OrderMultMonoid& b, const FieldElement& x,
                                                 const std::vector<Lattice>& family, long prime_bound) {
    const NumberRing& ring = b.ring();
    if (ring.is_zero(x) || !ring.in_order(x)) throw std::invalid_argument("x must be a nonzero element of the order");
    for (long a = 2; a <= prime_bound; ++a) {
        if (!is_prime(a)) continue;
        FieldElement ae = ring.from_integer(a);
        if (!outside_all(b, ae, family) || b.member(x, b.principal(ae))) continue;
        Outcome<OrderMultMonoid> out;
        out.answer = true;
        out.witness = ae;
        out.certificate.kind = CertificateKind::PrimeWitness;
        out.certificate.family = family;
        out.certificate.points = {x, ae};
        return out;
    }
    return inconclusive<OrderMultMonoid>("no prime up to " + std::to_string(prime_bound));
}

}  // namespace crideal
