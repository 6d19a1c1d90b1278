#include "../support/oracles.hpp"

#include <gtest/gtest.h>

using namespace crideal;
using namespace crideal::testing;

namespace {

TEST(Numerical, MembershipAndTranslates) {
    auto b = sigma();
    EXPECT_TRUE(b.member(5, TailSet::tail(2)));
    EXPECT_FALSE(b.member(3, b.principal(2)));
    EXPECT_EQ(b.meet_translate(b.whole(), -1, b.whole()), TailSet::tail(2));
    EXPECT_EQ(b.meet_translate(b.whole(), 1, b.whole()), TailSet::tail(3));
    EXPECT_EQ(b.left_translate(2, TailSet::tail(2)), TailSet::tail(4));
    EXPECT_EQ(b.pre_translate(2, b.principal(2)), b.whole());
    EXPECT_EQ(b.intersect(b.principal(2), b.principal(3)), TailSet::tail(5));
    EXPECT_EQ(b.intersect(TailSet::tail(4), b.whole()), TailSet::tail(4));
}

TEST(Numerical, DescribeForms) {
    auto b = sigma();
    EXPECT_EQ(b.describe(b.whole()), "Sigma");
    EXPECT_EQ(b.describe(b.principal(4)), "4+Sigma");
    EXPECT_EQ(b.describe(TailSet::tail(3)), "3+N");
    EXPECT_EQ(b.describe(TailSet::empty_set()), "empty");
    NumericalSemigroup c({3, 5});
    EXPECT_EQ(c.describe(c.intersect(c.principal(3), c.principal(5))), "{8,11,13..}");
}

TEST(Numerical, WordIdealsMatchExplicitSets) {
    auto b = sigma();
    EXPECT_EQ(ideal_of_word(b, make_word(b, {3, 2, 2, 3})), TailSet::tail(2));
    EXPECT_EQ(ideal_of_word(b, make_word(b, {2, 3, 3, 2})), TailSet::tail(3));
    EXPECT_EQ(to_sigma_set(b, ideal_of_word(b, make_word(b, {4, 0, 2, 7}))), sigma_word_set({4, 0, 2, 7}));
}

TEST(Grid, ConesAndLcm) {
    GridMonoid b(2);
    GridVector x{1, 0}, y{0, 1};
    EXPECT_EQ(b.intersect(b.principal(x), b.principal(y)), b.principal(GridVector{1, 1}));
    auto l = lcm_pair(b, x, y);
    EXPECT_EQ(l.kind, LcmKind::Principal);
    EXPECT_EQ(*l.generator, (GridVector{1, 1}));
    EXPECT_EQ(b.pre_translate(GridVector{2, 0}, b.principal(GridVector{1, 3})), b.principal(GridVector{0, 3}));
    EXPECT_FALSE(b.in_P(GridVector{-1, 0}));
}

TEST(Free, PrefixIdeals) {
    FreeMonoid b(2);
    auto a = b.parse("a"), ab = b.parse("ab"), bb = b.parse("b");
    EXPECT_TRUE(b.member(ab, b.principal(a)));
    EXPECT_TRUE(b.is_empty(b.intersect(b.principal(a), b.principal(bb))));
    EXPECT_EQ(b.intersect(b.principal(a), b.principal(ab)), b.principal(ab));
    EXPECT_EQ(b.pre_translate(a, b.principal(ab)), b.principal(bb));
    EXPECT_EQ(lcm_pair(b, a, bb).kind, LcmKind::Empty);
    EXPECT_EQ(b.format(b.parse("aB")), "aB");
    EXPECT_EQ(b.format(b.identity()), "e");
    EXPECT_EQ(b.multiply(b.parse("aB"), b.parse("ba")), b.parse("aa"));
}

TEST(OrderMult, IdealOperations) {
    OrderMultMonoid b(ring("Z[sqrt-3]"));
    const auto& r = b.ring();
    auto w = r.from_coordinates({Rat(0), Rat(1)});
    auto two = r.from_integer(2);
    EXPECT_EQ(b.left_translate(two, r.maximal()), r.maximal().scaled(Rat(2)));
    auto word = make_word(b, {r.mul(two, w), two, two, r.mul(two, w)});
    EXPECT_EQ(ideal_of_word(b, word), r.maximal().scaled(Rat(2)));
    EXPECT_FALSE(b.member(r.zero(), b.whole()));
    EXPECT_EQ(b.describe(r.maximal().scaled(Rat(2))), "2*OK");
    EXPECT_EQ(b.describe(r.principal_order_ideal(w)), "[0,1]*O");
}

TEST(Axb, CosetIntersections) {
    AxbMonoid b(ring("Z[sqrt-3]"));
    const auto& r = b.ring();
    auto two_o = r.order().scaled(Rat(2));
    auto a = b.make_ideal(r.zero(), two_o);
    auto c = b.make_ideal(r.one(), two_o);
    EXPECT_EQ(b.intersect(a, a), a);
    EXPECT_TRUE(b.is_empty(b.intersect(a, c)));
    auto w = r.from_coordinates({Rat(0), Rat(1)});
    auto two_w_o = r.element_times_lattice(r.scale(w, Rat(2)), r.order());
    auto meet = b.intersect(a, b.make_ideal(r.zero(), two_w_o));
    EXPECT_EQ(meet, b.make_ideal(r.zero(), lattice_intersect(two_o, two_w_o)));
    EXPECT_EQ(b.describe(b.whole()), "P");
}

TEST(Axb, Units) {
    AxbMonoid b(ring("Z[sqrt-3]"));
    const auto& r = b.ring();
    AxbElement g{r.one(), r.one()}, p{r.zero(), r.from_integer(3)};
    EXPECT_TRUE(b.is_unit(g));
    EXPECT_FALSE(units_fix_ideal(b, g, p));
    EXPECT_TRUE(units_fix_ideal(b, b.identity(), p));
    OrderMultMonoid m(b.ring_ptr());
    EXPECT_TRUE(units_fix_ideal(m, r.from_integer(-1), r.from_integer(2)));
}

TEST(NumberRing, ArithmeticAndNorms) {
    auto r = ring("Z[cbrt19]");
    auto t = r->from_coordinates({Rat(0), Rat(1), Rat(0)});
    EXPECT_EQ(r->mul(r->mul(t, t), t), r->from_integer(19));
    EXPECT_EQ(r->norm(t), 19);
    auto inv = r->inverse(t);
    ASSERT_TRUE(inv);
    EXPECT_EQ(r->mul(*inv, t), r->one());
    EXPECT_FALSE(r->inverse(r->zero()));
}

TEST(NumberRing, ConductorsAndM) {
    auto s3 = ring("Z[sqrt-3]"), gi = ring("Z[2i]"), cr = ring("Z[cbrt19]"), z = ring("Z");
    EXPECT_EQ(s3->conductor(), s3->maximal().scaled(Rat(2)));
    EXPECT_EQ(gi->conductor(), gi->maximal().scaled(Rat(2)));
    EXPECT_EQ(s3->smallest_m(), 2);
    EXPECT_EQ(cr->smallest_m(), 3);
    EXPECT_EQ(z->smallest_m(), 1);
    // a + b t + c t^2 with a + b + c = 0 mod 3, where t^2 = -1 - t + 3w.
    auto cond = cr->conductor();
    for (int a = -3; a <= 3; ++a)
        for (int bb = -3; bb <= 3; ++bb)
            for (int c = -3; c <= 3; ++c) {
                RatVec v{Rat(a - c), Rat(bb - c), Rat(3 * c)};
                EXPECT_EQ(cond.contains(v), (a + bb + c) % 3 == 0);
            }
    EXPECT_EQ(cr->ideal_quotient(cr->order(), cr->maximal()), cond);
}

TEST(NumberRing, DependenceValues) {
    auto cr = ring("Z[cbrt19]");
    EXPECT_EQ(cr->n_of(cr->from_coordinates({Rat(0), Rat(1), Rat(0)})), 19);
    EXPECT_EQ(cr->n_of(cr->from_coordinates({Rat(2), Rat(1), Rat(2)})), 15);
    EXPECT_EQ(cr->n_of(cr->one()), 1);
    EXPECT_EQ(cr->h_prime(cr->from_coordinates({Rat(0), Rat(1), Rat(0)})),
              cr->from_coordinates({Rat(-1), Rat(-1), Rat(3)}));
    auto s3 = ring("Z[sqrt-3]");
    auto w = s3->from_coordinates({Rat(0), Rat(1)});
    EXPECT_EQ(s3->h_prime(w), s3->sub(s3->one(), w));
}

TEST(NumberRing, LatticesAndCosets) {
    auto s3 = ring("Z[sqrt-3]");
    auto w = s3->from_coordinates({Rat(0), Rat(1)});
    auto wo = s3->principal_order_ideal(w);
    auto meet = lattice_intersect(s3->order(), wo);
    EXPECT_EQ(lattice_index(meet, wo), 2);
    EXPECT_EQ(lattice_intersect(wo, wo), wo);
    // 2 O_K = {a + b sqrt-3 : a = b mod 2}, sqrt-3 = -1 + 2w.
    auto two_ok = s3->element_times_lattice(s3->from_integer(2), s3->maximal());
    for (int a = -4; a <= 4; ++a)
        for (int bb = -4; bb <= 4; ++bb) {
            RatVec v{Rat(a - bb), Rat(2 * bb)};
            EXPECT_EQ(two_ok.contains(v), (a - bb) % 2 == 0);
        }
    EXPECT_EQ(coset_reps(two_ok, s3->order()).size(), 2u);
    EXPECT_EQ(coset_reps(s3->order(), s3->order()).size(), 1u);
    auto cr = ring("Z[cbrt19]");
    EXPECT_EQ(coset_reps(cr->maximal().scaled(Rat(3)), cr->order()).size(), 9u);
    auto gi = ring("Z[2i]");
    auto one_plus_i = gi->from_coordinates({Rat(1), Rat(1)});
    EXPECT_EQ(lattice_index(gi->element_times_lattice(one_plus_i, gi->maximal()), gi->maximal()), 2);
}

TEST(NumberRing, Divisoriality) {
    for (const auto& name : {"Z[sqrt-3]", "Z[2i]", "Z[cbrt19]"}) {
        auto r = ring(name);
        EXPECT_TRUE(r->divisorial_check(r->maximal())) << name;
        EXPECT_TRUE(r->divisorial_check(r->principal_order_ideal(r->from_integer(5)))) << name;
    }
    auto s3 = ring("Z[sqrt-3]");
    EXPECT_TRUE(s3->divisorial_check(s3->conductor()));
}

TEST(NumberRing, PrincipalGenerators) {
    auto s3 = ring("Z[sqrt-3]");
    auto x = s3->from_coordinates({Rat(-1), Rat(2)});
    auto found = s3->principal_generator(s3->principal_order_ideal(x));
    ASSERT_EQ(found.status, Principality::Principal);
    EXPECT_EQ(s3->principal_order_ideal(*found.generator), s3->principal_order_ideal(x));
    EXPECT_EQ(s3->principal_generator(s3->maximal().scaled(Rat(2))).status, Principality::NotPrincipal);
}

}  // namespace
