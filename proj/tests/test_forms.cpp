#include <gtest/gtest.h>

#include "support.hpp"

using namespace tmtest;

namespace {

PairForm pair(std::array<long, 2> a, std::array<long, 4> b) {
    return PairForm{{Rational(a[0]), Rational(a[1])}, {Rational(b[0]), Rational(b[1]), Rational(b[2]), Rational(b[3])}};
}

// Discriminant from the roots: prod_{i<j} (p_i q_j - p_j q_i)^2 for
// h = prod (q_i x - p_i y).
Integer discriminant_from_roots(const std::array<std::pair<long, long>, 3>& r) {
    Integer d = 1;
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            Integer m = Integer(r[i].first) * r[j].second - Integer(r[j].first) * r[i].second;
            d *= m * m;
        }
    }
    return d;
}

BinaryCubicForm from_roots(const std::array<std::pair<long, long>, 3>& r) {
    HomogeneousPoly p = HomogeneousPoly::linear_factor(r[0].first, r[0].second) *
                        HomogeneousPoly::linear_factor(r[1].first, r[1].second) *
                        HomogeneousPoly::linear_factor(r[2].first, r[2].second);
    return {p[0], p[1], p[2], p[3]};
}

}  // namespace

TEST(CubicDiscriminant, CaptionExamples) {
    EXPECT_EQ(cubic_discriminant({0, 1, -1, 0}), 1);
    EXPECT_EQ(cubic_discriminant({0, 1, 0, 7}), -28);
    EXPECT_EQ(cubic_discriminant({1, -1, -2, -2}), -152);
    EXPECT_EQ(cubic_discriminant({1, 0, 0, 2}), -108);
}

TEST(CubicDiscriminant, EveryTableCaption) {
    struct Case {
        BinaryCubicForm h;
        long delta;
    };
    const Case cases[] = {
        {{0, 1, -1, 0}, 1},       {{0, 1, 0, 7}, -4 * 7},  {{0, 1, 0, 2}, -8},      {{0, 1, 0, 1}, -4},
        {{0, 1, 0, -2}, 8},       {{0, 1, 0, -3}, 4 * 3},  {{0, 1, 0, -7}, 4 * 7},  {{1, -1, -4, -1}, 169},
        {{1, -1, -2, -2}, -8 * 19}, {{1, 0, 0, 1}, -27},   {{1, 0, 0, 2}, -4 * 27}, {{1, 0, 0, -2}, -4 * 27},
        {{1, 0, 0, -3}, -243},
    };
    for (const auto& c : cases) EXPECT_EQ(cubic_discriminant(c.h), c.delta) << c.h.to_string();
    // and every golden table's cubic is non-degenerate
    for (const auto& name : golden_names()) EXPECT_NE(cubic_discriminant(load_golden(name).h), 0) << name;
}

TEST(CubicDiscriminant, MatchesRootOracle) {
    for (int trial = 0; trial < 50; ++trial) {
        std::array<std::pair<long, long>, 3> r;
        for (auto& [p, q] : r) {
            p = uniform(-6, 6);
            q = uniform(0, 6);
            if (p == 0 && q == 0) q = 1;
        }
        EXPECT_EQ(cubic_discriminant(from_roots(r)), discriminant_from_roots(r));
    }
}

TEST(CubicDiscriminant, UnimodularInvariance) {
    for (int trial = 0; trial < 50; ++trial) {
        const BinaryCubicForm h{uniform(-9, 9), uniform(-9, 9), uniform(-9, 9), uniform(-9, 9)};
        const BinaryCubicForm swapped{h.d, h.c, h.b, h.a};
        const BinaryCubicForm sheared{h.a, 3 * h.a + h.b, 3 * h.a + 2 * h.b + h.c, h.a + h.b + h.c + h.d};
        EXPECT_EQ(cubic_discriminant(swapped), cubic_discriminant(h));
        EXPECT_EQ(cubic_discriminant(sheared), cubic_discriminant(h));
        for (long x = -2; x <= 2; ++x) EXPECT_EQ(sheared(x, 1), h(x + 1, 1));
    }
}

TEST(CubicForm, Validation) {
    EXPECT_THROW(validate_cubic({0, 0, 0, 1}), DegenerateInput);
    EXPECT_THROW(validate_cubic({0, 2, -2, 0}), DegenerateInput);
    EXPECT_NO_THROW(validate_cubic({0, 1, -1, 0}));
}

TEST(QuarticInvariants, SmallExamples) {
    BinaryQuarticForm q1{{1, 0, 0, 0, 1}};
    EXPECT_EQ(quartic_I2(q1), 1);
    EXPECT_EQ(quartic_I3(q1), 0);
    BinaryQuarticForm q2{{0, 0, 1, 0, 0}};
    EXPECT_EQ(quartic_I2(q2), make_rational(1, 12));
    EXPECT_EQ(quartic_I3(q2), make_rational(1, 216));
    BinaryQuarticForm q3{{0, 1, 0, 0, 0}};
    EXPECT_EQ(quartic_I2(q3), 0);
    EXPECT_EQ(quartic_I3(q3), 0);
}

TEST(PairInvariants, ReducedWeierstrassCase) {
    for (int trial = 0; trial < 50; ++trial) {
        const Rational a2 = small_rational(), a4 = small_rational(), a6 = small_rational();
        PairForm p{{0, 1}, {1, a2, a4, a6}};
        EXPECT_EQ(pair_c4(p), 16 * a2 * a2 - 48 * a4);
        EXPECT_EQ(pair_c6(p), -64 * a2 * a2 * a2 + 288 * a2 * a4 - 864 * a6);
        PairForm short_form{{0, 1}, {1, 0, a4, a6}};
        EXPECT_EQ(pair_c4(short_form), -48 * a4);
        EXPECT_EQ(pair_c6(short_form), -864 * a6);
    }
}

TEST(PairInvariants, HandEvaluatedSpecialisation) {
    // (x, y) = (2, 1) for h = x(x - y)y: A = (1, -2), B = h(2,1) * (0, 1, -1, 0)
    EXPECT_EQ(pair_c4(pair({1, -2}, {0, 2, -2, 0})), 192);
}

TEST(PairInvariants, QuarticScalings) {
    for (int trial = 0; trial < 200; ++trial) {
        PairForm p{{small_rational(), small_rational()},
                   {small_rational(), small_rational(), small_rational(), small_rational()}};
        const BinaryQuarticForm q = p.expand();
        EXPECT_EQ(pair_c4(p), 192 * quartic_I2(q));
        EXPECT_EQ(pair_c6(p), -13824 * quartic_I3(q));
    }
}

TEST(PairDiscriminant, Examples) {
    EXPECT_EQ(pair_discriminant(pair({0, 1}, {1, 0, -1, 0})), 4);
    EXPECT_EQ(reduced_model_discriminant(0, -1, 0), 64);
    EXPECT_EQ(pair_discriminant(pair({1, 0}, {0, 0, 0, 1})), 0);
    EXPECT_EQ(pair_discriminant(pair({0, 1}, {1, 0, 0, 1})), -27);
    EXPECT_EQ(reduced_model_discriminant(0, 0, 1), -432);
}

TEST(PairDiscriminant, SixteenTimesMatchesCurve) {
    for (int trial = 0; trial < 200; ++trial) {
        const Rational a2 = small_rational(), a4 = small_rational(), a6 = small_rational();
        PairForm p{{0, 1}, {1, a2, a4, a6}};
        EXPECT_EQ(16 * pair_discriminant(p), reduced_model_discriminant(a2, a4, a6));
    }
}

TEST(WeierstrassInvariants, Examples) {
    auto inv = weierstrass_c_invariants(0, 0, 0, -1, 0);
    EXPECT_EQ(inv.c4, 48);
    EXPECT_EQ(inv.c6, 0);
    EXPECT_EQ(inv.discriminant, 64);

    inv = weierstrass_c_invariants(0, -1, 1, -10, -20);
    EXPECT_EQ(inv.c4, 496);
    EXPECT_EQ(inv.c6, 20008);
    EXPECT_EQ(inv.discriminant, -161051);  // -11^5

    for (int trial = 0; trial < 20; ++trial) {
        const Rational a2 = small_rational(), a4 = small_rational(), a6 = small_rational();
        inv = weierstrass_c_invariants(0, a2, 0, a4, a6);
        EXPECT_EQ(inv.c4, 16 * a2 * a2 - 48 * a4);
        EXPECT_EQ(inv.c6, -64 * a2 * a2 * a2 + 288 * a2 * a4 - 864 * a6);
        EXPECT_EQ(inv.discriminant, reduced_model_discriminant(a2, a4, a6));
    }
}

TEST(WeierstrassInvariants, DiscriminantIdentity) {
    int done = 0;
    while (done < 200) {
        std::array<Rational, 5> a;
        for (auto& v : a) v = small_rational(12);
        const auto inv = weierstrass_c_invariants(a[0], a[1], a[2], a[3], a[4]);
        if (inv.discriminant == 0) continue;
        EXPECT_EQ(inv.c4 * inv.c4 * inv.c4 - inv.c6 * inv.c6, 1728 * inv.discriminant);
        ++done;
    }
}
