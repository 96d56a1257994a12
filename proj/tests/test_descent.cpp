#include <gtest/gtest.h>

#include <tuple>

#include "support.hpp"

using namespace tmtest;

namespace {

const HomogeneousPoly X = HomogeneousPoly::x();
const HomogeneousPoly Y = HomogeneousPoly::y();

// J6' for y^2 = x^3 + a4 x + a6 through the generic division route.
ScaledPoly j6_prime_by_division(const BinaryCubicForm& h, const Rational& a4, const Rational& a6) {
    ScaledPoly j = j6_by_division(h, Rational(-48 * a4), Rational(-864 * a6));
    j.scale /= j6_content();
    return j;
}

ScaledPoly plain(HomogeneousPoly p) { return ScaledPoly{std::move(p), 1}; }

// p(k y, x)
HomogeneousPoly swap_scaled(const HomogeneousPoly& p, long k) {
    HomogeneousPoly out = HomogeneousPoly::zero(p.degree());
    for (std::size_t i = 0; i <= p.degree(); ++i) {
        HomogeneousPoly t = (Integer(k) * Y).pow(static_cast<unsigned>(p.degree() - i)) * X.pow(static_cast<unsigned>(i));
        t *= p[i];
        out += t;
    }
    return out;
}

}  // namespace

TEST(InvariantPolys, SpecialisesToPairInvariants) {
    const BinaryCubicForm h{0, 1, -1, 0};
    EXPECT_EQ(c4_poly(h)(Integer(2), Integer(1)), 192);
    for (int trial = 0; trial < 20; ++trial) {
        const BinaryCubicForm g = random_cubic(6);
        const Integer x = uniform(-9, 9), y = uniform(-9, 9);
        const PairForm q = joint_pair_form(g, x, y);
        EXPECT_EQ(Rational(c4_poly(g)(x, y)), pair_c4(q));
        EXPECT_EQ(Rational(c6_poly(g)(x, y)), pair_c6(q));
    }
}

TEST(InvariantPolys, DegreesAndHomogeneity) {
    for (int trial = 0; trial < 5; ++trial) {
        const BinaryCubicForm h = random_cubic(5);
        const auto c4 = c4_poly(h);
        const auto c6 = c6_poly(h);
        EXPECT_EQ(c4.degree(), 8u);
        EXPECT_EQ(c6.degree(), 12u);
        EXPECT_EQ(c4(Integer(2), Integer(2)), 256 * c4(Integer(1), Integer(1)));
        EXPECT_EQ(c6(Integer(2), Integer(2)), 4096 * c6(Integer(1), Integer(1)));
    }
}

TEST(InvariantPolys, VanishAtZeroOfH) {
    const BinaryCubicForm h{0, 1, -1, 0};
    EXPECT_EQ(c4_poly(h)(Integer(1), Integer(0)), 0);
    EXPECT_EQ(pair_c4(joint_pair_form(h, 1, 0)), 0);
}

TEST(J24, DegenerateCurveInvariants) {
    const BinaryCubicForm h{1, -1, -4, -1};
    const Rational c4E = 48, c6E = 0;
    ScaledPoly j = j24(h, c4E, c6E);
    EXPECT_EQ(j, plain(-(Integer(48 * 48 * 48) * c6_poly(h).pow(2))));
    j = j24(h, 0, 864);
    EXPECT_EQ(j, plain(Integer(864 * 864) * c4_poly(h).pow(3)));
}

TEST(J6Division, ExactForRandomInputs) {
    for (int trial = 0; trial < 30; ++trial) {
        const BinaryCubicForm h = random_cubic(9);
        const Rational c4E = small_rational(50), c6E = small_rational(50);
        EXPECT_NO_THROW(j6_by_division(h, c4E, c6E)) << h.to_string();
        EXPECT_EQ(j6_by_division(h, c4E, c6E).poly.degree(), 6u);
    }
}

TEST(J6Templates, XTimesXMinusYTimesY) {
    const BinaryCubicForm h{0, 1, -1, 0};
    const HomogeneousPoly A = ((X - 2 * Y) * (X + Y) * (2 * X - Y)).pow(2);
    const HomogeneousPoly B = Integer(27) * (X * X - X * Y + Y * Y).pow(3);
    EXPECT_EQ(j6_prime_by_division(h, 1, 0), plain(A));
    EXPECT_EQ(j6_prime_by_division(h, 0, 1), plain(B));
    EXPECT_EQ(sextic_coefficients(h).c_part(), A);
    EXPECT_EQ(sextic_coefficients(h).d_part(), B);
}

TEST(J6Templates, TotallyRealCubic) {
    const BinaryCubicForm h{1, -1, -4, -1};
    const HomogeneousPoly A =
        Integer(169) * (5 * X.pow(3) + 21 * X * X * Y + 6 * X * Y * Y - 5 * Y.pow(3)).pow(2);
    const HomogeneousPoly B = Integer(27 * 2197) * (X * X + X * Y + Y * Y).pow(3);
    EXPECT_EQ(j6_prime_by_division(h, 1, 0), plain(A));
    EXPECT_EQ(j6_prime_by_division(h, 0, 1), plain(B));
}

// The printed template for (x^2 + 7y^2)y is the sextic of (x^2 + 7y^2)x,
// i.e. the true one with (x, y) -> (7y, x).
TEST(J6Templates, RamanujanNagellCubicTemplateIsSwapped) {
    const BinaryCubicForm h{0, 1, 0, 7};
    const HomogeneousPoly A = Integer(4 * 2401) * Y * Y * (9 * X * X + 7 * Y * Y).pow(2);
    const HomogeneousPoly B = Integer(-27 * 343) * (3 * X * X - 7 * Y * Y).pow(3);
    const auto ours = sextic_coefficients(h);
    EXPECT_NE(ours.c_part().primitive_part(), A.primitive_part());
    EXPECT_EQ(ours.c_part(), Integer(4) * (X * X * (X * X + 63 * Y * Y).pow(2)));
    EXPECT_EQ(swap_scaled(ours.c_part(), 7), A);
    EXPECT_EQ(swap_scaled(ours.d_part(), 7), B);
    const BinaryCubicForm swapped{1, 0, 7, 0};
    EXPECT_EQ(j6_prime_by_division(swapped, 1, 0), plain(A));
    EXPECT_EQ(j6_prime_by_division(swapped, 0, 1), plain(B));
}

TEST(J6ClosedForm, LeadingCoefficients) {
    const auto sc = sextic_coefficients({0, 1, -1, 0});
    EXPECT_EQ(sc.C[0], 4);
    EXPECT_EQ(sc.D[0], 27);
}

TEST(J6ClosedForm, SymmetricFormsGiveSymmetricLists) {
    for (int trial = 0; trial < 20; ++trial) {
        const Integer a = uniform(-9, 9), b = uniform(-9, 9);
        const auto sc = sextic_coefficients({a, b, b, a});
        for (int i = 0; i <= 6; ++i) {
            EXPECT_EQ(sc.C[i], sc.C[6 - i]);
            EXPECT_EQ(sc.D[i], sc.D[6 - i]);
        }
    }
}

TEST(J6ClosedForm, AgreesWithDivision) {
    for (int trial = 0; trial < 100; ++trial) {
        const BinaryCubicForm h = random_cubic(20);
        const Rational a4 = uniform(-20, 20), a6 = uniform(-20, 20);
        if (4 * a4 * a4 * a4 + 27 * a6 * a6 == 0) continue;
        ScaledPoly closed = j6_closed_form(h, a4, a6);
        closed.scale *= j6_content();
        EXPECT_EQ(closed, j6_by_division(h, Rational(-48 * a4), Rational(-864 * a6))) << h.to_string();
    }
    // rational curve coefficients
    for (int trial = 0; trial < 20; ++trial) {
        const BinaryCubicForm h = random_cubic(5);
        const Rational a4 = small_rational(), a6 = small_rational();
        if (4 * a4 * a4 * a4 + 27 * a6 * a6 == 0) continue;
        ScaledPoly closed = j6_closed_form(h, a4, a6);
        closed.scale *= j6_content();
        EXPECT_EQ(closed, j6_by_division(h, Rational(-48 * a4), Rational(-864 * a6)));
    }
}

TEST(J6ClosedForm, SpecOrderComputesReversedForm) {
    // Pairing C_i with x^(6-i) y^i gives the sextic of d x^3 + c x^2 y + b x y^2 + a y^3.
    const BinaryCubicForm h{1, 2, -3, 5};
    const auto sc = sextic_coefficients(h);
    std::vector<Integer> c(sc.C.begin(), sc.C.end());
    const BinaryCubicForm reversed{h.d, h.c, h.b, h.a};
    EXPECT_EQ(plain(HomogeneousPoly(c)), j6_prime_by_division(reversed, 1, 0));
    EXPECT_FALSE(plain(HomogeneousPoly(c)) == j6_prime_by_division(h, 1, 0));
}

TEST(SexticFiber, NeverZeroOnDatabaseCurves) {
    const BinaryCubicForm h{0, 1, -1, 0};
    for (const auto& E : database("divisors_of_768.txt").records()) {
        const auto f = sextic_fiber(h, E);
        EXPECT_FALSE(f.poly.poly.is_zero());
        EXPECT_EQ(f.curve_label, E.label);
    }
}

TEST(SexticFiber, TwistScalesBySixthPower) {
    for (int trial = 0; trial < 50; ++trial) {
        const BinaryCubicForm h = random_cubic(9);
        Rational c4 = small_rational(40), c6 = small_rational(40);
        if (c4 * c4 * c4 == c6 * c6) continue;
        Rational r = small_rational(7);
        if (r == 0) r = 3;
        const auto [c4t, c6t] = quadratic_twist(c4, c6, r);
        ScaledPoly base = j6_by_division(h, c4, c6);
        ScaledPoly twisted = j6_by_division(h, c4t, c6t);
        base.scale *= pow(r, 6);
        EXPECT_EQ(twisted, base);
    }
}

TEST(LambdaCheck, IdentityAndTwists) {
    const BinaryCubicForm h{0, 1, -1, 0};
    const Integer x = 3, y = 128;
    const PairForm q = joint_pair_form(h, x, y);
    const Rational c4 = pair_c4(q), c6 = pair_c6(q);
    auto lambda = lambda_check(h, x, y, c4, c6);
    ASSERT_TRUE(lambda.has_value());
    EXPECT_EQ(*lambda, 1);
    // E replaced by its 4-twist: lambda = 1/2
    auto [c4t, c6t] = quadratic_twist(c4, c6, 4);
    lambda = lambda_check(h, x, y, c4t, c6t);
    ASSERT_TRUE(lambda.has_value());
    EXPECT_EQ(*lambda, make_rational(1, 2));
    std::tie(c4t, c6t) = quadratic_twist(c4, c6, 2);
    EXPECT_FALSE(lambda_check(h, x, y, c4t, c6t).has_value());
    // degenerate pattern on one side only
    EXPECT_FALSE(lambda_check(h, x, y, 0, c6).has_value());
}

TEST(TwistFactor, ScalesInverselyWithTwist) {
    const BinaryCubicForm h{0, 1, -1, 0};
    const PairForm q = joint_pair_form(h, 3, 128);
    const Rational c4 = pair_c4(q), c6 = pair_c6(q);
    EXPECT_EQ(twist_factor(h, 3, 128, c4, c6), 1);
    const auto [c4t, c6t] = quadratic_twist(c4, c6, 5);
    EXPECT_EQ(twist_factor(h, 3, 128, c4t, c6t), make_rational(1, 5));
    EXPECT_THROW(twist_factor(h, 3, 128, 0, c6), Error);
}

TEST(TwistFactor, PointOnCurve960e6) {
    const BinaryCubicForm h{0, 1, -1, 0};
    const EllipticCurve* E = database("divisors_of_311040.txt").find_label("960e6");
    ASSERT_NE(E, nullptr);
    const auto inv = short_model(*E).c_invariants();
    const Rational r = twist_factor(h, 3, 128, inv.c4, inv.c6);
    const auto [c4t, c6t] = quadratic_twist(inv.c4, inv.c6, r);
    const auto lambda = lambda_check(h, 3, 128, c4t, c6t);
    ASSERT_TRUE(lambda.has_value());
    EXPECT_EQ(*lambda, 1);
}
