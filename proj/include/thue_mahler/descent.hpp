#ifndef THUE_MAHLER_DESCENT_HPP
#define THUE_MAHLER_DESCENT_HPP

#include <array>
#include <optional>
#include <string>

#include "curves.hpp"
#include "forms.hpp"
#include "homogeneous_poly.hpp"
#include "numeric.hpp"

namespace thue_mahler {

// The joint quartic attached to a point (x : y) is
//
//     Q(x, y, h) = (y u - x v) * h(u, v) * h(x, y),
//
// a pair form with linear part (y, -x) and cubic part h(x, y) * (a, b, c, d).
// Its invariants are homogeneous in (x, y) of degrees 8 and 12.

namespace detail {

struct JointQuarticParts {
    HomogeneousPoly A0, A1, B0, B1, B2, B3;
};

inline JointQuarticParts joint_quartic(const BinaryCubicForm& h) {
    const HomogeneousPoly hxy = h.as_poly();
    return {HomogeneousPoly::y(), -HomogeneousPoly::x(), h.a * hxy, h.b * hxy, h.c * hxy, h.d * hxy};
}

}  // namespace detail

inline HomogeneousPoly c4_poly(const BinaryCubicForm& h) {
    const auto q = detail::joint_quartic(h);
    return detail::pair_c4<HomogeneousPoly>(q.A0, q.A1, q.B0, q.B1, q.B2, q.B3);
}

inline HomogeneousPoly c6_poly(const BinaryCubicForm& h) {
    const auto q = detail::joint_quartic(h);
    return detail::pair_c6<HomogeneousPoly>(q.A0, q.A1, q.B0, q.B1, q.B2, q.B3);
}

/// Pair form of Q(x0, y0, h) with the point substituted.
inline PairForm joint_pair_form(const BinaryCubicForm& h, const Integer& x0, const Integer& y0) {
    const Integer v = h(x0, y0);
    return PairForm{{Rational(y0), Rational(-x0)},
                    {Rational(v * h.a), Rational(v * h.b), Rational(v * h.c), Rational(v * h.d)}};
}

/// c6(E)^2 c4(x,y,h)^3 - c4(E)^3 c6(x,y,h)^2, with the curve invariants'
/// denominators cleared into the recorded scale.
inline ScaledPoly j24(const BinaryCubicForm& h, const Rational& c4E, const Rational& c6E) {
    const Integer d4_3 = pow(Integer(c4E.get_den()), 3);
    const Integer d6_2 = pow(Integer(c6E.get_den()), 2);
    const Integer L = lcm(d4_3, d6_2);
    const Integer k4 = Integer(L / d6_2) * pow(Integer(c6E.get_num()), 2);
    const Integer k6 = Integer(L / d4_3) * pow(Integer(c4E.get_num()), 3);
    HomogeneousPoly poly = k4 * c4_poly(h).pow(3) - k6 * c6_poly(h).pow(2);
    return ScaledPoly{std::move(poly), make_rational(1, L)};
}

/// J24 / h(x,y)^6.  The division is exact; a remainder means an arithmetic bug.
inline ScaledPoly j6_by_division(const BinaryCubicForm& h, const Rational& c4E, const Rational& c6E) {
    ScaledPoly big = j24(h, c4E, c6E);
    auto quotient = big.poly.divide_exact(h.as_poly().pow(6));
    if (!quotient) {
        throw InternalInconsistency("J24 is not divisible by h^6 for h = " + h.to_string());
    }
    return ScaledPoly{std::move(*quotient), big.scale};
}

/// The content 2^22 * 3^3 that separates J6 from J6'.
inline const Integer& j6_content() {
    static const Integer k = pow(Integer(2), 22) * 27;
    return k;
}

/**
 * The closed-form coefficient polynomials C_0..C_6, D_0..D_6 of h.  For a
 * curve y^2 = x^3 + a4 x + a6,
 *
 *     J6' = sum_i (C_i a4^3 + D_i a6^2) x^i y^(6-i).
 *
 * Note the monomial x^i y^(6-i): pairing C_i with x^(6-i) y^i instead gives
 * J6' of the reversed form d x^3 + c x^2 y + b x y^2 + a y^3.
 */
struct SexticCoefficients {
    std::array<Integer, 7> C;
    std::array<Integer, 7> D;

    HomogeneousPoly c_part() const { return HomogeneousPoly(std::vector<Integer>(C.rbegin(), C.rend())); }
    HomogeneousPoly d_part() const { return HomogeneousPoly(std::vector<Integer>(D.rbegin(), D.rend())); }
};

inline SexticCoefficients sextic_coefficients(const BinaryCubicForm& h) {
    const Integer& a = h.a;
    const Integer& b = h.b;
    const Integer& c = h.c;
    const Integer& d = h.d;

    const Integer p0 = 2 * c * c * c - 9 * b * c * d + 27 * a * d * d;
    const Integer p6 = 2 * b * b * b - 9 * a * b * c + 27 * a * a * d;
    const Integer q0 = -c * c + 3 * b * d;
    const Integer q6 = -b * b + 3 * a * c;
    const Integer m = -b * c + 9 * a * d;
    const Integer r = 2 * b * b * c * c - 3 * a * c * c * c - 3 * b * b * b * d - 9 * a * b * c * d + 81 * a * a * d * d;

    SexticCoefficients out;
    out.C[0] = p0 * p0;
    out.D[0] = -27 * q0 * q0 * q0;
    out.C[1] = -6 * p0 * (-b * c * c + 6 * b * b * d - 9 * a * c * d);
    out.D[1] = -81 * m * q0 * q0;
    out.C[2] = -3 * (b * b * pow(c, 4) - 24 * a * pow(c, 5) + 18 * pow(b, 3) * c * c * d + 90 * a * b * pow(c, 3) * d -
                     108 * pow(b, 4) * d * d + 216 * a * b * b * c * d * d - 567 * a * a * c * c * d * d +
                     486 * a * a * b * pow(d, 3));
    out.D[2] = -81 * q0 * r;
    out.C[3] = -2 * (13 * pow(b, 3) * pow(c, 3) - 72 * a * b * pow(c, 4) - 72 * pow(b, 4) * c * d +
                     567 * a * b * b * c * c * d - 432 * a * a * pow(c, 3) * d - 432 * a * pow(b, 3) * d * d +
                     243 * a * a * b * c * d * d + 729 * pow(a, 3) * pow(d, 3));
    out.D[3] = -27 * m * (7 * b * b * c * c - 18 * a * pow(c, 3) - 18 * pow(b, 3) * d + 36 * a * b * c * d + 81 * a * a * d * d);
    out.C[4] = -3 * (pow(b, 4) * c * c + 18 * a * b * b * pow(c, 3) - 108 * a * a * pow(c, 4) - 24 * pow(b, 5) * d +
                     90 * a * pow(b, 3) * c * d + 216 * a * a * b * c * c * d - 567 * a * a * b * b * d * d +
                     486 * pow(a, 3) * c * d * d);
    out.D[4] = -81 * q6 * r;
    out.C[5] = 6 * (b * b * c - 6 * a * c * c + 9 * a * b * d) * p6;
    out.D[5] = -81 * m * q6 * q6;
    out.C[6] = p6 * p6;
    out.D[6] = -27 * q6 * q6 * q6;
    return out;
}

/// J6' from the closed-form coefficient list, for y^2 = x^3 + a4 x + a6.
inline ScaledPoly j6_closed_form(const BinaryCubicForm& h, const Rational& a4, const Rational& a6) {
    const auto sc = sextic_coefficients(h);
    const Integer q3 = pow(Integer(a4.get_den()), 3);
    const Integer s2 = pow(Integer(a6.get_den()), 2);
    const Integer L = lcm(q3, s2);
    const Integer k4 = Integer(L / q3) * pow(Integer(a4.get_num()), 3);
    const Integer k6 = Integer(L / s2) * pow(Integer(a6.get_num()), 2);
    std::vector<Integer> coeffs(7);
    for (std::size_t i = 0; i < 7; ++i) coeffs[6 - i] = sc.C[i] * k4 + sc.D[i] * k6;
    return ScaledPoly{HomogeneousPoly(std::move(coeffs)), make_rational(1, L)};
}

/// The fiber polynomial J6' of h at the curve with the given invariants,
/// evaluated on the integral short model (-27 c4, -54 c6).
struct SexticFiber {
    ScaledPoly poly;
    std::string curve_label;
    BinaryCubicForm h;
};

inline SexticFiber sextic_fiber(const BinaryCubicForm& h, const EllipticCurve& E) {
    const ShortModel m = short_model(E);
    SexticFiber f{j6_closed_form(h, m.A, m.B), E.label, h};
    if (f.poly.poly.is_zero()) {
        throw InternalInconsistency("J6 vanishes identically for h = " + h.to_string() + " and " + E.label);
    }
    return f;
}

/// Twist (c4, c6) -> (r^2 c4, r^3 c6).
inline std::pair<Rational, Rational> quadratic_twist(const Rational& c4, const Rational& c6, const Rational& r) {
    return {Rational(r * r * c4), Rational(r * r * r * c6)};
}

/**
 * Looks for lambda in Q* with c4(x0,y0,h) = lambda^4 c4E and
 * c6(x0,y0,h) = lambda^6 c6E.  Lambda is determined up to sign; the positive
 * value is returned.  Degenerate invariant patterns give no lambda.
 */
inline std::optional<Rational> lambda_check(const BinaryCubicForm& h, const Integer& x0, const Integer& y0,
                                            const Rational& c4E, const Rational& c6E) {
    const PairForm q = joint_pair_form(h, x0, y0);
    const Rational c4v = pair_c4(q);
    const Rational c6v = pair_c6(q);
    const bool zero4 = c4E == 0;
    const bool zero6 = c6E == 0;
    if (zero4 && zero6) return std::nullopt;
    if ((c4v == 0) != zero4 || (c6v == 0) != zero6) return std::nullopt;

    std::optional<Rational> lambda;
    if (!zero4 && !zero6) {
        const Rational lambda_sq = (c6v / c4v) * (c4E / c6E);
        if (lambda_sq <= 0) return std::nullopt;
        lambda = exact_root(lambda_sq, 2);
    } else if (zero4) {
        const Rational l6 = c6v / c6E;
        if (l6 <= 0) return std::nullopt;
        lambda = exact_root(l6, 6);
    } else {
        const Rational l4 = c4v / c4E;
        if (l4 <= 0) return std::nullopt;
        lambda = exact_root(l4, 4);
    }
    if (!lambda) return std::nullopt;
    if (c4v != pow(*lambda, 4) * c4E || c6v != pow(*lambda, 6) * c6E) return std::nullopt;
    return lambda;
}

/// The r for which the r-twist of E admits lambda = +-1 at (x0, y0).
inline Rational twist_factor(const BinaryCubicForm& h, const Integer& x0, const Integer& y0, const Rational& c4E,
                             const Rational& c6E) {
    const PairForm q = joint_pair_form(h, x0, y0);
    const Rational c4v = pair_c4(q);
    const Rational c6v = pair_c6(q);
    if (c4v == 0 || c6v == 0 || c4E == 0 || c6E == 0) {
        throw Error("j-invariant 0/1728 twist ambiguity at (" + x0.get_str() + ", " + y0.get_str() + ")");
    }
    return Rational((c6v / c4v) * (c4E / c6E));
}

}  // namespace thue_mahler

#endif  // THUE_MAHLER_DESCENT_HPP
