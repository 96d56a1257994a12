#ifndef THUE_MAHLER_FORMS_HPP
#define THUE_MAHLER_FORMS_HPP

#include <array>
#include <string>

#include "homogeneous_poly.hpp"
#include "numeric.hpp"

namespace thue_mahler {

/// a x^3 + b x^2 y + c x y^2 + d y^3
struct BinaryCubicForm {
    Integer a, b, c, d;

    Integer operator()(const Integer& x, const Integer& y) const {
        return ((a * x + b * y) * x + c * y * y) * x + d * y * y * y;
    }

    HomogeneousPoly as_poly() const { return HomogeneousPoly(std::vector<Integer>{a, b, c, d}); }

    Integer content() const { return gcd(gcd(a, b), gcd(c, d)); }

    std::string to_string() const {
        return a.get_str() + "," + b.get_str() + "," + c.get_str() + "," + d.get_str();
    }

    friend bool operator==(const BinaryCubicForm&, const BinaryCubicForm&) = default;
};

/// Standard discriminant 18abcd - 4b^3 d + b^2 c^2 - 4ac^3 - 27a^2 d^2.
inline Integer cubic_discriminant(const BinaryCubicForm& h) {
    const Integer& a = h.a;
    const Integer& b = h.b;
    const Integer& c = h.c;
    const Integer& d = h.d;
    return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c - 27 * a * a * d * d;
}

/// Throws DegenerateInput unless gcd(a,b,c,d) = 1 and the discriminant is nonzero.
inline void validate_cubic(const BinaryCubicForm& h) {
    if (cubic_discriminant(h) == 0) {
        throw DegenerateInput("cubic form " + h.to_string() + " is degenerate (discriminant 0)");
    }
    if (h.content() != 1) {
        throw DegenerateInput("cubic form " + h.to_string() + " does not have coprime coefficients");
    }
}

/// A0 u^4 + A1 u^3 v + A2 u^2 v^2 + A3 u v^3 + A4 v^4
struct BinaryQuarticForm {
    std::array<Rational, 5> A;
};

inline Rational quartic_I2(const BinaryQuarticForm& q) {
    const auto& A = q.A;
    return Rational(A[2] * A[2] / 12 - A[1] * A[3] / 4 + A[0] * A[4]);
}

inline Rational quartic_I3(const BinaryQuarticForm& q) {
    const auto& A = q.A;
    return Rational(A[2] * A[2] * A[2] / 216 - A[1] * A[2] * A[3] / 48 + A[0] * A[3] * A[3] / 16 +
                    A[1] * A[1] * A[4] / 16 - A[0] * A[2] * A[4] / 6);
}

/// (A0 u + A1 v)(B0 u^3 + B1 u^2 v + B2 u v^2 + B3 v^3)
struct PairForm {
    std::array<Rational, 2> A;
    std::array<Rational, 4> B;

    BinaryQuarticForm expand() const {
        return BinaryQuarticForm{{Rational(A[0] * B[0]), Rational(A[0] * B[1] + A[1] * B[0]),
                                  Rational(A[0] * B[2] + A[1] * B[1]), Rational(A[0] * B[3] + A[1] * B[2]),
                                  Rational(A[1] * B[3])}};
    }
};

namespace detail {

// The pair invariants are polynomial identities in the coefficients, so the
// same code serves rational evaluation and the bivariate construction used by
// the descent (where every coefficient is itself a polynomial in x, y).

template <class R>
R pair_c4(const R& A0, const R& A1, const R& B0, const R& B1, const R& B2, const R& B3) {
    R s = -R(A1 * A1 * B1 * B1);
    s += 3 * R(A1 * A1 * B0 * B2);
    s += R(A0 * A1 * B1 * B2);
    s -= R(A0 * A0 * B2 * B2);
    s -= 9 * R(A0 * A1 * B0 * B3);
    s += 3 * R(A0 * A0 * B1 * B3);
    return -16 * s;
}

template <class R>
R pair_c6(const R& A0, const R& A1, const R& B0, const R& B1, const R& B2, const R& B3) {
    const R A0_2 = A0 * A0;
    const R A1_2 = A1 * A1;
    const R A0_3 = A0_2 * A0;
    const R A1_3 = A1_2 * A1;
    R s = 2 * R(A1_3 * B1 * B1 * B1);
    s -= 9 * R(A1_3 * B0 * B1 * B2);
    s -= 3 * R(A0 * A1_2 * B1 * B1 * B2);
    s += 18 * R(A0 * A1_2 * B0 * B2 * B2);
    s -= 3 * R(A0_2 * A1 * B1 * B2 * B2);
    s += 2 * R(A0_3 * B2 * B2 * B2);
    s += 27 * R(A1_3 * B0 * B0 * B3);
    s -= 27 * R(A0 * A1_2 * B0 * B1 * B3);
    s += 18 * R(A0_2 * A1 * B1 * B1 * B3);
    s -= 27 * R(A0_2 * A1 * B0 * B2 * B3);
    s -= 9 * R(A0_3 * B1 * B2 * B3);
    s += 27 * R(A0_3 * B0 * B3 * B3);
    return -32 * s;
}

}  // namespace detail

inline Rational pair_c4(const PairForm& p) {
    return detail::pair_c4<Rational>(p.A[0], p.A[1], p.B[0], p.B[1], p.B[2], p.B[3]);
}

inline Rational pair_c6(const PairForm& p) {
    return detail::pair_c6<Rational>(p.A[0], p.A[1], p.B[0], p.B[1], p.B[2], p.B[3]);
}

/// Discriminant of the product viewed as one quartic:
/// -disc(cubic factor) * resultant(linear, cubic)^2.
inline Rational pair_discriminant(const PairForm& p) {
    const auto& A = p.A;
    const auto& B = p.B;
    Rational cubic_part = -B[1] * B[1] * B[2] * B[2] + 4 * B[0] * B[2] * B[2] * B[2] + 4 * B[1] * B[1] * B[1] * B[3] -
                          18 * B[0] * B[1] * B[2] * B[3] + 27 * B[0] * B[0] * B[3] * B[3];
    Rational resultant = -A[1] * A[1] * A[1] * B[0] + A[0] * A[1] * A[1] * B[1] - A[0] * A[0] * A[1] * B[2] +
                         A[0] * A[0] * A[0] * B[3];
    return Rational(-cubic_part * resultant * resultant);
}

/// Discriminant of y^2 = x^3 + a2 x^2 + a4 x + a6 as printed for that model.
inline Rational reduced_model_discriminant(const Rational& a2, const Rational& a4, const Rational& a6) {
    return Rational(-16 * (-a2 * a2 * a4 * a4 + 4 * a2 * a2 * a2 * a6 + 4 * a4 * a4 * a4 - 18 * a2 * a4 * a6 +
                           27 * a6 * a6));
}

struct CInvariants {
    Rational c4;
    Rational c6;
    Rational discriminant;

    /// j = c4^3 / discriminant; throws on a singular model.
    Rational j_invariant() const {
        if (discriminant == 0) throw std::domain_error("j-invariant of a singular model");
        return Rational(c4 * c4 * c4 / discriminant);
    }
};

/// c4, c6 and the discriminant of y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
/// through the usual b2, b4, b6, b8.  Satisfies c4^3 - c6^2 = 1728 * disc.
inline CInvariants weierstrass_c_invariants(const Rational& a1, const Rational& a2, const Rational& a3,
                                            const Rational& a4, const Rational& a6) {
    const Rational b2 = a1 * a1 + 4 * a2;
    const Rational b4 = 2 * a4 + a1 * a3;
    const Rational b6 = a3 * a3 + 4 * a6;
    const Rational b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    CInvariants out;
    out.c4 = b2 * b2 - 24 * b4;
    out.c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
    out.discriminant = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
    return out;
}

}  // namespace thue_mahler

#endif  // THUE_MAHLER_FORMS_HPP
