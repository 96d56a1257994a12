#ifndef THUE_MAHLER_HOMOGENEOUS_POLY_HPP
#define THUE_MAHLER_HOMOGENEOUS_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace thue_mahler {

/**
 * Homogeneous polynomial in (x, y) with integer coefficients.
 *
 * Coefficient i multiplies x^(degree-i) * y^i, so the vector always holds
 * exactly degree+1 entries.  The content is never divided out implicitly;
 * callers that want a primitive representative ask for primitive_part().
 */
class HomogeneousPoly {
public:
    HomogeneousPoly() : coeffs_{Integer(0)} {}

    explicit HomogeneousPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("homogeneous polynomial needs at least one coefficient");
    }

    HomogeneousPoly(std::initializer_list<long> coeffs) {
        if (coeffs.size() == 0) throw std::invalid_argument("homogeneous polynomial needs at least one coefficient");
        for (long c : coeffs) coeffs_.emplace_back(c);
    }

    static HomogeneousPoly zero(std::size_t degree) {
        return HomogeneousPoly(std::vector<Integer>(degree + 1, Integer(0)));
    }

    static HomogeneousPoly constant(const Integer& c) { return HomogeneousPoly(std::vector<Integer>{c}); }

    static HomogeneousPoly x() { return HomogeneousPoly({1, 0}); }
    static HomogeneousPoly y() { return HomogeneousPoly({0, 1}); }

    // (q*x - p*y): vanishes at the projective point (p : q).
    static HomogeneousPoly linear_factor(const Integer& p, const Integer& q) {
        return HomogeneousPoly(std::vector<Integer>{q, -p});
    }

    std::size_t degree() const { return coeffs_.size() - 1; }
    const std::vector<Integer>& coefficients() const { return coeffs_; }
    const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
    Integer& operator[](std::size_t i) { return coeffs_[i]; }

    bool is_zero() const {
        for (const auto& c : coeffs_) {
            if (c != 0) return false;
        }
        return true;
    }

    Integer content() const {
        Integer g = 0;
        for (const auto& c : coeffs_) g = gcd(g, c);
        return g;
    }

    // Divides by the content; the sign is normalized so the first nonzero
    // coefficient is positive.
    HomogeneousPoly primitive_part() const {
        Integer g = content();
        if (g == 0) return *this;
        for (const auto& c : coeffs_) {
            if (c != 0) {
                if (c < 0) g = -g;
                break;
            }
        }
        HomogeneousPoly out = *this;
        for (auto& c : out.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        return out;
    }

    Integer operator()(const Integer& x, const Integer& y) const {
        // Horner in x: ((c_0 x + c_1 y) x + c_2 y^2) x + ...
        Integer acc = 0;
        Integer ypow = 1;
        const std::size_t n = degree();
        std::vector<Integer> ypows(n + 1);
        for (std::size_t i = 0; i <= n; ++i) {
            ypows[i] = ypow;
            ypow *= y;
        }
        for (std::size_t i = 0; i <= n; ++i) {
            acc = acc * x + coeffs_[i] * ypows[i];
        }
        return acc;
    }

    Rational operator()(const Rational& x, const Rational& y) const {
        // Clear denominators: P(p/q, r/s) = P(p s, r q) / (q s)^n.
        Integer xs = x.get_num() * y.get_den();
        Integer yq = y.get_num() * x.get_den();
        Integer den = thue_mahler::pow(Integer(x.get_den() * y.get_den()), static_cast<unsigned long>(degree()));
        return make_rational((*this)(xs, yq), den);
    }

    HomogeneousPoly& operator+=(const HomogeneousPoly& o) {
        require_same_degree(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }

    HomogeneousPoly& operator-=(const HomogeneousPoly& o) {
        require_same_degree(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }

    HomogeneousPoly& operator*=(const Integer& k) {
        for (auto& c : coeffs_) c *= k;
        return *this;
    }

    friend HomogeneousPoly operator+(HomogeneousPoly a, const HomogeneousPoly& b) { return a += b; }
    friend HomogeneousPoly operator-(HomogeneousPoly a, const HomogeneousPoly& b) { return a -= b; }
    friend HomogeneousPoly operator-(HomogeneousPoly a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend HomogeneousPoly operator*(HomogeneousPoly a, const Integer& k) { return a *= k; }
    friend HomogeneousPoly operator*(const Integer& k, HomogeneousPoly a) { return a *= k; }
    friend HomogeneousPoly operator*(long k, HomogeneousPoly a) { return a *= Integer(k); }

    friend HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b) {
        auto out = zero(a.degree() + b.degree());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                mpz_addmul(out.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
            }
        }
        return out;
    }

    friend bool operator==(const HomogeneousPoly& a, const HomogeneousPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

    HomogeneousPoly pow(unsigned e) const {
        HomogeneousPoly result = constant(1);
        HomogeneousPoly base = *this;
        while (e > 0) {
            if (e & 1U) result = result * base;
            e >>= 1U;
            if (e > 0) base = base * base;
        }
        return result;
    }

    // (x, y) -> (y, x)
    HomogeneousPoly swapped() const {
        return HomogeneousPoly(std::vector<Integer>(coeffs_.rbegin(), coeffs_.rend()));
    }

    /**
     * Exact division over Z.  Returns the quotient when `divisor` divides
     * this polynomial with zero remainder and integral quotient, otherwise
     * nothing.  For a primitive divisor the two conditions coincide (Gauss).
     */
    std::optional<HomogeneousPoly> divide_exact(const HomogeneousPoly& divisor) const {
        if (divisor.is_zero()) throw std::invalid_argument("division by the zero polynomial");
        if (divisor.degree() > degree()) {
            if (is_zero()) return zero(0);
            return std::nullopt;
        }
        // Peel off the power of y dividing the divisor, then long-divide
        // from the x-leading end.
        std::size_t shift = 0;
        while (divisor.coeffs_[shift] == 0) ++shift;
        for (std::size_t i = 0; i < shift; ++i) {
            if (coeffs_[i] != 0) return std::nullopt;
        }
        const std::size_t qdeg = degree() - divisor.degree();
        const std::size_t dlen = divisor.coeffs_.size() - shift;  // terms of divisor / y^shift
        std::vector<Integer> rem(coeffs_.begin() + static_cast<std::ptrdiff_t>(shift), coeffs_.end());
        std::vector<Integer> quot(qdeg + 1);
        const Integer& lead = divisor.coeffs_[shift];
        for (std::size_t k = 0; k <= qdeg; ++k) {
            if (rem[k] == 0) continue;
            if (!mpz_divisible_p(rem[k].get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
            mpz_divexact(quot[k].get_mpz_t(), rem[k].get_mpz_t(), lead.get_mpz_t());
            for (std::size_t j = 0; j < dlen; ++j) {
                mpz_submul(rem[k + j].get_mpz_t(), quot[k].get_mpz_t(), divisor.coeffs_[shift + j].get_mpz_t());
            }
        }
        for (const auto& r : rem) {
            if (r != 0) return std::nullopt;
        }
        return HomogeneousPoly(std::move(quot));
    }

    std::string to_string() const {
        std::ostringstream out;
        const std::size_t n = degree();
        bool first = true;
        for (std::size_t i = 0; i <= n; ++i) {
            const Integer& c = coeffs_[i];
            if (c == 0) continue;
            const std::size_t ex = n - i;
            const std::size_t ey = i;
            Integer mag = abs(c);
            if (first) {
                if (c < 0) out << '-';
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            first = false;
            const bool bare = (ex == 0 && ey == 0);
            if (mag != 1 || bare) {
                out << mag.get_str();
                if (!bare) out << '*';
            }
            if (ex > 0) {
                out << 'x';
                if (ex > 1) out << '^' << ex;
                if (ey > 0) out << '*';
            }
            if (ey > 0) {
                out << 'y';
                if (ey > 1) out << '^' << ey;
            }
        }
        if (first) return "0";
        return out.str();
    }

private:
    void require_same_degree(const HomogeneousPoly& o) const {
        if (o.degree() != degree()) {
            throw std::invalid_argument("adding homogeneous polynomials of degree " + std::to_string(degree()) +
                                        " and " + std::to_string(o.degree()));
        }
    }

    std::vector<Integer> coeffs_;
};

/**
 * A homogeneous polynomial times an explicit positive-or-negative rational
 * scale.  Used wherever rational curve invariants were cleared to integers:
 * the represented polynomial is scale * poly.
 */
struct ScaledPoly {
    HomogeneousPoly poly;
    Rational scale{1};

    // Exact equality of the represented rational polynomials.
    friend bool operator==(const ScaledPoly& a, const ScaledPoly& b) {
        if (a.poly.degree() != b.poly.degree()) return false;
        const Integer lhs_k = a.scale.get_num() * b.scale.get_den();
        const Integer rhs_k = b.scale.get_num() * a.scale.get_den();
        for (std::size_t i = 0; i <= a.poly.degree(); ++i) {
            if (a.poly[i] * lhs_k != b.poly[i] * rhs_k) return false;
        }
        return true;
    }

    ScaledPoly scaled_by(const Rational& k) const { return ScaledPoly{poly, scale * k}; }

    Rational coefficient(std::size_t i) const { return scale * Rational(poly[i]); }
};

}  // namespace thue_mahler

#endif  // THUE_MAHLER_HOMOGENEOUS_POLY_HPP
