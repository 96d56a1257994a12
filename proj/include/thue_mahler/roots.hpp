#ifndef THUE_MAHLER_ROOTS_HPP
#define THUE_MAHLER_ROOTS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "homogeneous_poly.hpp"
#include "numeric.hpp"

namespace thue_mahler {

/// Primitive projective point (x : y), canonical sign y > 0 or (y = 0, x = 1).
struct ProjectivePoint {
    Integer x;
    Integer y;

    static ProjectivePoint canonical(Integer x, Integer y) {
        if (x == 0 && y == 0) throw std::invalid_argument("(0 : 0) is not a projective point");
        Integer g = gcd(x, y);
        x /= g;
        y /= g;
        if (y < 0 || (y == 0 && x < 0)) {
            x = -x;
            y = -y;
        }
        return {std::move(x), std::move(y)};
    }

    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
    friend std::ostream& operator<<(std::ostream& os, const ProjectivePoint& p) {
        return os << '(' << p.x << ',' << p.y << ')';
    }
};

struct RootOptions {
    // Divisor enumeration is used when both end coefficients of the stripped
    // polynomial are at most this large and have few divisors.
    Integer divisor_threshold = 1000000;
    std::size_t max_divisor_pairs = 4096;
    // Small primes tried by the modular no-root filter; 0 disables it.
    unsigned modular_filter_bound = 100;
};

namespace detail {

// Univariate integer polynomials, ascending: p[i] is the coefficient of t^i.
using UPoly = std::vector<Integer>;

inline void trim(UPoly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

inline std::size_t udeg(const UPoly& p) { return p.size() - 1; }

inline bool uzero(const UPoly& p) { return p.size() == 1 && p[0] == 0; }

inline Integer ucontent(const UPoly& p) {
    Integer g = 0;
    for (const auto& c : p) g = gcd(g, c);
    return g;
}

inline UPoly uprimitive(UPoly p) {
    trim(p);
    Integer g = ucontent(p);
    if (g == 0) return p;
    if (p.back() < 0) g = -g;
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return p;
}

inline UPoly uderivative(const UPoly& p) {
    if (p.size() == 1) return {Integer(0)};
    UPoly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<unsigned long>(i);
    return d;
}

// lc(b)^(deg a - deg b + 1) * a  mod  b
inline UPoly upseudo_remainder(UPoly a, const UPoly& b) {
    const Integer& lb = b.back();
    const std::size_t db = udeg(b);
    while (!uzero(a) && udeg(a) >= db) {
        const Integer la = a.back();
        const std::size_t shift = udeg(a) - db;
        for (auto& c : a) c *= lb;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
        a.pop_back();
        if (a.empty()) a.push_back(0);
        trim(a);
    }
    return a;
}

inline UPoly ugcd(UPoly a, UPoly b) {
    a = uprimitive(std::move(a));
    b = uprimitive(std::move(b));
    if (uzero(a)) return b;
    if (uzero(b)) return a;
    if (udeg(a) < udeg(b)) std::swap(a, b);
    while (!uzero(b)) {
        UPoly r = upseudo_remainder(a, b);
        a = std::move(b);
        b = uprimitive(std::move(r));
    }
    return uprimitive(std::move(a));
}

// Exact quotient over Z; the caller guarantees divisibility.
inline UPoly udiv_exact(const UPoly& a, const UPoly& b) {
    UPoly rem = a;
    const std::size_t db = udeg(b);
    if (udeg(a) < db) throw InternalInconsistency("exact division by a higher-degree polynomial");
    UPoly q(udeg(a) - db + 1);
    for (std::size_t k = q.size(); k-- > 0;) {
        const Integer& top = rem[k + db];
        if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) {
            throw InternalInconsistency("inexact polynomial division");
        }
        mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), b.back().get_mpz_t());
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q[k] * b[j];
    }
    for (const auto& r : rem) {
        if (r != 0) throw InternalInconsistency("inexact polynomial division");
    }
    return q;
}

inline UPoly squarefree_part(const UPoly& p) {
    UPoly prim = uprimitive(p);
    if (udeg(prim) == 0) return prim;
    UPoly g = ugcd(prim, uderivative(prim));
    if (udeg(g) == 0) return prim;
    return uprimitive(udiv_exact(prim, g));
}

inline int sign_variations(const UPoly& p) {
    int v = 0;
    int last = 0;
    for (const auto& c : p) {
        const int s = sgn(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// p(t + 1), in place.
inline void taylor_shift_one(UPoly& p) {
    const std::size_t n = p.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = n - 1; j-- > i;) p[j] += p[j + 1];
    }
}

// Upper bound on the Descartes count for roots of p in (0, 1).
inline int descartes_unit(const UPoly& p) {
    UPoly r(p.rbegin(), p.rend());
    taylor_shift_one(r);
    return sign_variations(r);
}

// 2^deg * p(t / 2)
inline UPoly halve(const UPoly& p) {
    UPoly h(p.size());
    const std::size_t n = udeg(p);
    for (std::size_t i = 0; i <= n; ++i) mpz_mul_2exp(h[i].get_mpz_t(), p[i].get_mpz_t(), n - i);
    return h;
}

// Drops the common power of two from the coefficients.
inline void drop_two_power(UPoly& p) {
    mp_bitcnt_t shift = ~mp_bitcnt_t(0);
    for (const auto& c : p) {
        if (c != 0) shift = std::min(shift, mpz_scan1(c.get_mpz_t(), 0));
    }
    if (shift == 0 || shift == ~mp_bitcnt_t(0)) return;
    for (auto& c : p) mpz_tdiv_q_2exp(c.get_mpz_t(), c.get_mpz_t(), shift);
}

// Evaluates q^deg * p(num / q).
inline Integer uhom_eval(const UPoly& p, const Integer& num, const Integer& q) {
    Integer acc = 0;
    Integer qpow = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc = acc * num + p[p.size() - 1 - i] * qpow;
        qpow *= q;
    }
    return acc;
}

inline int usign_at(const UPoly& p, const Rational& t) {
    return sgn(uhom_eval(p, t.get_num(), t.get_den()));
}

// Simplest fraction (smallest denominator) strictly inside (lo, hi), lo >= 0;
// no hi means +infinity.
inline Rational simplest_between(Rational lo, std::optional<Rational> hi) {
    // Accumulate continued-fraction partial quotients, then fold.
    std::vector<Integer> quotients;
    while (true) {
        Integer fl;
        mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
        if (!hi || Rational(fl + 1) < *hi) {
            quotients.push_back(fl + 1);
            break;
        }
        quotients.push_back(fl);
        const Rational lo_frac = lo - fl;
        const Rational hi_frac = *hi - fl;
        lo = 1 / hi_frac;
        if (lo_frac == 0) {
            hi.reset();
        } else {
            hi = Rational(1 / lo_frac);
        }
    }
    Rational value = quotients.back();
    for (std::size_t i = quotients.size() - 1; i-- > 0;) value = quotients[i] + 1 / value;
    return value;
}

struct Isolated {
    Rational lo;  // open interval (lo, hi) holding exactly one root
    Rational hi;
};

/**
 * Positive real roots of a square-free p with p(0) != 0.  Exact dyadic roots
 * met at bisection points are reported directly; everything else comes back
 * as an isolating interval whose endpoints are not roots.
 */
inline void isolate_positive(const UPoly& p, std::vector<Rational>& exact, std::vector<Isolated>& intervals) {
    if (udeg(p) == 0) return;
    Integer maxabs = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) maxabs = std::max(maxabs, Integer(abs(p[i])));
    const long bits_max = static_cast<long>(mpz_sizeinbase(maxabs.get_mpz_t(), 2));
    const long bits_lead = static_cast<long>(mpz_sizeinbase(p.back().get_mpz_t(), 2));
    const unsigned long k = static_cast<unsigned long>(std::max(1L, bits_max - bits_lead + 2));

    // P(t) = p(2^k t) maps (0, 1) onto (0, 2^k), which holds every positive root.
    UPoly top(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) mpz_mul_2exp(top[i].get_mpz_t(), p[i].get_mpz_t(), k * i);
    drop_two_power(top);

    struct Node {
        UPoly poly;
        Integer c;  // interval (c / 2^depth, (c + 1) / 2^depth) in units of 2^k
        unsigned long depth;
    };
    std::vector<Node> stack{{std::move(top), Integer(0), 0}};
    auto to_orig = [&](const Integer& c, unsigned long depth) {
        Integer den;
        mpz_ui_pow_ui(den.get_mpz_t(), 2, depth);
        Integer num = c;
        mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), k);
        return make_rational(num, den);
    };

    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();
        if (udeg(node.poly) == 0) continue;
        const int v = descartes_unit(node.poly);
        if (v == 0) continue;
        if (v == 1) {
            intervals.push_back({to_orig(node.c, node.depth), to_orig(node.c + 1, node.depth)});
            continue;
        }
        UPoly left = halve(node.poly);
        UPoly right = left;
        taylor_shift_one(right);
        const unsigned long depth = node.depth + 1;
        const Integer c_left = 2 * node.c;
        if (right[0] == 0) {
            // Root at the midpoint; deflate both halves so their endpoints stay root-free.
            exact.push_back(to_orig(c_left + 1, depth));
            right.erase(right.begin());
            left = udiv_exact(left, UPoly{Integer(-1), Integer(1)});
        }
        drop_two_power(left);
        drop_two_power(right);
        stack.push_back({std::move(right), c_left + 1, depth});
        stack.push_back({std::move(left), c_left, depth});
    }
}

/**
 * The rational root inside an isolating interval, if there is one.  Every
 * rational root of p has denominator dividing lc(p), and the fraction of
 * smallest denominator in an interval is unique, so once that fraction's
 * denominator exceeds |lc(p)| the root is proved irrational.
 */
inline std::optional<Rational> rational_root_in(const UPoly& p, Isolated iv) {
    const Integer L = abs(p.back());
    int s_lo = usign_at(p, iv.lo);
    while (true) {
        const Rational cand = simplest_between(iv.lo, iv.hi);
        if (cand.get_den() > L) return std::nullopt;
        const int s_c = usign_at(p, cand);
        if (s_c == 0) return cand;
        // cand is a non-root in the interval: keep the side with the sign change.
        if (s_c == s_lo) {
            iv.lo = cand;
        } else {
            iv.hi = cand;
        }
        // Also halve, so progress does not depend on where cand falls.
        const Rational mid = (iv.lo + iv.hi) / 2;
        const int s_m = usign_at(p, mid);
        if (s_m == 0) return mid;
        if (s_m == s_lo) {
            iv.lo = mid;
        } else {
            iv.hi = mid;
        }
    }
}

inline UPoly reflect(const UPoly& p) {
    UPoly r = p;
    for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return r;
}

inline std::vector<Integer> small_primes(unsigned bound) {
    std::vector<Integer> out;
    for (unsigned n = 2; n <= bound; ++n) {
        bool prime = true;
        for (unsigned d = 2; d * d <= n; ++d) {
            if (n % d == 0) {
                prime = false;
                break;
            }
        }
        if (prime) out.emplace_back(n);
    }
    return out;
}

// True when F has a zero in P^1(F_ell), or F vanishes mod ell entirely.
inline bool has_projective_root_mod(const HomogeneousPoly& F, unsigned long ell) {
    const std::size_t n = F.degree();
    std::vector<unsigned long> c(n + 1);
    bool all_zero = true;
    for (std::size_t i = 0; i <= n; ++i) {
        c[i] = mpz_fdiv_ui(F[i].get_mpz_t(), ell);
        if (c[i] != 0) all_zero = false;
    }
    if (all_zero || c[0] == 0) return true;  // (1 : 0)
    for (unsigned long t = 0; t < ell; ++t) {
        // F(t, 1) = sum c_i t^(n-i)
        unsigned long acc = 0;
        for (std::size_t i = 0; i <= n; ++i) acc = (acc * t + c[i]) % ell;
        if (acc == 0) return true;
    }
    return false;
}

// Trial division; only called on numbers below the divisor threshold.
inline std::vector<Integer> positive_divisors(const Integer& n) {
    Integer m = abs(n);
    std::vector<std::pair<Integer, unsigned>> fac;
    for (Integer p = 2; p * p <= m; ++p) {
        unsigned e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            ++e;
        }
        if (e) fac.emplace_back(p, e);
    }
    if (m > 1) fac.emplace_back(m, 1);
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : fac) {
        const std::size_t base = divs.size();
        Integer pk = 1;
        for (unsigned j = 1; j <= e; ++j) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Stripped core F(t, 1) as an ascending univariate polynomial.
inline UPoly dehomogenize(const HomogeneousPoly& F) {
    const std::size_t n = F.degree();
    UPoly u(n + 1);
    for (std::size_t i = 0; i <= n; ++i) u[n - i] = F[i];
    return u;
}

struct StrippedForm {
    bool root_at_infinity = false;  // (1 : 0)
    bool root_at_zero = false;      // (0 : 1)
    HomogeneousPoly core;           // nonzero first and last coefficients
};

inline StrippedForm strip(const HomogeneousPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("root finding on the zero polynomial");
    const auto& c = p.coefficients();
    std::size_t first = 0;
    while (c[first] == 0) ++first;
    std::size_t last = c.size() - 1;
    while (c[last] == 0) --last;
    return {first > 0, last < c.size() - 1, HomogeneousPoly(std::vector<Integer>(c.begin() + first, c.begin() + last + 1))};
}

}  // namespace detail

/// Nonzero finite rational roots t = x/y of F(t, 1) by divisor enumeration.
/// Requires the end coefficients to be small enough to factor by trial division.
inline std::vector<ProjectivePoint> rational_roots_by_divisors(const HomogeneousPoly& core) {
    const Integer& lead = core[0];
    const Integer& trail = core[core.degree()];
    if (lead == 0 || trail == 0) throw std::invalid_argument("divisor enumeration needs nonzero end coefficients");
    std::vector<ProjectivePoint> out;
    const auto qs = detail::positive_divisors(lead);
    const auto ps = detail::positive_divisors(trail);
    for (const auto& q : qs) {
        for (const auto& p : ps) {
            if (gcd(p, q) != 1) continue;
            for (int s : {1, -1}) {
                const Integer x = s * p;
                if (core(x, q) == 0) out.push_back({x, q});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Nonzero finite rational roots via real-root isolation and exact reconstruction.
inline std::vector<ProjectivePoint> rational_roots_by_isolation(const HomogeneousPoly& core) {
    using namespace detail;
    if (core[0] == 0 || core[core.degree()] == 0) {
        throw std::invalid_argument("isolation needs nonzero end coefficients");
    }
    const UPoly sq = squarefree_part(dehomogenize(core));
    std::vector<ProjectivePoint> out;
    for (int side : {1, -1}) {
        const UPoly q = side > 0 ? sq : uprimitive(reflect(sq));
        std::vector<Rational> exact;
        std::vector<Isolated> intervals;
        isolate_positive(q, exact, intervals);
        // Interval endpoints can be dyadic roots found at bisection points;
        // divide those out so every endpoint is a non-root.
        UPoly rest = q;
        for (const auto& r : exact) rest = udiv_exact(rest, UPoly{Integer(-r.get_num()), Integer(r.get_den())});
        for (const auto& iv : intervals) {
            if (auto r = rational_root_in(rest, iv)) exact.push_back(*r);
        }
        for (const auto& r : exact) {
            const Integer x = side * r.get_num();
            const Integer y = r.get_den();
            if (core(x, y) != 0) throw InternalInconsistency("reconstructed root fails verification");
            out.push_back({x, y});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/**
 * Every rational projective root of p, canonical and sorted.  (1 : 0) and
 * (0 : 1) are read off the end coefficients; the remaining roots come from
 * divisor enumeration when the end coefficients are small, otherwise from
 * isolation.  Each returned root is verified by exact evaluation.
 */
inline std::vector<ProjectivePoint> rational_projective_roots(const HomogeneousPoly& p, const RootOptions& opt = {}) {
    using namespace detail;
    const StrippedForm s = strip(p);
    std::vector<ProjectivePoint> out;
    if (s.root_at_infinity) out.push_back({Integer(1), Integer(0)});
    if (s.root_at_zero) out.push_back({Integer(0), Integer(1)});

    if (s.core.degree() > 0) {
        bool possible = true;
        if (opt.modular_filter_bound > 0) {
            static thread_local unsigned cached_bound = 0;
            static thread_local std::vector<Integer> primes;
            if (cached_bound != opt.modular_filter_bound) {
                primes = small_primes(opt.modular_filter_bound);
                cached_bound = opt.modular_filter_bound;
            }
            for (const auto& ell : primes) {
                if (!has_projective_root_mod(s.core, ell.get_ui())) {
                    possible = false;
                    break;
                }
            }
        }
        if (possible) {
            const Integer lead = abs(s.core[0]);
            const Integer trail = abs(s.core[s.core.degree()]);
            bool by_divisors = lead <= opt.divisor_threshold && trail <= opt.divisor_threshold;
            if (by_divisors) {
                by_divisors = positive_divisors(lead).size() * positive_divisors(trail).size() <= opt.max_divisor_pairs;
            }
            auto finite = by_divisors ? rational_roots_by_divisors(s.core) : rational_roots_by_isolation(s.core);
            out.insert(out.end(), finite.begin(), finite.end());
        }
    }
    for (const auto& r : out) {
        if (p(r.x, r.y) != 0) throw InternalInconsistency("root fails exact verification");
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Rational roots of a fiber sextic; the zero polynomial has no finite root set.
inline std::vector<ProjectivePoint> rational_roots_sextic(const HomogeneousPoly& p, const RootOptions& opt = {}) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots_sextic: zero polynomial");
    return rational_projective_roots(p, opt);
}

// The factor vanishing at (x : y); y rather than -y for the point at infinity.
inline HomogeneousPoly root_factor(const ProjectivePoint& r) {
    return r.y == 0 ? HomogeneousPoly::y() : HomogeneousPoly::linear_factor(r.x, r.y);
}

/// p = cofactor * prod root_factor(r_i)^m_i over its rational roots.
struct LinearFactorization {
    std::vector<std::pair<ProjectivePoint, unsigned>> factors;
    HomogeneousPoly cofactor;

    std::string to_string() const {
        std::string out;
        const bool unit = cofactor.degree() == 0;
        if (unit) {
            const Integer& c = cofactor[0];
            if (c == -1) {
                out = "-";
            } else if (c != 1 || factors.empty()) {
                out = c.get_str();
            }
        } else {
            out = "(" + cofactor.to_string() + ")";
        }
        for (const auto& [pt, m] : factors) {
            if (!out.empty() && out != "-") out += " * ";
            out += "(" + root_factor(pt).to_string() + ")";
            if (m > 1) out += "^" + std::to_string(m);
        }
        return out;
    }
};

inline LinearFactorization factor_linear(const HomogeneousPoly& p, const RootOptions& opt = {}) {
    LinearFactorization f;
    HomogeneousPoly rest = p;
    for (const auto& r : rational_projective_roots(p, opt)) {
        const HomogeneousPoly lin = root_factor(r);
        unsigned m = 0;
        while (rest.degree() > 0) {
            auto q = rest.divide_exact(lin);
            if (!q) break;
            rest = std::move(*q);
            ++m;
        }
        if (m == 0) throw InternalInconsistency("root without a linear factor");
        f.factors.emplace_back(r, m);
    }
    f.cofactor = std::move(rest);
    return f;
}

}  // namespace thue_mahler

#endif  // THUE_MAHLER_ROOTS_HPP
