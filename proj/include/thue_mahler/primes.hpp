#ifndef THUE_MAHLER_PRIMES_HPP
#define THUE_MAHLER_PRIMES_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "numeric.hpp"

namespace thue_mahler {

inline bool is_prime(const Integer& n) { return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

/// Sorted set of distinct primes with their product.
class PrimeSet {
public:
    PrimeSet() = default;

    explicit PrimeSet(std::vector<Integer> primes) : primes_(std::move(primes)) {
        std::sort(primes_.begin(), primes_.end());
        primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
        for (const auto& p : primes_) {
            if (!is_prime(p)) throw std::invalid_argument(p.get_str() + " is not prime");
        }
        product_ = 1;
        for (const auto& p : primes_) product_ *= p;
    }

    PrimeSet(std::initializer_list<long> primes) : PrimeSet(std::vector<Integer>(primes.begin(), primes.end())) {}

    const std::vector<Integer>& primes() const { return primes_; }
    std::size_t size() const { return primes_.size(); }
    const Integer& product() const { return product_; }

    bool contains(const Integer& p) const { return std::binary_search(primes_.begin(), primes_.end(), p); }

    PrimeSet united(const PrimeSet& other) const {
        std::vector<Integer> all = primes_;
        all.insert(all.end(), other.primes_.begin(), other.primes_.end());
        return PrimeSet(std::move(all));
    }

    bool subset_of(const PrimeSet& other) const {
        return std::includes(other.primes_.begin(), other.primes_.end(), primes_.begin(), primes_.end());
    }

    std::string to_string(const char* sep = ",") const {
        std::string out;
        for (const auto& p : primes_) out += (out.empty() ? "" : sep) + p.get_str();
        return out;
    }

    friend bool operator==(const PrimeSet& a, const PrimeSet& b) { return a.primes_ == b.primes_; }

private:
    std::vector<Integer> primes_;
    Integer product_ = 1;
};

/// sign * prod p^e; only positive exponents are stored.
struct Factorization {
    int sign = 1;
    std::map<Integer, unsigned long> exponents;

    Integer value() const {
        Integer v = sign;
        for (const auto& [p, e] : exponents) v *= pow(p, e);
        return v;
    }

    friend bool operator==(const Factorization& a, const Factorization& b) {
        return a.sign == b.sign && a.exponents == b.exponents;
    }
};

/// Sign and exponents when |n| is supported on S.
inline std::optional<Factorization> is_s_unit(const Integer& n, const PrimeSet& S) {
    if (n == 0) throw std::invalid_argument("is_s_unit: zero is not an S-unit candidate");
    Factorization f;
    f.sign = n < 0 ? -1 : 1;
    Integer m = abs(n);
    for (const auto& p : S.primes()) {
        if (m == 1) break;
        const auto e = mpz_remove(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        if (e > 0) f.exponents[p] = e;
    }
    if (m != 1) return std::nullopt;
    return f;
}

namespace detail {

inline Integer pollard_brent(const Integer& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, q = 1, g = 1, ys;
        const unsigned long m = 128;
        unsigned long r = 1;
        auto f = [&](const Integer& v) {
            Integer out = v * v + c;
            mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
            return out;
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

inline void factor_into(Integer n, std::map<Integer, unsigned long>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    // rho needs about sqrt(p) steps on p^k, so peel off perfect powers first
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = mpz_sizeinbase(n.get_mpz_t(), 2); k >= 2; --k) {
            Integer r;
            if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) != 0) {
                std::map<Integer, unsigned long> inner;
                factor_into(r, inner);
                for (const auto& [q, e] : inner) out[q] += e * k;
                return;
            }
        }
    }
    Integer d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace detail

/// Complete factorization of a nonzero integer.
inline Factorization factor_integer(const Integer& n) {
    if (n == 0) throw std::invalid_argument("factor_integer: zero");
    Factorization f;
    f.sign = n < 0 ? -1 : 1;
    Integer m = abs(n);
    for (unsigned long p = 2; p < 10000 && m > 1; p += (p == 2 ? 1 : 2)) {
        const unsigned long e = mpz_divisible_ui_p(m.get_mpz_t(), p) ? mpz_remove(m.get_mpz_t(), m.get_mpz_t(), Integer(p).get_mpz_t()) : 0;
        if (e > 0) f.exponents[Integer(p)] = e;
        if (Integer(p) * p > m) break;
    }
    if (m > 1) detail::factor_into(m, f.exponents);
    return f;
}

inline PrimeSet prime_support(const Integer& n) {
    std::vector<Integer> ps;
    for (const auto& [p, e] : factor_integer(n).exponents) ps.push_back(p);
    return PrimeSet(std::move(ps));
}

}  // namespace thue_mahler

#endif  // THUE_MAHLER_PRIMES_HPP
