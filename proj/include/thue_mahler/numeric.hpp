#ifndef THUE_MAHLER_NUMERIC_HPP
#define THUE_MAHLER_NUMERIC_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace thue_mahler {

using Integer = mpz_class;
using Rational = mpq_class;

// Base for every error the library reports.  Subclasses map onto the CLI
// exit-code contract (see tools/thue_mahler_cli.cpp).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input form is unusable: vanishing discriminant or non-primitive coefficients.
class DegenerateInput : public Error {
public:
    using Error::Error;
};

// The curve database cannot vouch for every conductor the run needs.
class DatabaseInsufficient : public Error {
public:
    DatabaseInsufficient(const Integer& needed, const std::string& coverage)
        : Error("database insufficient: need every curve of conductor dividing " +
                needed.get_str() + ", database covers " + coverage),
          needed_(needed) {}

    const Integer& needed() const { return needed_; }

private:
    Integer needed_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// An identity that must hold exactly did not.  Never a legal input state.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Integer parse_integer(std::string_view text) {
    std::string s(text);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    if (!s.empty() && s.front() == '+') s.erase(s.begin());
    if (s.empty() || s == "-") throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    for (std::size_t i = (s.front() == '-') ? 1 : 0; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') {
            throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
        }
    }
    return Integer(s, 10);
}

// Accepts "n" or "n/d".
inline Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return make_rational(parse_integer(text.substr(0, slash)), den);
}

inline std::optional<Integer> exact_root(const Integer& n, unsigned long k) {
    if (n < 0 && k % 2 == 0) return std::nullopt;
    Integer r;
    if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) == 0) return std::nullopt;
    return r;
}

// Rational k-th root when one exists.  For even k only the positive root is returned.
inline std::optional<Rational> exact_root(const Rational& q, unsigned long k) {
    auto num = exact_root(q.get_num(), k);
    if (!num) return std::nullopt;
    auto den = exact_root(q.get_den(), k);
    if (!den) return std::nullopt;
    return make_rational(*num, *den);
}

inline Rational pow(const Rational& q, unsigned long e) {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), e);
    return Rational(num, den);
}

inline Integer pow(const Integer& z, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), z.get_mpz_t(), e);
    return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool fits_u64(const Integer& z) {
    return z >= 0 && mpz_sizeinbase(z.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Integer& z) {
    if (!fits_u64(z)) throw std::out_of_range("integer does not fit in 64 bits: " + z.get_str());
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, z.get_mpz_t());
    return out;
}

inline Integer from_u64(std::uint64_t v) {
    Integer z;
    mpz_import(z.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
    return z;
}

}  // namespace thue_mahler

#endif  // THUE_MAHLER_NUMERIC_HPP
