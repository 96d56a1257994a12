#ifndef THUE_MAHLER_CURVES_HPP
#define THUE_MAHLER_CURVES_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "forms.hpp"
#include "numeric.hpp"

namespace thue_mahler {

struct EllipticCurve {
    std::string label;  // Cremona label, e.g. "960e6"; opaque
    std::uint64_t conductor = 0;
    std::array<Integer, 5> a;  // a1, a2, a3, a4, a6
    std::optional<int> rank;
    std::optional<int> torsion;

    CInvariants c_invariants() const {
        return weierstrass_c_invariants(Rational(a[0]), Rational(a[1]), Rational(a[2]), Rational(a[3]),
                                        Rational(a[4]));
    }

    friend bool operator==(const EllipticCurve&, const EllipticCurve&) = default;
};

/// y^2 = x^3 + A x + B
struct ShortModel {
    Rational A;
    Rational B;

    CInvariants c_invariants() const {
        return weierstrass_c_invariants(0, 0, 0, A, B);
    }
};

/// (A, B) = (-27 c4, -54 c6): the model y^2 = x^3 + Ax + B is Q-isomorphic to
/// E (scaling u = 1/6), so its c-invariants are (6^4 c4, 6^6 c6).
inline ShortModel short_model(const CInvariants& inv) {
    return ShortModel{Rational(-27 * inv.c4), Rational(-54 * inv.c6)};
}

inline ShortModel short_model(const EllipticCurve& E) { return short_model(E.c_invariants()); }

/**
 * What a database vouches for.  A curve file may declare any number of
 *
 *     # coverage: divisors-of N     (every curve whose conductor divides N)
 *     # coverage: up-to B           (every curve of conductor <= B)
 *
 * header lines.  Without any declaration the file is trusted to be complete
 * up to its largest stored conductor.
 */
struct Coverage {
    std::vector<std::uint64_t> divisors_of;
    std::optional<std::uint64_t> up_to;

    bool covers_divisors_of(const Integer& n) const {
        if (n <= 0) return false;
        if (up_to && n <= from_u64(*up_to)) return true;
        for (auto d : divisors_of) {
            if (mpz_divisible_p(from_u64(d).get_mpz_t(), n.get_mpz_t())) return true;
        }
        return false;
    }

    std::uint64_t max_conductor() const {
        std::uint64_t m = up_to.value_or(0);
        for (auto d : divisors_of) m = std::max(m, d);
        return m;
    }

    std::string describe() const {
        std::ostringstream out;
        bool first = true;
        if (up_to) {
            out << "every conductor <= " << *up_to;
            first = false;
        }
        for (auto d : divisors_of) {
            out << (first ? "" : "; ") << "divisors of " << d;
            first = false;
        }
        if (first) out << "nothing";
        return out.str();
    }

    friend bool operator==(const Coverage&, const Coverage&) = default;
};

/// Conductor-indexed, immutable after construction.
class CurveDatabase {
public:
    CurveDatabase() = default;

    CurveDatabase(std::vector<EllipticCurve> records, Coverage coverage)
        : records_(std::move(records)), coverage_(std::move(coverage)) {
        std::uint64_t largest = 0;
        for (std::size_t i = 0; i < records_.size(); ++i) {
            index_[records_[i].conductor].push_back(i);
            largest = std::max(largest, records_[i].conductor);
        }
        if (coverage_.divisors_of.empty() && !coverage_.up_to) coverage_.up_to = largest;
        if (largest > coverage_.max_conductor()) {
            throw Error("stored conductor " + std::to_string(largest) + " exceeds declared coverage (" +
                        coverage_.describe() + ")");
        }
    }

    const std::vector<EllipticCurve>& records() const { return records_; }
    std::size_t size() const { return records_.size(); }
    const Coverage& coverage() const { return coverage_; }

    /// Upper bound on every stored conductor.
    std::uint64_t max_conductor() const { return coverage_.max_conductor(); }

    std::vector<EllipticCurve> with_conductor(std::uint64_t n) const {
        std::vector<EllipticCurve> out;
        auto it = index_.find(n);
        if (it == index_.end()) return out;
        for (auto i : it->second) out.push_back(records_[i]);
        return out;
    }

    const EllipticCurve* find_label(const std::string& label) const {
        for (const auto& e : records_) {
            if (e.label == label) return &e;
        }
        return nullptr;
    }

    void require_covers(const Integer& n) const {
        if (!coverage_.covers_divisors_of(n)) throw DatabaseInsufficient(n, coverage_.describe());
    }

    /// Every record whose conductor divides n, in conductor order then file order.
    std::vector<EllipticCurve> curves_dividing(const Integer& n) const {
        std::vector<EllipticCurve> out;
        if (n <= 0) return out;
        const bool small = fits_u64(n);
        const std::uint64_t n64 = small ? to_u64(n) : 0;
        for (const auto& [conductor, idx] : index_) {
            const bool divides =
                small ? n64 % conductor == 0 : mpz_divisible_p(n.get_mpz_t(), from_u64(conductor).get_mpz_t()) != 0;
            if (divides) {
                for (auto i : idx) out.push_back(records_[i]);
            }
        }
        return out;
    }

private:
    std::vector<EllipticCurve> records_;
    std::map<std::uint64_t, std::vector<std::size_t>> index_;
    Coverage coverage_;
};

/// The curves a run needs: all records of conductor dividing nmax.  Refuses
/// when the database does not vouch for that set.
inline std::vector<EllipticCurve> curves_with_admissible_conductor(const CurveDatabase& db, const Integer& nmax) {
    if (nmax <= 0) throw std::invalid_argument("conductor bound must be positive");
    db.require_covers(nmax);
    return db.curves_dividing(nmax);
}

namespace detail {

inline std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline std::uint64_t parse_u64(const std::string& s, std::size_t line, const char* what) {
    try {
        Integer z = parse_integer(s);
        if (z <= 0 || !fits_u64(z)) throw std::invalid_argument("");
        return to_u64(z);
    } catch (const std::invalid_argument&) {
        throw ParseError(line, std::string("bad ") + what + " '" + s + "'");
    }
}

inline void parse_coverage(const std::string& body, std::size_t line, Coverage& cov) {
    std::istringstream in(body);
    std::string kind, value;
    in >> kind >> value;
    if (kind == "divisors-of") {
        cov.divisors_of.push_back(parse_u64(value, line, "coverage bound"));
    } else if (kind == "up-to") {
        const auto b = parse_u64(value, line, "coverage bound");
        cov.up_to = std::max(cov.up_to.value_or(0), b);
    } else {
        throw ParseError(line, "unknown coverage kind '" + kind + "'");
    }
}

}  // namespace detail

/**
 * Reads Cremona "allcurves" lines:
 *
 *     <conductor> <class> <index> [a1,a2,a3,a4,a6] [<rank> [<torsion>]]
 *
 * Blank lines and lines starting with '#' are skipped, except coverage
 * declarations.  Aborts with a ParseError on the first malformed line.
 */
inline CurveDatabase parse_allcurves(std::istream& in) {
    std::vector<EllipticCurve> records;
    Coverage coverage;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = detail::trim(raw);
        if (line.empty()) continue;
        if (line[0] == '#') {
            static const std::string tag = "coverage:";
            auto body = detail::trim(line.substr(1));
            if (body.rfind(tag, 0) == 0) detail::parse_coverage(body.substr(tag.size()), lineno, coverage);
            continue;
        }

        const auto open = line.find('[');
        const auto close = line.find(']');
        if (open == std::string::npos || close == std::string::npos || close < open) {
            throw ParseError(lineno, "missing bracketed a-invariants");
        }
        if (line.find('[', open + 1) < close || line.find(']', close + 1) != std::string::npos) {
            throw ParseError(lineno, "unbalanced brackets");
        }

        std::istringstream head(line.substr(0, open));
        std::string cond_s, cls, idx_s, extra;
        if (!(head >> cond_s >> cls >> idx_s) || (head >> extra)) {
            throw ParseError(lineno, "expected '<conductor> <class> <index>' before the a-invariants");
        }
        EllipticCurve e;
        e.conductor = detail::parse_u64(cond_s, lineno, "conductor");
        if (!std::all_of(cls.begin(), cls.end(), [](char ch) { return ch >= 'a' && ch <= 'z'; })) {
            throw ParseError(lineno, "bad isogeny class '" + cls + "'");
        }
        detail::parse_u64(idx_s, lineno, "curve index");
        e.label = cond_s + cls + idx_s;

        std::string list = line.substr(open + 1, close - open - 1);
        std::vector<std::string> parts;
        std::size_t start = 0;
        while (true) {
            auto comma = list.find(',', start);
            parts.push_back(detail::trim(list.substr(start, comma - start)));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (parts.size() != 5) throw ParseError(lineno, "expected five a-invariants, got " + std::to_string(parts.size()));
        for (std::size_t i = 0; i < 5; ++i) {
            try {
                e.a[i] = parse_integer(parts[i]);
            } catch (const std::invalid_argument&) {
                throw ParseError(lineno, "non-integer a-invariant '" + parts[i] + "'");
            }
        }

        std::istringstream tail(line.substr(close + 1));
        std::string field;
        std::vector<int> small;
        while (tail >> field) {
            try {
                Integer z = parse_integer(field);
                if (z < 0 || z > 1000) throw std::invalid_argument("");
                small.push_back(static_cast<int>(z.get_si()));
            } catch (const std::invalid_argument&) {
                throw ParseError(lineno, "bad rank/torsion field '" + field + "'");
            }
        }
        if (small.size() > 2) throw ParseError(lineno, "too many trailing fields");
        if (!small.empty()) e.rank = small[0];
        if (small.size() == 2) e.torsion = small[1];

        if (e.c_invariants().discriminant == 0) throw ParseError(lineno, "singular curve " + e.label);
        records.push_back(std::move(e));
    }
    try {
        return CurveDatabase(std::move(records), std::move(coverage));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& err) {
        throw ParseError(lineno, err.what());
    }
}

inline CurveDatabase parse_allcurves(const std::string& text) {
    std::istringstream in(text);
    return parse_allcurves(in);
}

/// Writes the database in the format parse_allcurves reads.
inline void write_allcurves(const CurveDatabase& db, std::ostream& out) {
    for (auto d : db.coverage().divisors_of) out << "# coverage: divisors-of " << d << '\n';
    if (db.coverage().up_to) out << "# coverage: up-to " << *db.coverage().up_to << '\n';
    for (const auto& e : db.records()) {
        const std::string n = std::to_string(e.conductor);
        // label = conductor ++ class letters ++ index
        std::string rest = e.label.substr(n.size());
        auto digit = rest.find_first_of("0123456789");
        out << n << ' ' << rest.substr(0, digit) << ' ' << rest.substr(digit) << " [";
        for (std::size_t i = 0; i < 5; ++i) out << (i ? "," : "") << e.a[i].get_str();
        out << ']';
        if (e.rank) out << ' ' << *e.rank;
        if (e.torsion) out << ' ' << *e.torsion;
        out << '\n';
    }
}

}  // namespace thue_mahler

#endif  // THUE_MAHLER_CURVES_HPP
