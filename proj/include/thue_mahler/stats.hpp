#ifndef THUE_MAHLER_STATS_HPP
#define THUE_MAHLER_STATS_HPP

#include <optional>
#include <string>
#include <vector>

#include "curves.hpp"
#include "primes.hpp"
#include "solver.hpp"

namespace thue_mahler {

// How the m column is derived from |Y(Z_S)|.
enum class MMode {
    orbits,  // m = (count - 3) / 6 when count = 3 mod 6, else absent
    raw,     // m = count
};

struct StatsRow {
    Integer p;
    std::optional<std::size_t> count;  // absent when the database is insufficient
    std::optional<std::size_t> m;
    std::size_t curves = 0;
    Integer nmax;
    // Mean of count over the rows so far with p = 1 and p = 3 (mod 4).
    std::optional<double> mean_1_mod_4;
    std::optional<double> mean_3_mod_4;

    bool db_insufficient() const { return !count.has_value(); }
};

inline std::optional<std::size_t> m_value(std::size_t count, MMode mode) {
    if (mode == MMode::raw) return count;
    if (count >= 3 && (count - 3) % 6 == 0) return (count - 3) / 6;
    return std::nullopt;
}

/// Solves h over base + {p} for every prime p in [lo, hi].  Rows whose
/// conductor bound the database cannot vouch for are kept and marked.
inline std::vector<StatsRow> vary_prime(const BinaryCubicForm& h, const PrimeSet& base, const Integer& lo,
                                        const Integer& hi, const CurveDatabase& db, MMode mode,
                                        const SolveOptions& opt = {}) {
    validate_cubic(h);
    std::vector<StatsRow> rows;
    double sum[4] = {0, 0, 0, 0};
    std::size_t n[4] = {0, 0, 0, 0};
    for (Integer p = std::max(lo, Integer(2)); p <= hi; ++p) {
        if (!is_prime(p)) continue;
        StatsRow row;
        row.p = p;
        const PrimeSet S = base.united(PrimeSet(std::vector<Integer>{p}));
        row.nmax = conductor_bound(h, S);
        try {
            const SolutionSet sol = solve(h, S, db, opt);
            row.count = sol.solutions.size();
            row.m = m_value(*row.count, mode);
            row.curves = sol.curves_considered;
            const unsigned long r = mpz_fdiv_ui(p.get_mpz_t(), 4);
            sum[r] += static_cast<double>(*row.count);
            ++n[r];
        } catch (const DatabaseInsufficient&) {
        }
        if (n[1] > 0) row.mean_1_mod_4 = sum[1] / static_cast<double>(n[1]);
        if (n[3] > 0) row.mean_3_mod_4 = sum[3] / static_cast<double>(n[3]);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace thue_mahler

#endif  // THUE_MAHLER_STATS_HPP
