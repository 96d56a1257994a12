#ifndef THUE_MAHLER_ORACLE_HPP
#define THUE_MAHLER_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "forms.hpp"
#include "primes.hpp"
#include "solver.hpp"

namespace thue_mahler {

namespace detail {

// Divisibility by an odd p through multiplication by p^-1 mod 2^64:
// p | v  iff  v * inv <= floor((2^64 - 1) / p), and then v / p = v * inv.
struct OddDivisor {
    std::uint64_t inv;
    std::uint64_t limit;

    explicit OddDivisor(std::uint64_t p) : inv(p), limit(UINT64_MAX / p) {
        for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;  // Newton iteration
    }
};

struct SmoothTester {
    bool has_two = false;
    std::vector<OddDivisor> odd;

    explicit SmoothTester(const PrimeSet& S) {
        for (const auto& p : S.primes()) {
            if (p == 2) {
                has_two = true;
            } else if (fits_u64(p)) {
                odd.emplace_back(to_u64(p));
            }
        }
    }

    bool smooth(std::uint64_t v) const {
        if (has_two) v >>= __builtin_ctzll(v);
        for (const auto& d : odd) {
            std::uint64_t q = v * d.inv;
            while (q <= d.limit) {
                v = q;
                q = v * d.inv;
            }
        }
        return v == 1;
    }
};

}  // namespace detail

/**
 * Exhaustive search over max(|x|, |y|) <= H with y >= 1 (and (1, 0) when
 * asked).  Sound and complete inside the box.
 */
inline SolutionSet brute_force(const BinaryCubicForm& h, const PrimeSet& S, const Integer& H,
                               bool include_trivial = false, unsigned jobs = 1) {
    if (H < 1) throw std::invalid_argument("search height must be at least 1");
    SolutionSet out;
    out.h = h;
    out.S = S;

    std::vector<std::pair<Integer, Integer>> hits;
    auto consider = [&](const Integer& x, const Integer& y, std::vector<std::pair<Integer, Integer>>& sink) {
        if (gcd(x, y) != 1) return;
        const Integer v = h(x, y);
        if (v == 0) return;
        if (is_s_unit(v, S)) sink.emplace_back(x, y);
    };

    if (include_trivial) consider(Integer(1), Integer(0), hits);

    // Fast path: every value fits in 64 bits and S has no huge primes.
    const Integer coef_sum = abs(h.a) + abs(h.b) + abs(h.c) + abs(h.d);
    const bool fast = fits_u64(H) && H <= 2000000 && fits_u64(coef_sum * H * H * H) &&
                      coef_sum * H * H * H < Integer("9223372036854775807") &&
                      std::all_of(S.primes().begin(), S.primes().end(), [](const Integer& p) { return fits_u64(p); });

    const std::int64_t Hs = fast ? static_cast<std::int64_t>(to_u64(H)) : 0;
    std::vector<std::vector<std::pair<Integer, Integer>>> stripes(std::max(1U, jobs));
    if (fast) {
        const std::int64_t a = h.a.get_si(), b = h.b.get_si(), c = h.c.get_si(), d = h.d.get_si();
        const detail::SmoothTester tester(S);
        detail::parallel_for(stripes.size(), jobs, [&](std::size_t t) {
            auto& sink = stripes[t];
            for (std::int64_t y = 1 + static_cast<std::int64_t>(t); y <= Hs; y += static_cast<std::int64_t>(stripes.size())) {
                // h(x, y) = ((a x + b y) x + c y^2) x + d y^3
                const __int128 y2 = static_cast<__int128>(y) * y;
                const __int128 by = static_cast<__int128>(b) * y, cy2 = c * y2, dy3 = d * y2 * y;
                for (std::int64_t x = -Hs; x <= Hs; ++x) {
                    const __int128 v = ((a * static_cast<__int128>(x) + by) * x + cy2) * x + dy3;
                    if (v == 0) continue;
                    const std::uint64_t m = static_cast<std::uint64_t>(v < 0 ? -v : v);
                    if (!tester.smooth(m)) continue;
                    if (std::gcd(x, y) != 1) continue;
                    sink.emplace_back(Integer(static_cast<long>(x)), Integer(static_cast<long>(y)));
                }
            }
        });
    } else {
        detail::parallel_for(stripes.size(), jobs, [&](std::size_t t) {
            for (Integer y = 1 + static_cast<unsigned long>(t); y <= H; y += static_cast<unsigned long>(stripes.size())) {
                for (Integer x = -H; x <= H; ++x) consider(x, y, stripes[t]);
            }
        });
    }
    for (auto& s : stripes) hits.insert(hits.end(), s.begin(), s.end());

    for (const auto& [x, y] : hits) {
        const Integer v = h(x, y);
        auto fac = is_s_unit(v, S);
        if (!fac) throw InternalInconsistency("oracle fast path accepted a non-S-unit");
        out.solutions.push_back(Solution{x, y, v, std::move(*fac), {}, 0, {}});
    }
    std::sort(out.solutions.begin(), out.solutions.end(),
              [](const Solution& l, const Solution& r) { return l.point() < r.point(); });
    return out;
}

}  // namespace thue_mahler

#endif  // THUE_MAHLER_ORACLE_HPP
