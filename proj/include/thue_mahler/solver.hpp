#ifndef THUE_MAHLER_SOLVER_HPP
#define THUE_MAHLER_SOLVER_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "curves.hpp"
#include "descent.hpp"
#include "forms.hpp"
#include "primes.hpp"
#include "roots.hpp"

namespace thue_mahler {

struct Solution {
    Integer x;
    Integer y;
    Integer value;
    Factorization factorization;
    std::string curve_label;        // empty for oracle output
    std::uint64_t conductor = 0;    // 0 for oracle output
    // Every processed curve whose J6 vanishes at (x : y), best first.
    std::vector<std::string> witnesses;

    ProjectivePoint point() const { return {x, y}; }
};

struct SolveStats {
    std::size_t max_roots_per_curve = 0;
    std::size_t curves_with_roots = 0;
    std::size_t root_hits = 0;  // (curve, root) pairs before deduplication
    double seconds = 0;
};

struct SolutionSet {
    BinaryCubicForm h;
    PrimeSet S;
    Integer nmax = 0;                     // 0 when not produced by the descent
    std::uint64_t db_max_conductor = 0;
    std::size_t curves_considered = 0;
    std::vector<Solution> solutions;      // sorted by (x, y), no duplicates
    SolveStats stats;

    std::vector<ProjectivePoint> points() const {
        std::vector<ProjectivePoint> out;
        for (const auto& s : solutions) out.push_back(s.point());
        return out;
    }
};

/**
 * Every curve attached to a solution has good reduction outside 2 * delta * S
 * and multiplicative reduction at odd p in S not dividing delta.  The
 * exponent 8 at 2 and 5 at 3 are the general conductor ceilings.
 */
inline Integer conductor_bound(const BinaryCubicForm& h, const PrimeSet& S) {
    const Integer delta = cubic_discriminant(h);
    if (delta == 0) throw DegenerateInput("cubic form " + h.to_string() + " is degenerate (discriminant 0)");
    const PrimeSet bad = S.united(prime_support(delta));
    Integer n = 256;
    for (const auto& p : bad.primes()) {
        if (p == 2) continue;
        if (!mpz_divisible_p(delta.get_mpz_t(), p.get_mpz_t())) {
            n *= p;
        } else if (p == 3) {
            n *= 243;
        } else {
            n *= p * p;
        }
    }
    return n;
}

struct SolveOptions {
    bool include_trivial = false;
    unsigned jobs = 1;
    RootOptions roots;
};

namespace detail {

inline bool witness_before(const EllipticCurve& a, const EllipticCurve& b) {
    if (a.conductor != b.conductor) return a.conductor < b.conductor;
    return a.label < b.label;
}

// Runs body(i) for i in [0, n) on up to `jobs` threads.
template <class Body>
void parallel_for(std::size_t n, unsigned jobs, Body&& body) {
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (jobs == 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
            try {
                for (std::size_t i = next++; i < n; i = next++) body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = n;
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

/// The descent over an explicit curve list (already known to be complete).
inline SolutionSet solve_with_curves(const BinaryCubicForm& h, const PrimeSet& S,
                                     const std::vector<EllipticCurve>& curves, const SolveOptions& opt = {}) {
    const auto start = std::chrono::steady_clock::now();
    validate_cubic(h);

    std::vector<std::vector<ProjectivePoint>> roots(curves.size());
    detail::parallel_for(curves.size(), opt.jobs, [&](std::size_t i) {
        const SexticFiber fiber = sextic_fiber(h, curves[i]);
        roots[i] = rational_roots_sextic(fiber.poly.poly, opt.roots);
    });

    SolutionSet out;
    out.h = h;
    out.S = S;
    out.curves_considered = curves.size();
    std::map<ProjectivePoint, Solution> found;
    std::map<ProjectivePoint, std::vector<std::size_t>> witnesses;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        out.stats.max_roots_per_curve = std::max(out.stats.max_roots_per_curve, roots[i].size());
        if (roots[i].size() > 6) {
            throw InternalInconsistency("J6 of " + curves[i].label + " has " + std::to_string(roots[i].size()) +
                                        " rational roots");
        }
        if (!roots[i].empty()) ++out.stats.curves_with_roots;
        out.stats.root_hits += roots[i].size();
        for (const auto& pt : roots[i]) {
            if (!opt.include_trivial && pt.x == 1 && pt.y == 0) continue;
            if (found.find(pt) == found.end()) {
                const Integer v = h(pt.x, pt.y);
                if (v == 0) continue;
                auto fac = is_s_unit(v, S);
                if (!fac) continue;
                found.emplace(pt, Solution{pt.x, pt.y, v, std::move(*fac), {}, 0, {}});
            }
            witnesses[pt].push_back(i);
        }
    }
    for (auto& [pt, sol] : found) {
        auto& w = witnesses.at(pt);
        std::sort(w.begin(), w.end(),
                  [&](std::size_t l, std::size_t r) { return detail::witness_before(curves[l], curves[r]); });
        sol.curve_label = curves[w.front()].label;
        sol.conductor = curves[w.front()].conductor;
        for (auto i : w) sol.witnesses.push_back(curves[i].label);
        out.solutions.push_back(std::move(sol));
    }

    // Independent soundness pass.
    for (const auto& s : out.solutions) {
        if (gcd(s.x, s.y) != 1 || h(s.x, s.y) != s.value || !is_s_unit(s.value, S) ||
            s.factorization.value() != s.value) {
            throw InternalInconsistency("unsound solution (" + s.x.get_str() + ", " + s.y.get_str() + ")");
        }
    }
    out.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

/**
 * All primitive (x, y) with h(x, y) an S-unit, each with a witnessing curve.
 * Complete provided the database holds every curve of conductor dividing the
 * bound; refuses (DatabaseInsufficient) when it cannot vouch for that.
 */
inline SolutionSet solve(const BinaryCubicForm& h, const PrimeSet& S, const CurveDatabase& db,
                         const SolveOptions& opt = {}) {
    validate_cubic(h);
    const Integer nmax = conductor_bound(h, S);
    const auto curves = curves_with_admissible_conductor(db, nmax);
    SolutionSet out = solve_with_curves(h, S, curves, opt);
    out.nmax = nmax;
    out.db_max_conductor = db.max_conductor();
    return out;
}

inline std::size_t count_curves(const CurveDatabase& db, const Integer& nmax) {
    return curves_with_admissible_conductor(db, nmax).size();
}

inline std::size_t count_curves(const CurveDatabase& db, const BinaryCubicForm& h, const PrimeSet& S) {
    return count_curves(db, conductor_bound(h, S));
}

}  // namespace thue_mahler

#endif  // THUE_MAHLER_SOLVER_HPP
