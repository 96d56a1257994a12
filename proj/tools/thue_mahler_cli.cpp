// thue-mahler: command-line front end for the descent solver.
//
// Exit codes: 0 success, 1 other failure, 2 usage, 3 degenerate input,
// 4 database insufficient.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "thue_mahler.hpp"

namespace thm = thue_mahler;

namespace {

enum Exit { ok = 0, failure = 1, usage = 2, degenerate = 3, insufficient = 4 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

thm::Integer to_integer(const std::string& s, const char* what) {
    try {
        return thm::parse_integer(s);
    } catch (const std::exception&) {
        throw UsageError(std::string("bad ") + what + ": '" + s + "'");
    }
}

thm::BinaryCubicForm parse_cubic(const std::string& text) {
    auto f = split(text, ',');
    if (f.size() != 4) throw UsageError("--cubic needs four comma-separated integers a,b,c,d");
    return {to_integer(f[0], "coefficient"), to_integer(f[1], "coefficient"), to_integer(f[2], "coefficient"),
            to_integer(f[3], "coefficient")};
}

thm::PrimeSet parse_primes(const std::string& text) {
    std::vector<thm::Integer> ps;
    if (!text.empty()) {
        for (const auto& f : split(text, ',')) ps.push_back(to_integer(f, "prime"));
    }
    try {
        return thm::PrimeSet(std::move(ps));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::string database_path(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("THUE_MAHLER_DB")) {
        if (*env) return env;
    }
    throw UsageError("no curve database: pass --db PATH or set THUE_MAHLER_DB");
}

void emit(const thm::RunReport& r, const std::string& format) {
    if (format == "json") {
        std::cout << thm::render_json(r).dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << thm::render_csv(r);
    } else {
        std::cout << thm::render_markdown(r);
    }
}

struct Common {
    std::string cubic;
    std::string primes;
    std::string db;
    std::string format = "md";
    bool include_trivial = false;
    unsigned jobs = 1;
};

void add_problem(CLI::App* cmd, Common& c) {
    cmd->add_option("--cubic", c.cubic, "coefficients a,b,c,d of a x^3 + b x^2 y + c x y^2 + d y^3")->required();
    cmd->add_option("--primes", c.primes, "the prime set S, comma separated")->required();
    cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"md", "json", "csv"}));
    cmd->add_flag("--include-trivial", c.include_trivial, "also report (1,0) when h(1,0) is an S-unit");
    cmd->add_option("--jobs", c.jobs, "worker threads")->check(CLI::Range(1U, 1024U));
}

int run_solve(const Common& c) {
    const auto h = parse_cubic(c.cubic);
    const auto S = parse_primes(c.primes);
    thm::validate_cubic(h);
    auto [db, info] = thm::load_database(database_path(c.db));
    thm::SolveOptions opt;
    opt.include_trivial = c.include_trivial;
    opt.jobs = c.jobs;
    thm::RunReport r;
    r.mode = "descent";
    r.result = thm::solve(h, S, db, opt);
    r.database = info;
    r.seconds = r.result.stats.seconds;
    emit(r, c.format);
    return ok;
}

int run_oracle(const Common& c, const std::string& height) {
    const auto h = parse_cubic(c.cubic);
    const auto S = parse_primes(c.primes);
    const thm::Integer H = to_integer(height, "height");
    if (H < 1) throw UsageError("--height must be at least 1");
    thm::validate_cubic(h);
    const auto start = std::chrono::steady_clock::now();
    thm::RunReport r;
    r.mode = "oracle";
    r.height = H;
    r.result = thm::brute_force(h, S, H, c.include_trivial, c.jobs);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(r, c.format);
    return ok;
}

int run_curves(const std::string& dbflag, const std::string& nmax, const std::string& cubic,
               const std::string& primes, bool list) {
    thm::Integer N;
    if (!nmax.empty()) {
        N = to_integer(nmax, "conductor bound");
        if (N < 1) throw UsageError("--nmax must be positive");
    } else if (!cubic.empty() && !primes.empty()) {
        const auto h = parse_cubic(cubic);
        thm::validate_cubic(h);
        N = thm::conductor_bound(h, parse_primes(primes));
    } else {
        throw UsageError("curves needs --nmax, or --cubic with --primes");
    }
    auto [db, info] = thm::load_database(database_path(dbflag));
    const auto curves = thm::curves_with_admissible_conductor(db, N);
    std::cout << "conductor bound " << N.get_str() << ": " << curves.size() << " curves\n";
    if (list) {
        for (const auto& e : curves) {
            std::cout << e.label << " [" << e.a[0] << ',' << e.a[1] << ',' << e.a[2] << ',' << e.a[3] << ','
                      << e.a[4] << "]\n";
        }
    }
    return ok;
}

thm::EllipticCurve parse_curve_flag(const std::string& text) {
    std::string s = text;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw UsageError("--curve expects [a1,a2,a3,a4,a6]");
    auto f = split(s.substr(1, s.size() - 2), ',');
    if (f.size() != 5) throw UsageError("--curve expects five a-invariants");
    thm::EllipticCurve E;
    E.label = text;
    for (std::size_t i = 0; i < 5; ++i) E.a[i] = to_integer(f[i], "a-invariant");
    if (E.c_invariants().discriminant == 0) throw UsageError("--curve is singular");
    return E;
}

void print_factored(const char* name, const thm::HomogeneousPoly& p) {
    std::cout << name << " = " << p.to_string() << '\n';
    if (p.is_zero()) return;
    const thm::Integer g = p.content();
    const auto f = thm::factor_linear(p.primitive_part());
    std::cout << "  = " << (g == 1 ? "" : g.get_str() + " * ") << f.to_string() << '\n';
}

int run_j6(const std::string& cubic, const std::string& curve, const std::string& label, const std::string& dbflag,
           bool symbolic) {
    const auto h = parse_cubic(cubic);
    thm::validate_cubic(h);
    const int given = (curve.empty() ? 0 : 1) + (label.empty() ? 0 : 1) + (symbolic ? 1 : 0);
    if (given != 1) throw UsageError("j6 needs exactly one of --curve, --curve-label, --symbolic");

    if (symbolic) {
        const auto sc = thm::sextic_coefficients(h);
        std::cout << "J6' = A(x,y) a4^3 + B(x,y) a6^2 for y^2 = x^3 + a4 x + a6, with\n";
        print_factored("A", sc.c_part());
        print_factored("B", sc.d_part());
        std::cout << "and J6 = " << thm::j6_content().get_str() << " * J6'\n";
        return ok;
    }

    thm::EllipticCurve E;
    if (!label.empty()) {
        auto [db, info] = thm::load_database(database_path(dbflag));
        const thm::EllipticCurve* found = db.find_label(label);
        if (!found) throw UsageError("curve " + label + " is not in " + info.path);
        E = *found;
    } else {
        E = parse_curve_flag(curve);
    }
    const thm::ShortModel m = thm::short_model(E);
    const thm::SexticFiber fib = thm::sextic_fiber(h, E);
    std::cout << "curve " << E.label << ", short model y^2 = x^3 + (" << m.A.get_str() << ") x + (" << m.B.get_str()
              << ")\n";
    std::cout << "J6' = (" << fib.poly.scale.get_str() << ") * (" << fib.poly.poly.to_string() << ")\n";
    const auto f = thm::factor_linear(fib.poly.poly.primitive_part());
    std::cout << "primitive part = " << f.to_string() << '\n';
    if (f.factors.empty()) {
        std::cout << "no rational roots\n";
    } else {
        std::cout << "rational roots:";
        for (const auto& [pt, mult] : f.factors) std::cout << " (" << pt.x.get_str() << "," << pt.y.get_str() << ")";
        std::cout << '\n';
        if (f.cofactor.degree() == 0) std::cout << "splits into linear factors over Q\n";
    }
    return ok;
}

int run_stats(const Common& c, const std::string& base, const std::string& range, const std::string& mmode) {
    const auto h = parse_cubic(c.cubic);
    thm::validate_cubic(h);
    const auto S0 = parse_primes(base);
    const auto dots = range.find("..");
    if (dots == std::string::npos) throw UsageError("--vary-prime-range expects LO..HI");
    const thm::Integer lo = to_integer(range.substr(0, dots), "range");
    const thm::Integer hi = to_integer(range.substr(dots + 2), "range");
    if (lo > hi) throw UsageError("empty --vary-prime-range");
    auto [db, info] = thm::load_database(database_path(c.db));
    thm::SolveOptions opt;
    opt.jobs = c.jobs;
    const auto rows = thm::vary_prime(h, S0, lo, hi, db, mmode == "raw" ? thm::MMode::raw : thm::MMode::orbits, opt);
    std::cout << thm::render_stats_csv(rows);
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solve cubic Thue-Mahler equations h(x,y) = +-prod p^e by elliptic-curve descent"};
    app.require_subcommand(1);

    Common solve_args;
    auto* solve = app.add_subcommand("solve", "all primitive (x,y) with h(x,y) an S-unit");
    add_problem(solve, solve_args);
    solve->add_option("--db", solve_args.db, "curve database (else $THUE_MAHLER_DB)");

    Common oracle_args;
    std::string height;
    auto* oracle = app.add_subcommand("oracle", "exhaustive search with max(|x|,|y|) <= height");
    add_problem(oracle, oracle_args);
    oracle->add_option("--height", height, "search height H")->required();

    std::string curves_db, curves_nmax, curves_cubic, curves_primes;
    bool curves_list = false;
    auto* curves = app.add_subcommand("curves", "count database curves of conductor dividing a bound");
    curves->add_option("--db", curves_db, "curve database (else $THUE_MAHLER_DB)");
    curves->add_option("--nmax", curves_nmax, "conductor bound");
    curves->add_option("--cubic", curves_cubic, "derive the bound from a cubic ...");
    curves->add_option("--primes", curves_primes, "... and a prime set");
    curves->add_flag("--list", curves_list, "print the curves too");

    std::string j6_cubic, j6_curve, j6_label, j6_db;
    bool j6_symbolic = false;
    auto* j6 = app.add_subcommand("j6", "print the fiber sextic J6' of a cubic at a curve");
    j6->add_option("--cubic", j6_cubic, "coefficients a,b,c,d")->required();
    j6->add_option("--curve", j6_curve, "a-invariants [a1,a2,a3,a4,a6]");
    j6->add_option("--curve-label", j6_label, "curve label looked up in the database");
    j6->add_option("--db", j6_db, "curve database (else $THUE_MAHLER_DB)");
    j6->add_flag("--symbolic", j6_symbolic, "coefficients of a4^3 and a6^2 for a generic short model");

    Common stats_args;
    std::string base, range, mmode = "orbits";
    auto* stats = app.add_subcommand("stats", "solution counts over S0 + {p} as p varies");
    stats->add_option("--cubic", stats_args.cubic, "coefficients a,b,c,d")->required();
    stats->add_option("--base-primes", base, "the fixed primes S0")->required();
    stats->add_option("--vary-prime-range", range, "LO..HI")->required();
    stats->add_option("--db", stats_args.db, "curve database (else $THUE_MAHLER_DB)");
    stats->add_option("--m-mode", mmode, "orbits: m = (count-3)/6; raw: m = count")
        ->check(CLI::IsMember({"orbits", "raw"}));
    stats->add_option("--jobs", stats_args.jobs, "worker threads")->check(CLI::Range(1U, 1024U));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : usage;
    }

    try {
        if (*solve) return run_solve(solve_args);
        if (*oracle) return run_oracle(oracle_args, height);
        if (*curves) return run_curves(curves_db, curves_nmax, curves_cubic, curves_primes, curves_list);
        if (*j6) return run_j6(j6_cubic, j6_curve, j6_label, j6_db, j6_symbolic);
        if (*stats) return run_stats(stats_args, base, range, mmode);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const thm::DegenerateInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return degenerate;
    } catch (const thm::DatabaseInsufficient& e) {
        std::cerr << "error: " << e.what() << '\n';
        return insufficient;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return failure;
    }
    return failure;
}
