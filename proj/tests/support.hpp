#ifndef THUE_MAHLER_TEST_SUPPORT_HPP
#define THUE_MAHLER_TEST_SUPPORT_HPP

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "thue_mahler.hpp"

namespace tmtest {

using namespace thue_mahler;
namespace fs = std::filesystem;

inline std::string data_path(const std::string& rel) { return std::string(TM_DATA_DIR) + "/" + rel; }

// Curve files are parsed once per process.
inline const CurveDatabase& database(const std::string& file) {
    static std::map<std::string, std::unique_ptr<CurveDatabase>> cache;
    auto& slot = cache[file];
    if (!slot) {
        std::ifstream in(data_path("curves/" + file));
        if (!in) throw std::runtime_error("missing fixture " + file);
        slot = std::make_unique<CurveDatabase>(parse_allcurves(in));
    }
    return *slot;
}

inline std::vector<std::string> curve_files() {
    std::vector<std::string> out;
    for (const auto& e : fs::directory_iterator(data_path("curves"))) out.push_back(e.path().filename().string());
    std::sort(out.begin(), out.end());
    return out;
}

// Smallest committed fixture that vouches for every conductor dividing n.
inline std::optional<std::string> fixture_covering(const Integer& n) {
    std::optional<std::string> best;
    std::uintmax_t best_size = 0;
    for (const auto& f : curve_files()) {
        std::ifstream in(data_path("curves/" + f));
        std::string line;
        Coverage cov;
        while (std::getline(in, line) && !line.empty() && line[0] == '#') {
            const std::string tag = "# coverage: divisors-of ";
            if (line.rfind(tag, 0) == 0) cov.divisors_of.push_back(std::stoull(line.substr(tag.size())));
        }
        if (!cov.covers_divisors_of(n)) continue;
        const auto size = fs::file_size(data_path("curves/" + f));
        if (!best || size < best_size) {
            best = f;
            best_size = size;
        }
    }
    return best;
}

struct GoldenRow {
    Integer x, y;
    std::optional<Integer> value;
    std::string factorization;  // "-2^7*7" style, empty when the table omits it
    std::string label;
    std::string conductor_factorization;
};

struct GoldenTable {
    std::string name;
    BinaryCubicForm h;
    PrimeSet S;
    std::vector<GoldenRow> rows;
};

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

inline GoldenTable load_golden(const std::string& name) {
    std::ifstream in(data_path("golden/" + name));
    if (!in) throw std::runtime_error("missing golden table " + name);
    GoldenTable t;
    t.name = name;
    std::string line;
    std::getline(in, line);  // "# cubic a,b,c,d primes p,q,..."
    std::istringstream head(line);
    std::string hash, kw1, cubic, kw2, primes;
    head >> hash >> kw1 >> cubic >> kw2 >> primes;
    auto c = split(cubic, ',');
    t.h = {Integer(c[0]), Integer(c[1]), Integer(c[2]), Integer(c[3])};
    std::vector<Integer> ps;
    for (const auto& p : split(primes, ',')) ps.emplace_back(p);
    t.S = PrimeSet(ps);
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto f = split(line, '\t');
        auto xy = split(f[0], ',');
        GoldenRow r;
        r.x = Integer(xy[0]);
        r.y = Integer(xy[1]);
        if (f.size() == 2) {
            r.label = f[1];
        } else {
            r.value = Integer(f[1]);
            r.factorization = f[2];
            r.label = f[3];
            r.conductor_factorization = f[4];
        }
        t.rows.push_back(std::move(r));
    }
    return t;
}

inline std::vector<std::string> golden_names() {
    std::vector<std::string> out;
    for (const auto& e : fs::directory_iterator(data_path("golden"))) out.push_back(e.path().filename().string());
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<ProjectivePoint> golden_points(const GoldenTable& t) {
    std::vector<ProjectivePoint> out;
    for (const auto& r : t.rows) out.push_back({r.x, r.y});
    std::sort(out.begin(), out.end());
    return out;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240611);
    return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational small_rational(long bound = 9) {
    long den = uniform(1, bound);
    return make_rational(uniform(-bound, bound), den);
}

// A random primitive cubic with nonzero discriminant.
inline BinaryCubicForm random_cubic(long bound) {
    for (;;) {
        BinaryCubicForm h{uniform(-bound, bound), uniform(-bound, bound), uniform(-bound, bound),
                          uniform(-bound, bound)};
        if (h.content() == 1 && cubic_discriminant(h) != 0) return h;
    }
}

}  // namespace tmtest

#endif  // THUE_MAHLER_TEST_SUPPORT_HPP
