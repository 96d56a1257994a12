#ifndef THUE_MAHLER_REPORT_HPP
#define THUE_MAHLER_REPORT_HPP

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "curves.hpp"
#include "primes.hpp"
#include "solver.hpp"
#include "stats.hpp"

namespace thue_mahler {

struct DatabaseInfo {
    std::string path;
    std::uint64_t max_conductor = 0;
    std::string coverage;
    std::size_t records = 0;
    std::string checksum;  // FNV-1a 64 of the file bytes, hex
};

inline std::string fnv1a64_hex(std::istream& in) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char buf[1 << 16];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 0x100000001b3ULL;
        }
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
    return hex;
}

/// Loads a curve file and records where it came from.
inline std::pair<CurveDatabase, DatabaseInfo> load_database(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open curve database " + path);
    CurveDatabase db = parse_allcurves(in);
    in.clear();
    in.seekg(0);
    DatabaseInfo info{path, db.max_conductor(), db.coverage().describe(), db.size(), fnv1a64_hex(in)};
    return {std::move(db), std::move(info)};
}

struct RunReport {
    std::string mode;              // "descent" or "oracle"
    std::optional<Integer> height;  // oracle box
    SolutionSet result;
    std::optional<DatabaseInfo> database;
    double seconds = 0;
};

namespace detail {

inline std::string superscript(unsigned long e) {
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string s = std::to_string(e), out;
    for (char ch : s) out += digits[ch - '0'];
    return out;
}

}  // namespace detail

/// "2^6*7*13", "-2^7*7", "1", "-1".
inline std::string factorization_ascii(const Factorization& f) {
    std::string out = f.sign < 0 ? "-" : "";
    bool first = true;
    for (const auto& [p, e] : f.exponents) {
        if (!first) out += '*';
        first = false;
        out += p.get_str();
        if (e > 1) out += "^" + std::to_string(e);
    }
    if (first) out += '1';
    return out;
}

/// "2⁶·7·13", "-1·2·7·13" as in the printed tables.
inline std::string factorization_pretty(const Factorization& f) {
    std::string out = f.sign < 0 ? "-1" : "";
    for (const auto& [p, e] : f.exponents) {
        if (!out.empty()) out += "·";
        out += p.get_str();
        if (e > 1) out += detail::superscript(e);
    }
    if (out.empty()) out = "1";
    return out;
}

inline Factorization conductor_factorization(std::uint64_t n) { return factor_integer(from_u64(n)); }

inline std::string primes_text(const PrimeSet& S) { return "{" + S.to_string(", ") + "}"; }

inline std::string render_markdown(const RunReport& r, std::size_t columns = 4) {
    const SolutionSet& s = r.result;
    std::ostringstream out;
    out << "## Y(Z_S) for h = " << s.h.as_poly().to_string() << ", S = " << primes_text(s.S) << "\n\n";
    if (r.mode == "oracle") {
        out << "- method: oracle (complete within height " << r.height->get_str() << ")\n";
    } else {
        out << "- method: elliptic-curve descent\n";
    }
    out << "- discriminant: " << cubic_discriminant(s.h).get_str() << "\n";
    if (s.nmax != 0) {
        out << "- conductor bound: " << s.nmax.get_str() << " = " << factorization_pretty(factor_integer(s.nmax))
            << "\n";
        out << "- curves considered: " << s.curves_considered << "\n";
    }
    out << "- solutions: " << s.solutions.size() << "\n";
    if (r.database) {
        out << "- database: " << r.database->path << " (" << r.database->records << " curves, "
            << r.database->coverage << ", fnv1a64 " << r.database->checksum << ")\n";
    }
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.3f", r.seconds);
    out << "- time: " << secs << " s\n\n";

    if (s.solutions.empty()) return out.str();
    columns = std::max<std::size_t>(1, std::min(columns, s.solutions.size()));
    out << '|';
    for (std::size_t c = 0; c < columns; ++c) out << "   |";
    out << "\n|";
    for (std::size_t c = 0; c < columns; ++c) out << ":-:|";
    out << '\n';
    for (std::size_t i = 0; i < s.solutions.size(); i += columns) {
        out << '|';
        for (std::size_t c = 0; c < columns; ++c) {
            if (i + c < s.solutions.size()) {
                const Solution& sol = s.solutions[i + c];
                out << " (" << sol.x.get_str() << "," << sol.y.get_str() << ")<br>" << sol.value.get_str() << "<br>"
                    << factorization_pretty(sol.factorization);
                if (!sol.curve_label.empty()) {
                    out << "<br>" << sol.curve_label << "<br>"
                        << factorization_pretty(conductor_factorization(sol.conductor));
                }
                out << ' ';
            }
            out << '|';
        }
        out << '\n';
    }
    return out.str();
}

inline nlohmann::json factorization_json(const Factorization& f) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [p, e] : f.exponents) j[p.get_str()] = e;
    return j;
}

inline nlohmann::json render_json(const RunReport& r) {
    const SolutionSet& s = r.result;
    nlohmann::json j;
    j["input"]["cubic"] = {s.h.a.get_str(), s.h.b.get_str(), s.h.c.get_str(), s.h.d.get_str()};
    j["input"]["primes"] = nlohmann::json::array();
    for (const auto& p : s.S.primes()) j["input"]["primes"].push_back(p.get_str());
    j["mode"] = r.mode;
    if (r.height) j["height"] = r.height->get_str();
    j["discriminant"] = cubic_discriminant(s.h).get_str();
    j["nmax"] = s.nmax.get_str();
    j["curves_considered"] = s.curves_considered;
    if (r.database) {
        j["database"] = {{"path", r.database->path},
                         {"max_conductor", std::to_string(r.database->max_conductor)},
                         {"coverage", r.database->coverage},
                         {"records", r.database->records},
                         {"checksum", "fnv1a64:" + r.database->checksum}};
    }
    j["seconds"] = r.seconds;
    j["solutions"] = nlohmann::json::array();
    for (const auto& sol : s.solutions) {
        nlohmann::json row;
        row["x"] = sol.x.get_str();
        row["y"] = sol.y.get_str();
        row["value"] = sol.value.get_str();
        row["sign"] = sol.factorization.sign;
        row["factorization"] = factorization_json(sol.factorization);
        if (sol.curve_label.empty()) {
            row["curve"] = nullptr;
            row["conductor_factorization"] = nullptr;
        } else {
            row["curve"] = sol.curve_label;
            row["conductor"] = std::to_string(sol.conductor);
            row["conductor_factorization"] = factorization_json(conductor_factorization(sol.conductor));
            row["witnesses"] = sol.witnesses;
        }
        j["solutions"].push_back(std::move(row));
    }
    return j;
}

inline std::string render_csv(const RunReport& r) {
    std::ostringstream out;
    out << "x,y,value,factorization,curve,conductor,conductor_factorization\n";
    for (const auto& sol : r.result.solutions) {
        out << sol.x.get_str() << ',' << sol.y.get_str() << ',' << sol.value.get_str() << ','
            << factorization_ascii(sol.factorization) << ',' << sol.curve_label << ',';
        if (!sol.curve_label.empty()) {
            out << sol.conductor << ',' << factorization_ascii(conductor_factorization(sol.conductor));
        } else {
            out << ',';
        }
        out << '\n';
    }
    return out.str();
}

inline std::string render_stats_csv(const std::vector<StatsRow>& rows) {
    std::ostringstream out;
    out << "p,count,m,curves,nmax,mean_1_mod_4,mean_3_mod_4\n";
    auto mean = [](const std::optional<double>& v) {
        if (!v) return std::string();
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f", *v);
        return std::string(buf);
    };
    for (const auto& row : rows) {
        out << row.p.get_str() << ',';
        if (row.db_insufficient()) {
            out << "db-insufficient,,";
        } else {
            out << *row.count << ',' << (row.m ? std::to_string(*row.m) : "") << ',' << row.curves;
        }
        out << ',' << row.nmax.get_str() << ',' << mean(row.mean_1_mod_4) << ',' << mean(row.mean_3_mod_4) << '\n';
    }
    return out.str();
}

}  // namespace thue_mahler

#endif  // THUE_MAHLER_REPORT_HPP
