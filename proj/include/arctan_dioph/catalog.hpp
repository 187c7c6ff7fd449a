#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "arctan_dioph/natural.hpp"
#include "arctan_dioph/oracle.hpp"
#include "arctan_dioph/solver.hpp"

namespace arctan_dioph {

// One rendered/serializable arctangent identity with its provenance (k, l, d).
struct IdentityRecord {
    Natural k;
    Natural l;
    Natural d;
    Natural x;
    Natural y;
    Natural n;  // k^2 + 1
    bool verified = false;
    std::vector<std::string> annotations;

    friend bool operator==(const IdentityRecord&,
                           const IdentityRecord&) = default;
};

enum class RenderStyle { plain, latex, json };

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

class DuplicateRecord : public std::runtime_error {
public:
    DuplicateRecord(const Natural& k, const Natural& l, const Natural& d)
        : std::runtime_error("duplicate record (k=" + k.str() + ", l=" +
                             l.str() + ", d=" + d.str() + ")") {}
};

class MalformedLine : public std::runtime_error {
public:
    MalformedLine(std::size_t line, const std::string& why)
        : std::runtime_error("malformed catalog line " + std::to_string(line) +
                             ": " + why),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

namespace detail {

// Stable key order; Naturals as decimal strings so values never truncate.
inline nlohmann::ordered_json record_to_json(const IdentityRecord& rec) {
    nlohmann::ordered_json j;
    j["k"] = rec.k.str();
    j["l"] = rec.l.str();
    j["d"] = rec.d.str();
    j["x"] = rec.x.str();
    j["y"] = rec.y.str();
    j["n"] = rec.n.str();
    j["verified"] = rec.verified;
    j["annotations"] = rec.annotations;
    return j;
}

inline Natural parse_natural(const nlohmann::ordered_json& j,
                             const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw std::invalid_argument(std::string("missing key ") + key);
    return Natural(j[key].get<std::string>());
}

inline IdentityRecord record_from_json(const nlohmann::ordered_json& j) {
    IdentityRecord rec;
    rec.k = parse_natural(j, "k");
    rec.l = parse_natural(j, "l");
    rec.d = parse_natural(j, "d");
    rec.x = parse_natural(j, "x");
    rec.y = parse_natural(j, "y");
    rec.n = parse_natural(j, "n");
    if (!j.contains("verified") || !j["verified"].is_boolean())
        throw std::invalid_argument("missing key verified");
    rec.verified = j["verified"].get<bool>();
    if (!j.contains("annotations") || !j["annotations"].is_array())
        throw std::invalid_argument("missing key annotations");
    rec.annotations = j["annotations"].get<std::vector<std::string>>();
    return rec;
}

}  // namespace detail

// Builds the record for divisor d of k^2+1, exact-verified.
inline IdentityRecord make_record(const ProblemInstance& inst,
                                  const Natural& d) {
    Solution s = solution_for_divisor(inst, d);
    IdentityRecord rec{inst.k, inst.l, s.d, s.x, s.y, inst.n, false, {}};
    rec.verified = verify_exact(rec.x, rec.y, rec.k, rec.l).holds;
    return rec;
}

// plain: `arctan(1/X) + arctan(L/Y) = arctan(1/K)`, with `pi/4` for k = 1.
inline std::string render_identity(const IdentityRecord& rec,
                                   RenderStyle style = RenderStyle::plain) {
    switch (style) {
    case RenderStyle::plain: {
        std::string rhs =
            rec.k == 1 ? "pi/4" : "arctan(1/" + rec.k.str() + ")";
        return "arctan(1/" + rec.x.str() + ") + arctan(" + rec.l.str() + "/" +
               rec.y.str() + ") = " + rhs;
    }
    case RenderStyle::latex: {
        auto frac = [](const std::string& a, const std::string& b) {
            return "\\frac{" + a + "}{" + b + "}";
        };
        std::string rhs = rec.k == 1 ? frac("\\pi", "4")
                                     : "\\arctan" + frac("1", rec.k.str());
        return "\\arctan" + frac("1", rec.x.str()) + " + \\arctan" +
               frac(rec.l.str(), rec.y.str()) + " = " + rhs;
    }
    case RenderStyle::json:
        return detail::record_to_json(rec).dump();
    }
    return {};
}

// The seven concrete identities of the published listing (items 3-9),
// generated through the solver and verified. Item 5 is emitted in corrected
// form (x = 13); the printed value 11 fails the exact check, so the record
// carries an annotation instead of the misprint.
inline std::vector<IdentityRecord> section5_listing() {
    std::vector<IdentityRecord> out;
    auto add = [&](unsigned k, unsigned l, unsigned d) -> IdentityRecord& {
        out.push_back(make_record(make_instance(k, l), d));
        return out.back();
    };
    add(1, 1, 1);   // arctan(1/3) + arctan(1/2) = pi/4
    add(2, 1, 5);   // arctan(1/3) + arctan(1/7) = arctan(1/2)
    add(3, 1, 1).annotations.push_back(
        "corrected: source listing prints x=11, refuted by exact arithmetic");
    add(3, 1, 2);   // arctan(1/8) + arctan(1/5) = arctan(1/3)
    add(4, 2, 1);   // arctan(1/38) + arctan(2/9) = arctan(1/4)
    add(4, 2, 17);  // arctan(1/6) + arctan(2/25) = arctan(1/4)
    add(6, 1, 1);   // arctan(1/43) + arctan(1/7) = arctan(1/6)
    return out;
}

struct SweepStats {
    std::size_t instances = 0;
    std::size_t skipped_not_coprime = 0;
    std::size_t skipped_incomplete = 0;
};

// Every solve_all record for (k, l) in the inclusive ranges with
// gcd(l, k^2+1) = 1; ascending k, then l, then d. Non-coprime pairs and
// factorization failures are counted and skipped.
inline std::vector<IdentityRecord> sweep(const Natural& k_min,
                                         const Natural& k_max,
                                         const Natural& l_min,
                                         const Natural& l_max,
                                         const EffortLimits& limits = {},
                                         SweepStats* stats = nullptr) {
    if (k_min < 1 || k_min > k_max || l_min < 1 || l_min > l_max)
        throw std::invalid_argument("sweep: ranges must be non-empty, >= 1");
    SweepStats local;
    std::vector<IdentityRecord> out;
    for (Natural k = k_min; k <= k_max; ++k) {
        for (Natural l = l_min; l <= l_max; ++l) {
            ProblemInstance inst;
            try {
                inst = make_instance(k, l);
            } catch (const NotCoprime&) {
                ++local.skipped_not_coprime;
                continue;
            }
            try {
                for (const Natural& d : divisors(factorize(inst.n, limits)))
                    out.push_back(make_record(inst, d));
                ++local.instances;
            } catch (const FactorizationIncomplete&) {
                ++local.skipped_incomplete;
            }
        }
    }
    if (stats) *stats = local;
    return out;
}

// Line-delimited catalog: UTF-8, LF lines, one JSON object per line.
// Duplicate (k, l, d) triples are an error. Returns the record count.
inline std::size_t write_catalog(const std::filesystem::path& path,
                                 const std::vector<IdentityRecord>& records) {
    std::set<std::tuple<Natural, Natural, Natural>> seen;
    for (const IdentityRecord& rec : records)
        if (!seen.emplace(rec.k, rec.l, rec.d).second)
            throw DuplicateRecord(rec.k, rec.l, rec.d);

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    for (const IdentityRecord& rec : records)
        out << detail::record_to_json(rec).dump() << '\n';
    out.flush();
    if (!out) throw IoError("write failed: " + path.string());
    return records.size();
}

inline std::vector<IdentityRecord> read_catalog(
    const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path.string());
    std::vector<IdentityRecord> out;
    std::set<std::tuple<Natural, Natural, Natural>> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        try {
            auto j = nlohmann::ordered_json::parse(line);
            out.push_back(detail::record_from_json(j));
        } catch (const std::exception& e) {
            // A partial trailing line (no newline yet) is tolerated; it is
            // a write in progress, not corruption.
            if (in.eof()) break;
            throw MalformedLine(lineno, e.what());
        }
        const IdentityRecord& rec = out.back();
        if (!seen.emplace(rec.k, rec.l, rec.d).second)
            throw DuplicateRecord(rec.k, rec.l, rec.d);
    }
    return out;
}

}  // namespace arctan_dioph
