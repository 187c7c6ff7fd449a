// Command-line front end: solve, verify, oracle, sweep, listing, factor.
//
// Exit codes: 0 success, 1 verification false / oracle disagreement,
// 2 usage error, 3 not coprime, 4 factorization incomplete.

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "arctan_dioph/catalog.hpp"
#include "arctan_dioph/factorization.hpp"
#include "arctan_dioph/oracle.hpp"
#include "arctan_dioph/solver.hpp"

namespace ad = arctan_dioph;
using nlohmann::ordered_json;

namespace {

ad::Natural parse_natural(const std::string& s, const char* flag) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw CLI::ValidationError(std::string(flag) +
                                   ": expected a non-negative integer, got '" +
                                   s + "'");
    return ad::Natural(s);
}

ad::EffortLimits effort_from(std::optional<std::uint64_t> ms_flag,
                             std::optional<std::uint64_t> iter_flag) {
    ad::EffortLimits limits;
    if (const char* env = std::getenv("ARCTAN_DIOPH_EFFORT_MS"))
        limits.time_budget = std::chrono::milliseconds(std::strtoull(env, nullptr, 10));
    if (ms_flag) limits.time_budget = std::chrono::milliseconds(*ms_flag);
    if (iter_flag) limits.max_iterations = *iter_flag;
    return limits;
}

std::string default_format() { return isatty(STDOUT_FILENO) ? "plain" : "json"; }

ordered_json solution_json(const ad::Solution& s) {
    ordered_json j;
    j["d"] = s.d.str();
    j["x"] = s.x.str();
    j["y"] = s.y.str();
    j["v"] = s.v.str();
    return j;
}

void print_solution_set(const ad::SolutionSet& set, const std::string& format,
                        std::ostream& out) {
    if (format == "json") {
        ordered_json j;
        j["k"] = set.instance.k.str();
        j["l"] = set.instance.l.str();
        j["n"] = set.instance.n.str();
        j["count"] = set.count();
        j["solutions"] = ordered_json::array();
        for (const ad::Solution& s : set.solutions)
            j["solutions"].push_back(solution_json(s));
        out << j.dump() << '\n';
        return;
    }
    if (format == "csv") {
        out << "k,l,d,x,y,n\n";
        for (const ad::Solution& s : set.solutions)
            out << set.instance.k << ',' << set.instance.l << ',' << s.d << ','
                << s.x << ',' << s.y << ',' << set.instance.n << '\n';
        return;
    }
    const auto style =
        format == "latex" ? ad::RenderStyle::latex : ad::RenderStyle::plain;
    for (const ad::Solution& s : set.solutions) {
        ad::IdentityRecord rec{set.instance.k, set.instance.l, s.d,
                               s.x,            s.y,            set.instance.n,
                               true,           {}};
        out << ad::render_identity(rec, style) << '\n';
    }
}

const char* failure_name(ad::VerifyFailure f) {
    switch (f) {
    case ad::VerifyFailure::x_out_of_range: return "x_out_of_range";
    case ad::VerifyFailure::y_out_of_range: return "y_out_of_range";
    case ad::VerifyFailure::k_out_of_range: return "k_out_of_range";
    case ad::VerifyFailure::sum_not_acute: return "sum_not_acute";
    case ad::VerifyFailure::tangent_mismatch: return "tangent_mismatch";
    }
    return "unknown";
}

std::string rational_str(const ad::Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver and catalog for arctan(1/x) + arctan(l/y) = "
                 "arctan(1/k) over positive integers"};
    app.require_subcommand(1);

    std::string k_s, l_s, x_s, y_s, n_s;
    std::string k_min_s, k_max_s, l_min_s = "1", l_max_s = "1";
    std::string max_x_s, max_y_s;
    std::string format = default_format();
    std::string out_path;
    std::optional<std::uint64_t> effort_ms, effort_iters;
    bool oracle_list = false, oracle_unfiltered = false;

    auto add_effort = [&](CLI::App* cmd) {
        cmd->add_option("--effort-ms", effort_ms,
                        "Factorization wall-clock budget in milliseconds");
        cmd->add_option("--effort-iters", effort_iters,
                        "Factorization iteration budget");
    };
    auto add_format = [&](CLI::App* cmd, const std::string& choices) {
        cmd->add_option("--format", format, "Output format: " + choices);
    };

    CLI::App* solve = app.add_subcommand("solve", "All solutions for (k, l)");
    solve->add_option("--k", k_s)->required();
    solve->add_option("--l", l_s)->required();
    add_format(solve, "plain|json|latex|csv");
    solve->add_option("--out", out_path, "Write output to a file");
    add_effort(solve);

    CLI::App* verify =
        app.add_subcommand("verify", "Exact check of one identity");
    verify->add_option("--x", x_s)->required();
    verify->add_option("--y", y_s)->required();
    verify->add_option("--k", k_s)->required();
    verify->add_option("--l", l_s)->required();
    add_format(verify, "plain|json");

    CLI::App* oracle = app.add_subcommand(
        "oracle", "Brute-force cross-check against the divisor formula");
    oracle->add_option("--k", k_s)->required();
    oracle->add_option("--l", l_s)->required();
    oracle->add_option("--max-x", max_x_s, "Search bound for x");
    oracle->add_option("--max-y", max_y_s, "Search bound for y");
    oracle->add_flag("--list", oracle_list, "Print the brute-force pairs");
    oracle->add_flag(
        "--unfiltered", oracle_unfiltered,
        "List raw equation solutions without the gcd(l, y) = 1 filter "
        "(outside the theorem's statement); implies --list");
    add_effort(oracle);

    CLI::App* sweep = app.add_subcommand("sweep", "Catalog a (k, l) range");
    sweep->add_option("--k-min", k_min_s)->required();
    sweep->add_option("--k-max", k_max_s)->required();
    sweep->add_option("--l-min", l_min_s);
    sweep->add_option("--l-max", l_max_s);
    sweep->add_option("--out", out_path, "Catalog file to write")->required();
    add_effort(sweep);

    CLI::App* listing =
        app.add_subcommand("listing", "The published nine-identity listing");
    add_format(listing, "plain|json|latex");

    CLI::App* factor = app.add_subcommand("factor", "Prime factorization");
    factor->add_option("--n", n_s)->required();
    add_format(factor, "plain|json");
    add_effort(factor);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        ad::EffortLimits limits = effort_from(effort_ms, effort_iters);

        std::ofstream file_out;
        std::ostream* out = &std::cout;
        if (!out_path.empty() && !sweep->parsed()) {
            file_out.open(out_path, std::ios::binary);
            if (!file_out) {
                std::cerr << "error: cannot open " << out_path << '\n';
                return 2;
            }
            out = &file_out;
        }

        if (solve->parsed()) {
            auto inst = ad::make_instance(parse_natural(k_s, "--k"),
                                          parse_natural(l_s, "--l"));
            print_solution_set(ad::solve_all(inst, limits), format, *out);
            return 0;
        }

        if (verify->parsed()) {
            auto rep = ad::verify_exact(
                parse_natural(x_s, "--x"), parse_natural(y_s, "--y"),
                parse_natural(k_s, "--k"), parse_natural(l_s, "--l"));
            if (format == "json") {
                ordered_json j;
                j["holds"] = rep.holds;
                j["lhs_tangent"] = rational_str(rep.lhs_tangent);
                j["rhs_tangent"] = rational_str(rep.rhs_tangent);
                j["domain_ok"] = rep.domain_ok;
                j["failure_reason"] =
                    rep.failure_reason
                        ? ordered_json(failure_name(*rep.failure_reason))
                        : ordered_json(nullptr);
                *out << j.dump() << '\n';
            } else {
                *out << "holds: " << (rep.holds ? "true" : "false") << '\n'
                     << "lhs_tangent: " << rational_str(rep.lhs_tangent) << '\n'
                     << "rhs_tangent: " << rational_str(rep.rhs_tangent) << '\n'
                     << "domain_ok: " << (rep.domain_ok ? "true" : "false")
                     << '\n';
                if (rep.failure_reason)
                    *out << "failure_reason: "
                         << failure_name(*rep.failure_reason) << '\n';
            }
            return rep.holds ? 0 : 1;
        }

        if (oracle->parsed()) {
            ad::Natural k = parse_natural(k_s, "--k");
            ad::Natural l = parse_natural(l_s, "--l");
            ad::Natural n = k * k + 1;
            ad::SearchBound bound{k + l * n, k * l + n};
            if (!max_x_s.empty()) bound.max_x = parse_natural(max_x_s, "--max-x");
            if (!max_y_s.empty()) bound.max_y = parse_natural(max_y_s, "--max-y");
            if (oracle_list || oracle_unfiltered) {
                auto pairs = ad::brute_force_solutions(k, l, bound,
                                                       !oracle_unfiltered);
                for (const auto& [x, y] : pairs)
                    *out << x << ' ' << y << '\n';
                return 0;
            }
            auto inst = ad::make_instance(k, l);
            bool ok = ad::cross_check(inst, limits);
            *out << (ok ? "agree" : "disagree") << '\n';
            return ok ? 0 : 1;
        }

        if (sweep->parsed()) {
            ad::SweepStats stats;
            auto records = ad::sweep(parse_natural(k_min_s, "--k-min"),
                                     parse_natural(k_max_s, "--k-max"),
                                     parse_natural(l_min_s, "--l-min"),
                                     parse_natural(l_max_s, "--l-max"), limits,
                                     &stats);
            std::size_t count = ad::write_catalog(out_path, records);
            std::cerr << "wrote " << count << " records to " << out_path
                      << " (" << stats.instances << " instances, "
                      << stats.skipped_not_coprime << " skipped not coprime, "
                      << stats.skipped_incomplete
                      << " skipped incomplete)\n";
            return 0;
        }

        if (listing->parsed()) {
            for (const ad::IdentityRecord& rec : ad::section5_listing()) {
                if (format == "json") {
                    *out << ad::render_identity(rec, ad::RenderStyle::json)
                         << '\n';
                    continue;
                }
                *out << ad::render_identity(rec, format == "latex"
                                                     ? ad::RenderStyle::latex
                                                     : ad::RenderStyle::plain)
                     << '\n';
                for (const std::string& note : rec.annotations)
                    *out << "  note: " << note << '\n';
            }
            return 0;
        }

        if (factor->parsed()) {
            ad::Natural n = parse_natural(n_s, "--n");
            if (n < 1) {
                std::cerr << "error: --n must be >= 1\n";
                return 2;
            }
            ad::Factorization f = ad::factorize(n, limits);
            if (format == "json") {
                ordered_json j;
                j["n"] = f.n.str();
                j["factors"] = ordered_json::array();
                for (const auto& [p, e] : f.factors)
                    j["factors"].push_back({{"prime", p.str()},
                                            {"exponent", e}});
                j["divisor_count"] = ad::divisor_count(f).str();
                *out << j.dump() << '\n';
            } else {
                *out << f.n << " =";
                if (f.factors.empty()) *out << " 1";
                bool first = true;
                for (const auto& [p, e] : f.factors) {
                    *out << (first ? " " : " * ") << p;
                    if (e > 1) *out << '^' << e;
                    first = false;
                }
                *out << '\n';
            }
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ad::NotCoprime& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const ad::FactorizationIncomplete& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
