// Exercises the CLI binary end to end: output contracts and exit codes.
// Usage: test_cli <path-to-arctan-dioph>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

namespace {

int failures = 0;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        std::cerr << "popen failed: " << cmd << '\n';
        std::exit(1);
    }
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.output.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAIL: " << what << '\n';
    }
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: test_cli <binary>\n";
        return 1;
    }
    const std::string bin = argv[1];
    const std::string devnull = " 2>/dev/null";

    auto solve = run(bin + " solve --k 2 --l 1 --format plain");
    expect(solve.exit_code == 0, "solve exit 0");
    expect(contains(solve.output,
                    "arctan(1/3) + arctan(1/7) = arctan(1/2)\n"),
           "solve k=2 l=1 contains the motivating identity");
    expect(contains(solve.output,
                    "arctan(1/7) + arctan(1/3) = arctan(1/2)\n"),
           "solve k=2 l=1 contains the swapped identity");

    auto bad_verify = run(bin + " verify --x 11 --y 4 --k 3 --l 1 --format plain");
    expect(bad_verify.exit_code == 1, "verify false exits 1");
    expect(contains(bad_verify.output, "holds: false"), "verify reports false");
    expect(contains(bad_verify.output, "15/43"), "verify reports lhs 15/43");

    // Redirected output defaults to json.
    auto bad_verify_json = run(bin + " verify --x 11 --y 4 --k 3 --l 1");
    expect(contains(bad_verify_json.output, "\"holds\":false"),
           "verify defaults to json when piped");

    auto good_verify = run(bin + " verify --x 13 --y 4 --k 3 --l 1");
    expect(good_verify.exit_code == 0, "verify true exits 0");

    auto noncoprime = run(bin + " solve --k 3 --l 2" + devnull);
    expect(noncoprime.exit_code == 3, "NotCoprime exits 3");

    auto usage = run(bin + " solve --k 2" + devnull);
    expect(usage.exit_code == 2, "missing --l exits 2");
    auto badnum = run(bin + " solve --k 2x --l 1" + devnull);
    expect(badnum.exit_code == 2, "non-numeric --k exits 2");
    auto nocmd = run(bin + devnull);
    expect(nocmd.exit_code == 2, "missing subcommand exits 2");

    // Factorization budget exhaustion: a semiprime past the trial-division
    // bound with a zero-millisecond budget.
    // 1000036000099 = 1000003 * 1000033.
    auto starved = run("ARCTAN_DIOPH_EFFORT_MS=0 " + bin +
                       " factor --n 1000036000099 --effort-iters 1" + devnull);
    expect(starved.exit_code == 4, "starved factorization exits 4");

    auto factor = run(bin + " factor --n 50 --format plain");
    expect(factor.exit_code == 0, "factor exit 0");
    expect(contains(factor.output, "50 = 2 * 5^2"), "factor 50 rendering");

    auto listing = run(bin + " listing --format plain");
    expect(listing.exit_code == 0, "listing exit 0");
    expect(contains(listing.output,
                    "arctan(1/13) + arctan(1/4) = arctan(1/3)\n"),
           "listing contains the corrected item");
    expect(contains(listing.output, "note: corrected"),
           "listing carries the correction note");

    auto oracle = run(bin + " oracle --k 3 --l 1");
    expect(oracle.exit_code == 0 && contains(oracle.output, "agree"),
           "oracle agrees for k=3 l=1");
    auto oracle_list = run(bin + " oracle --k 5 --l 3 --list");
    expect(contains(oracle_list.output, "44 17"),
           "oracle --list includes (44, 17)");

    // json output is byte-identical across runs.
    auto j1 = run(bin + " solve --k 7 --l 1 --format json");
    auto j2 = run(bin + " solve --k 7 --l 1 --format json");
    expect(j1.exit_code == 0 && j1.output == j2.output,
           "json solve output deterministic");
    expect(contains(j1.output, "\"count\":6"), "solve k=7 has 6 solutions");

    auto tmp = std::filesystem::temp_directory_path() / "cli_sweep_test.jsonl";
    auto sweep = run(bin + " sweep --k-min 1 --k-max 5 --l-min 1 --l-max 2 " +
                     "--out " + tmp.string() + devnull);
    expect(sweep.exit_code == 0, "sweep exit 0");
    expect(std::filesystem::exists(tmp), "sweep wrote the catalog");
    std::filesystem::remove(tmp);

    if (failures == 0) {
        std::cout << "test_cli: all checks passed\n";
        return 0;
    }
    std::cerr << "test_cli: " << failures << " failures\n";
    return 1;
}
