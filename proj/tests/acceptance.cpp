// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. argv[1] may name the CLI binary for the process-level determinism
// check.

#include "lgc/analysis.hpp"
#include "lgc/field_io.hpp"
#include "lgc/holography.hpp"
#include "lgc/states.hpp"
#include "lgc/verify.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

using namespace lgc;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int criterion, const std::string& label, bool pass, const std::string& detail) {
    if (!pass)
        ++g_failures;
    std::printf("%s  %2d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion, label.c_str(),
                detail.c_str());
    std::fflush(stdout);
}

struct RowStats {
    size_t total = 0;
    size_t failed = 0;
    std::string first_failure;
};

RowStats summarize(const std::vector<ReportRow>& rows) {
    RowStats s;
    s.total = rows.size();
    for (const ReportRow& r : rows)
        if (!r.pass) {
            ++s.failed;
            if (s.first_failure.empty())
                s.first_failure = r.family + " " + r.parameters + " " + r.metric + " value="
                                  + std::to_string(r.value) + " ref="
                                  + std::to_string(r.reference);
        }
    return s;
}

void run_rows(int criterion, const std::string& label, std::vector<ReportRow> (*fn)(),
              double time_budget = 0.0) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const RowStats s = summarize(fn());
        const double dt = seconds_since(t0);
        char detail[256];
        std::snprintf(detail, sizeof detail, "%zu/%zu rows, %.1f s%s", s.total - s.failed,
                      s.total, dt,
                      s.first_failure.empty() ? "" : ("; first: " + s.first_failure).c_str());
        bool pass = s.failed == 0;
        if (time_budget > 0.0 && dt > time_budget)
            pass = false;
        report(criterion, label, pass, detail);
    } catch (const std::exception& e) {
        report(criterion, label, false, std::string("exception: ") + e.what());
    }
}

std::vector<char> slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

void criterion_determinism(const char* cli_path) {
    try {
        bool pass = true;
        std::string detail = "in-process render x2 bit-identical";
        const fs::path base = fs::temp_directory_path() / "lgc_acceptance";
        fs::remove_all(base);
        fs::create_directories(base);

        StateSpec s{Family::Su11GPSub, Sign::Plus, 0, 0.75, 1, {1.0, 0.5 * M_PI}, {}, 1e-8};
        const GridSpec g{256, 8.0};
        write_field(render_state(s, g), base / "a.cfld");
        write_field(render_state(s, g), base / "b.cfld");
        pass = slurp(base / "a.cfld") == slurp(base / "b.cfld");

        if (cli_path && fs::exists(cli_path)) {
            const std::string quiet = " > /dev/null 2>&1";
            const std::string args = " render --family su11bgsub --k 0.25 --n 1 --zeta 1"
                                     " --theta 0.7 --grid-n 128 --out ";
            const std::string run1 = std::string(cli_path) + args + (base / "r1").string()
                                     + quiet;
            const std::string run2 = std::string(cli_path) + args + (base / "r2").string()
                                     + quiet;
            if (std::system(run1.c_str()) != 0 || std::system(run2.c_str()) != 0) {
                pass = false;
                detail = "cli render run failed";
            } else {
                const auto f1 = slurp(base / "r1" / "field.cfld");
                const auto f2 = slurp(base / "r2" / "field.cfld");
                pass = pass && !f1.empty() && f1 == f2;
                detail += "; cli render x2 bit-identical";
            }
        }
        fs::remove_all(base);
        report(11, "determinism: repeated runs produce bit-identical CFLD1", pass, detail);
    } catch (const std::exception& e) {
        report(11, "determinism", false, std::string("exception: ") + e.what());
    }
}

} // namespace

int main(int argc, char** argv) {
    const char* cli_path = argc > 1 ? argv[1] : nullptr;
    std::printf("acceptance: special-function, state-family and holography criteria\n");

    run_rows(1, "special functions match their series oracles at 1e-10", &verify_specfun, 5.0);

    {
        const auto t0 = std::chrono::steady_clock::now();
        try {
            const RowStats s = summarize(verify_norms(1024));
            const double dt = seconds_since(t0);
            char detail[256];
            std::snprintf(detail, sizeof detail, "%zu/%zu norms on 1024^2, %.1f s%s",
                          s.total - s.failed, s.total, dt,
                          s.first_failure.empty() ? ""
                                                  : ("; first: " + s.first_failure).c_str());
            report(2, "normalization lattice within 1e-4 (1e-5 series families)",
                   s.failed == 0 && dt < 60.0, detail);
        } catch (const std::exception& e) {
            report(2, "normalization lattice", false, std::string("exception: ") + e.what());
        }
    }

    run_rows(3, "radial displacement matches quadrature within 0.5%",
             +[] { return verify_displacement(0.0); });
    run_rows(4, "waist law <r^2> = 2k sigma^2 within 0.5% plus exact identities",
             &verify_waist);
    run_rows(5, "zero-parameter limits reduce to basis modes at 1e-10", &verify_limits);
    run_rows(6, "rotation invariants at 1e-9 with pinned rates", &verify_rotation);
    run_rows(7, "topological charges equal l and (2k-1)", &verify_vortex);
    run_rows(8, "Bessel-Gauss ring radius smaller at theta=pi than theta=0", &verify_bg_ring);

    {
        const auto t0 = std::chrono::steady_clock::now();
        try {
            const RowStats s = summarize(verify_pipeline(512));
            const double dt = seconds_since(t0);
            char detail[256];
            std::snprintf(detail, sizeof detail, "%zu/%zu thresholds, %.1f s total%s",
                          s.total - s.failed, s.total, dt,
                          s.first_failure.empty() ? ""
                                                  : ("; first: " + s.first_failure).c_str());
            report(9, "methods pipeline: correlation > 0.99, rms phase < 0.05 rad",
                   s.failed == 0 && dt < 90.0, detail);
        } catch (const std::exception& e) {
            report(9, "methods pipeline", false, std::string("exception: ") + e.what());
        }
    }

    run_rows(10, "four-frame formula exact and affine invariant", &verify_four_frame);
    criterion_determinism(cli_path);

    if (g_failures == 0)
        std::printf("acceptance: all criteria pass\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
