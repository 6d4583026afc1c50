// End-to-end checks, one line per criterion. Exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "adiabatic/evolution.hpp"
#include "adiabatic/experiments.hpp"
#include "adiabatic/schedule.hpp"
#include "adiabatic/spectrum.hpp"
#include "cli/commands.hpp"
#include "csv.hpp"
#include "oracles.hpp"

using namespace adiabatic;
namespace fs = std::filesystem;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
    void note(const std::string& what) {
        if (pass) detail += (detail.empty() ? "" : "; ") + what;
    }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

Verdict minimum_gap() {
    Verdict v;
    double worst_closed = 0.0;
    for (std::uint64_t n = 2; n <= 4096; n *= 2) {
        worst_closed = std::max(worst_closed, std::abs(gap(0.5, n) - 1.0 / std::sqrt(double(n))));
    }
    v.require(worst_closed < 1e-12, "gap(0.5, N) off by " + num(worst_closed));

    double worst_dense = 0.0;
    for (std::uint64_t n = 2; n <= 64; n *= 2) {
        for (int k = 0; k <= 20; ++k) {
            const double s = k / 20.0;
            const Eigen::VectorXd w = oracle::diagonalize(n, s).eigenvalues();
            worst_dense = std::max(worst_dense, std::abs(gap(s, n) - (w(1) - w(0))));
        }
    }
    v.require(worst_dense < 1e-11, "dense mismatch " + num(worst_dense));
    v.note("closed form err " + num(worst_closed) + ", dense err " + num(worst_dense));
    return v;
}

Verdict schedule_closed_form() {
    Verdict v;
    double worst = 0.0;
    for (std::uint64_t n : {2u, 64u, 1024u}) {
        for (double eps : {0.2, 0.1, 0.02}) {
            const double ref = oracle::local_time_by_quadrature(n, eps);
            worst = std::max(worst, std::abs(local_total_time(n, eps) - ref) / ref);
        }
    }
    v.require(worst < 1e-8, "relative quadrature mismatch " + num(worst));

    double prev = 0.0;
    double last = 0.0;
    for (std::uint64_t n = 64; n <= (1u << 20); n *= 2) {
        const double ratio = local_total_time(n, 0.1) * 0.2 / (M_PI * std::sqrt(double(n)));
        v.require(ratio >= 0.9 && ratio <= 1.0, "ratio " + num(ratio) + " at N=" + std::to_string(n));
        v.require(ratio > prev, "ratio not increasing at N=" + std::to_string(n));
        prev = ratio;
        last = ratio;
    }
    v.note("quadrature rel err " + num(worst) + ", ratio at 2^20 " + num(last));
    return v;
}

Verdict adiabatic_success() {
    Verdict v;
    std::string probs;
    for (std::uint64_t n : {16u, 64u, 256u}) {
        const double p = evolve(SearchHamiltonian::from_dimension(n), local_adiabatic_schedule(n, 0.05)).success_probability;
        v.require(p >= 0.99, "N=" + std::to_string(n) + " success " + num(p));
        probs += (probs.empty() ? "" : ", ") + num(p);
    }
    double prev = 0.0;
    const auto h = SearchHamiltonian::from_dimension(64);
    for (double eps : {0.2, 0.1, 0.05, 0.02}) {
        const double p = evolve(h, local_adiabatic_schedule(64, eps)).success_probability;
        v.require(p > prev, "not increasing at eps=" + num(eps));
        prev = p;
    }
    v.note("P at eps=0.05: " + probs);
    return v;
}

Verdict scaling_separation() {
    Verdict v;
    const std::vector<std::uint64_t> ns{16, 32, 64, 128, 256, 512};
    const IntegratorConfig cfg;
    const auto local = scaling_sweep(ns, ScheduleFamily::LocalAdiabatic, 0.9, cfg);
    const auto linear = scaling_sweep(ns, ScheduleFamily::Linear, 0.9, cfg);
    v.require(std::abs(local.exponent - 0.5) <= 0.05, "local exponent " + num(local.exponent));
    v.require(std::abs(linear.exponent - 1.0) <= 0.05, "linear exponent " + num(linear.exponent));

    MinimalTimeOptions full;
    full.engine = Engine::Full;
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        for (const auto* report : {&local, &linear}) {
            const double t = minimal_time(ns[i], report->family, 0.9, cfg, full);
            worst = std::max(worst, std::abs(t - report->points[i].minimal_time) / t);
        }
    }
    v.require(worst < 2e-3, "full-engine spot check differs by " + num(worst));
    v.note("exponents " + num(local.exponent) + " / " + num(linear.exponent) + ", full vs reduced " + num(worst));
    return v;
}

Verdict engine_equivalence() {
    Verdict v;
    double worst = 0.0;
    double leak = 0.0;
    for (std::uint64_t n : {4u, 16u, 64u, 256u}) {
        const auto h = SearchHamiltonian::from_dimension(n, n / 3);
        const auto sch = local_adiabatic_schedule(n, 0.1);
        const auto full = evolve(h, sch);
        const auto red = evolve_reduced(h, sch);
        worst = std::max(worst, std::abs(full.success_probability - red.success_probability));
        leak = std::max(leak, full.leakage_max);
    }
    v.require(worst < 1e-6, "success differs by " + num(worst));
    v.require(leak < 1e-10, "leakage " + num(leak));
    v.note("max diff " + num(worst) + ", leakage " + num(leak));
    return v;
}

Verdict distinguishability_bound() {
    Verdict v;
    const IntegratorConfig cfg;
    for (std::uint64_t n : {4u, 8u, 16u}) {
        const auto r = optimality_check(n, local_adiabatic_schedule(n, 0.1), cfg);
        const std::string tag = "N=" + std::to_string(n);
        v.require(r.distinguishability_sum <= r.bound && r.margin > 0.0, tag + " margin " + num(r.margin));
        const double measured = r.min_pairwise_distinguishability;
        const double needed = measured / 4.0 * (double(n) - 1.0) / std::sqrt(double(n));
        v.require(r.total_time >= needed, tag + " T below the bound");
        v.require(r.time_bound_consistent, tag + " inconsistent at eps_dist " + num(r.eps_dist));
        v.note(tag + " D=" + num(r.distinguishability_sum) + " bound=" + num(r.bound));
    }
    return v;
}

Verdict schedule_inversion() {
    Verdict v;
    double worst = 0.0;
    for (std::uint64_t n : {2u, 64u, 1u << 20}) {
        for (double eps : {0.2, 0.1, 0.02}) {
            for (int k = 0; k <= 1000; ++k) {
                const double s = k / 1000.0;
                worst = std::max(worst, std::abs(local_s_of_time(local_time_of_s(s, n, eps), n, eps) - s));
            }
        }
    }
    v.require(worst < 1e-10, "round trip error " + num(worst));
    v.note("round trip error " + num(worst));
    return v;
}

Verdict figure_reproduction() {
    Verdict v;
    std::random_device rd;
    const fs::path dir = fs::temp_directory_path() / ("adiabatic-accept-" + std::to_string(rd()));
    fs::create_directories(dir);
    std::ostringstream out, err;
    const int a = cli::run({"spectrum", "--n", "64", "--out", dir.string()}, out, err);
    const int b = cli::run({"schedule", "--n", "64", "--out", dir.string()}, out, err);
    v.require(a == 0 && b == 0, "cli failed: " + err.str());
    if (a == 0 && b == 0) {
        const fs::path golden = ADIABATIC_GOLDEN_DIR;
        const auto spectrum = csv::read(dir / "spectrum.csv");
        const auto sched = csv::read(dir / "schedule.csv");
        const double d1 = csv::max_scaled_difference(spectrum, csv::read(golden / "spectrum_n64.csv"));
        const double d2 = csv::max_scaled_difference(sched, csv::read(golden / "schedule_n64_eps0.1.csv"));
        v.require(d1 < 1e-12, "spectrum differs by " + num(d1));
        v.require(d2 < 1e-12, "schedule differs by " + num(d2));

        // Avoided crossing at s = 0.5 and slowest sweep at t = T/2.
        std::size_t gap_argmin = 0;
        for (std::size_t i = 0; i < spectrum.rows.size(); ++i) {
            if (spectrum.rows[i][4] < spectrum.rows[gap_argmin][4]) gap_argmin = i;
        }
        v.require(spectrum.rows[gap_argmin][0] == 0.5, "gap minimum not at s=0.5");
        std::size_t rate_argmin = 0;
        for (std::size_t i = 0; i < sched.rows.size(); ++i) {
            if (sched.rows[i][2] < sched.rows[rate_argmin][2]) rate_argmin = i;
        }
        v.require(rate_argmin == sched.rows.size() / 2, "rate minimum not at T/2");
        v.note("max diff " + num(std::max(d1, d2)));
    }
    fs::remove_all(dir);
    return v;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"minimum gap", minimum_gap},
        {"schedule closed form", schedule_closed_form},
        {"adiabatic success", adiabatic_success},
        {"scaling separation", scaling_separation},
        {"engine equivalence", engine_equivalence},
        {"distinguishability bound", distinguishability_bound},
        {"schedule inversion", schedule_inversion},
        {"figure reproduction", figure_reproduction},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += v.pass ? 0 : 1;
        std::printf("[%zu] %-26s %s  (%s; %.2fs)\n", i + 1, criteria[i].first.c_str(), v.pass ? "PASS" : "FAIL",
                    v.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
    return failures;
}
