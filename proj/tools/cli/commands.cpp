#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>

#include "adiabatic/experiments.hpp"
#include "adiabatic/io.hpp"
#include "svg.hpp"

namespace adiabatic::cli {

namespace fs = std::filesystem;

nlohmann::json to_json(const RunConfig& c) {
    nlohmann::json j{
        {"command", c.command},
        {"n", c.n},
        {"marked", c.marked},
        {"seed", nullptr},
        {"eps", c.eps},
        {"schedule", c.schedule},
        {"time", nullptr},
        {"samples", c.samples},
        {"with_linear", c.with_linear},
        {"method", c.method},
        {"step", c.step},
        {"tol", c.tol},
        {"trajectory_samples", c.trajectory_samples},
        {"target", c.target},
        {"search_tol", c.search_tol},
        {"engine", c.engine},
        {"full_max", c.full_max},
        {"eps_dist", c.eps_dist},
        {"ns", c.ns},
        {"jobs", c.jobs},
        {"formats", c.formats},
        {"out", c.out},
    };
    if (c.seed) j["seed"] = *c.seed;
    if (c.time) j["time"] = *c.time;
    return j;
}

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string env_name(const std::string& flag) {
    std::string name = kEnvPrefix;
    for (char c : flag) name += c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return name;
}

template <class T>
CLI::Option* add(CLI::App* app, const std::string& flag, T& target, const std::string& help) {
    return app->add_option("--" + flag, target, help)->envname(env_name(flag))->capture_default_str();
}

// Outputs of one run: files are staged in memory and written together.
class Outputs {
public:
    Outputs(const RunConfig& cfg, std::ostream& log) : cfg_(cfg), log_(log) {}

    bool wants(const std::string& format) const {
        return std::find(cfg_.formats.begin(), cfg_.formats.end(), format) != cfg_.formats.end();
    }

    Comments comments() const {
        return {"adiabatic-search " + cfg_.command, "config: " + to_json(cfg_).dump()};
    }

    std::ofstream open(const std::string& name) {
        fs::create_directories(cfg_.out);
        const fs::path path = fs::path(cfg_.out) / name;
        std::ofstream os(path, std::ios::binary);
        if (!os) throw std::runtime_error("cannot write " + path.string());
        log_ << "wrote " << path.string() << '\n';
        return os;
    }

    void close(std::ofstream& os, const std::string& name) {
        os.flush();
        if (!os) throw std::runtime_error("failed writing " + name);
    }

    template <class Fn>
    void write(const std::string& name, Fn&& fn) {
        auto os = open(name);
        fn(os);
        close(os, name);
    }

    void write_json(const std::string& name, nlohmann::json body) {
        body["config"] = to_json(cfg_);
        write(name, [&](std::ostream& os) { os << body.dump(2) << '\n'; });
    }

private:
    const RunConfig& cfg_;
    std::ostream& log_;
};

IntegratorConfig integrator(const RunConfig& cfg) {
    IntegratorConfig ic;
    if (cfg.method == "rk4") {
        ic.method = IntegratorMethod::FixedStep;
    } else if (cfg.method == "adaptive") {
        ic.method = IntegratorMethod::Adaptive;
    } else {
        throw UsageError("--method must be rk4 or adaptive");
    }
    ic.step = cfg.step;
    ic.tolerance = cfg.tol;
    ic.sample_count = cfg.trajectory_samples;
    ic.validate();
    return ic;
}

ScheduleFamily family(const RunConfig& cfg) {
    if (cfg.schedule == "local") return ScheduleFamily::LocalAdiabatic;
    if (cfg.schedule == "linear") return ScheduleFamily::Linear;
    throw UsageError("--schedule must be local or linear");
}

SearchHamiltonian instance(const RunConfig& cfg) {
    auto h = SearchHamiltonian::from_dimension(cfg.n, 0);
    return h.with_marked(cfg.marked);
}

// Local: closed form at eps, or stretched to --time. Linear: --time or N / eps.
Schedule build_schedule(const RunConfig& cfg) {
    const auto fam = family(cfg);
    if (cfg.time) return family_schedule(fam, cfg.n, *cfg.time);
    if (fam == ScheduleFamily::LocalAdiabatic) return local_adiabatic_schedule(cfg.n, cfg.eps);
    return linear_schedule(global_adiabatic_time(cfg.n, cfg.eps));
}

std::vector<double> column(const auto& rows, auto member) {
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r.*member);
    return out;
}

void cmd_spectrum(const RunConfig& cfg, Outputs& outputs) {
    SearchHamiltonian::from_dimension(cfg.n);
    const auto trace = spectrum_trace(cfg.n, cfg.samples);

    if (outputs.wants("csv")) {
        outputs.write("spectrum.csv", [&](std::ostream& os) { write_spectrum_csv(os, trace, outputs.comments()); });
    }
    if (outputs.wants("json")) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& p : trace) {
            rows.push_back({{"s", p.s}, {"E0", p.E0}, {"E1", p.E1}, {"E2", p.E2}, {"gap", p.gap},
                            {"e2_multiplicity", p.e2_multiplicity}});
        }
        const auto mg = min_gap(cfg.n);
        outputs.write_json("spectrum.json", {{"points", rows}, {"s_star", mg.s_star}, {"g_min", mg.g_min}});
    }
    if (outputs.wants("svg")) {
        SvgPlot plot("Eigenvalues of H(s), N=" + std::to_string(cfg.n), "s", "E");
        const auto s = column(trace, &SpectrumPoint::s);
        plot.add({"E0", s, column(trace, &SpectrumPoint::E0), "#1f77b4"});
        plot.add({"E1", s, column(trace, &SpectrumPoint::E1), "#d62728"});
        if (cfg.n > 2) {
            plot.add({"E2 (x" + std::to_string(cfg.n - 2) + ")", s, column(trace, &SpectrumPoint::E2), "#2ca02c"});
        }
        outputs.write("spectrum.svg", [&](std::ostream& os) { plot.render(os); });
    }
}

void cmd_schedule(const RunConfig& cfg, Outputs& outputs) {
    SearchHamiltonian::from_dimension(cfg.n);
    const auto local = local_adiabatic_schedule(cfg.n, cfg.eps);
    const auto trace = sample_schedule(local, cfg.samples);
    const auto linear = sample_schedule(linear_schedule(local.total_time()), cfg.samples);

    if (outputs.wants("csv")) {
        outputs.write("schedule.csv", [&](std::ostream& os) { write_schedule_csv(os, trace, outputs.comments()); });
        if (cfg.with_linear) {
            outputs.write("schedule_linear.csv",
                          [&](std::ostream& os) { write_schedule_csv(os, linear, outputs.comments()); });
        }
    }
    if (outputs.wants("json")) {
        auto rows = [](const std::vector<ScheduleKnot>& v) {
            nlohmann::json a = nlohmann::json::array();
            for (const auto& k : v) a.push_back({{"t", k.t}, {"s", k.s}, {"rate", k.rate}});
            return a;
        };
        nlohmann::json body{{"total_time", local.total_time()}, {"local", rows(trace)}};
        if (cfg.with_linear) body["linear"] = rows(linear);
        outputs.write_json("schedule.json", body);
    }
    if (outputs.wants("svg")) {
        SvgPlot plot("Evolution function s(t), N=" + std::to_string(cfg.n), "t", "s");
        plot.add({"local adiabatic", column(trace, &ScheduleKnot::t), column(trace, &ScheduleKnot::s), "#1f77b4"});
        if (cfg.with_linear) {
            plot.add({"linear", column(linear, &ScheduleKnot::t), column(linear, &ScheduleKnot::s), "#7f7f7f"});
        }
        outputs.write("schedule.svg", [&](std::ostream& os) { plot.render(os); });
    }
}

Engine pick_engine(const RunConfig& cfg) {
    if (cfg.engine == "full") return Engine::Full;
    if (cfg.engine == "reduced") return Engine::Reduced;
    if (cfg.engine == "auto") return cfg.n <= cfg.full_max ? Engine::Full : Engine::Reduced;
    throw UsageError("--engine must be auto, full or reduced");
}

void cmd_evolve(const RunConfig& cfg, Outputs& outputs, std::ostream& err) {
    const auto h = instance(cfg);
    const auto schedule = build_schedule(cfg);
    const auto result = evolve_with(pick_engine(cfg), h, schedule, integrator(cfg));
    if (result.drift_flagged) {
        err << "warning: norm drift " << result.norm_drift_max << " exceeds threshold\n";
    }

    if (outputs.wants("csv")) {
        outputs.write("trajectory.csv",
                      [&](std::ostream& os) { write_trajectory_csv(os, result.trajectory, outputs.comments()); });
    }
    if (outputs.wants("json")) {
        auto body = summary_json(result);
        body["schedule"] = schedule.describe();
        body["marked"] = h.marked();
        outputs.write_json("evolve.json", body);
    }
    if (outputs.wants("svg")) {
        SvgPlot plot("Evolution, N=" + std::to_string(cfg.n), "t", "value");
        const auto t = column(result.trajectory, &TrajectorySample::t);
        plot.add({"s(t)", t, column(result.trajectory, &TrajectorySample::s), "#1f77b4"});
        plot.add({"ground fidelity", t, column(result.trajectory, &TrajectorySample::ground_fidelity), "#d62728"});
        outputs.write("evolve.svg", [&](std::ostream& os) { plot.render(os); });
    }
}

void cmd_sweep(const RunConfig& cfg, Outputs& outputs) {
    if (cfg.ns.size() < 4) throw UsageError("need >= 4 sizes for a scaling sweep");
    for (auto n : cfg.ns) SearchHamiltonian::from_dimension(n);

    MinimalTimeOptions options;
    options.tolerance = cfg.search_tol;
    options.engine = cfg.engine == "full" ? Engine::Full : Engine::Reduced;
    const auto report = scaling_sweep(cfg.ns, family(cfg), cfg.target, integrator(cfg), options, cfg.jobs);

    if (outputs.wants("json")) outputs.write_json("sweep.json", adiabatic::to_json(report));
    if (outputs.wants("csv")) {
        outputs.write("sweep.csv", [&](std::ostream& os) { write_scaling_csv(os, report, outputs.comments()); });
    }
    if (outputs.wants("svg")) {
        SvgPlot plot("Minimal time vs N (" + to_string(report.family) + ")", "N", "T_min");
        plot.set_log_axes(true);
        Series data{"measured", {}, {}, "#1f77b4", true};
        Series fit{"fit exponent " + format_double(report.exponent).substr(0, 6), {}, {}, "#d62728"};
        for (const auto& p : report.points) {
            const double n = static_cast<double>(p.dimension);
            data.x.push_back(n);
            data.y.push_back(p.minimal_time);
            fit.x.push_back(n);
            fit.y.push_back(report.prefactor * std::pow(n, report.exponent));
        }
        plot.add(std::move(data));
        plot.add(std::move(fit));
        outputs.write("sweep.svg", [&](std::ostream& os) { plot.render(os); });
    }
}

void cmd_optimality(const RunConfig& cfg, Outputs& outputs) {
    if (cfg.n > kOptimalityMaxDimension) {
        throw UsageError("optimality check needs --n <= " + std::to_string(kOptimalityMaxDimension));
    }
    SearchHamiltonian::from_dimension(cfg.n);
    OptimalityOptions options;
    options.eps_dist = cfg.eps_dist;
    options.jobs = cfg.jobs;
    const auto report = optimality_check(cfg.n, build_schedule(cfg), integrator(cfg), options);

    if (outputs.wants("json")) outputs.write_json("optimality.json", adiabatic::to_json(report));
    if (outputs.wants("csv")) {
        outputs.write("optimality.csv",
                      [&](std::ostream& os) { write_optimality_csv(os, report, outputs.comments()); });
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Quantum search by local adiabatic evolution: spectra, schedules, simulation, scaling"};
    app.name("adiabatic_search");
    app.require_subcommand(1, 1);

    std::uint64_t seed = 0;
    double time = 0.0;
    std::map<std::string, CLI::Option*> seed_opts;
    std::map<std::string, CLI::Option*> time_opts;

    auto common = [&](CLI::App* sub) {
        add(sub, "n", cfg.n, "database size N (power of two)");
        add(sub, "out", cfg.out, "output directory");
        add(sub, "format", cfg.formats, "output formats (csv, json, svg)")
            ->delimiter(',')
            ->check(CLI::IsMember({"csv", "json", "svg"}));
    };
    auto dynamics = [&](CLI::App* sub) {
        add(sub, "eps", cfg.eps, "local adiabaticity parameter");
        add(sub, "schedule", cfg.schedule, "schedule family")->check(CLI::IsMember({"local", "linear"}));
        add(sub, "method", cfg.method, "integrator")->check(CLI::IsMember({"rk4", "adaptive"}));
        add(sub, "step", cfg.step, "fixed step / initial adaptive step");
        add(sub, "tol", cfg.tol, "adaptive integrator tolerance");
        add(sub, "trajectory-samples", cfg.trajectory_samples, "trajectory sample count");
        add(sub, "jobs", cfg.jobs, "worker threads for independent runs");
    };

    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of H(s) over s in [0, 1]");
    common(spectrum);
    add(spectrum, "samples", cfg.samples, "number of s samples (default 101)");

    auto* schedule = app.add_subcommand("schedule", "local adiabatic evolution function s(t)");
    common(schedule);
    add(schedule, "eps", cfg.eps, "local adiabaticity parameter");
    add(schedule, "samples", cfg.samples, "number of t samples (default 201)");
    schedule->add_flag("--with-linear", cfg.with_linear, "also emit the linear schedule")
        ->envname(env_name("with-linear"));

    auto* evolve_cmd = app.add_subcommand("evolve", "integrate the Schrodinger equation from |psi0>");
    common(evolve_cmd);
    dynamics(evolve_cmd);
    time_opts["evolve"] = add(evolve_cmd, "time", time, "total time T (default: N/eps linear, closed form local)");
    add(evolve_cmd, "marked", cfg.marked, "marked item index");
    seed_opts["evolve"] = add(evolve_cmd, "seed", seed, "choose the marked item at random from this seed");
    add(evolve_cmd, "engine", cfg.engine, "auto, full or reduced")
        ->check(CLI::IsMember({"auto", "full", "reduced"}));
    add(evolve_cmd, "full-max", cfg.full_max, "largest N run on the full engine under --engine auto");

    auto* sweep = app.add_subcommand("sweep", "minimal time to reach a target fidelity vs N, with power-law fit");
    common(sweep);
    dynamics(sweep);
    add(sweep, "ns", cfg.ns, "database sizes")->delimiter(',');
    add(sweep, "target", cfg.target, "target success probability");
    add(sweep, "search-tol", cfg.search_tol, "relative tolerance of the minimal time");
    add(sweep, "engine", cfg.engine, "engine for the fidelity searches")
        ->check(CLI::IsMember({"auto", "full", "reduced"}));

    auto* optimality = app.add_subcommand("optimality", "distinguishability of final states vs the time bound");
    common(optimality);
    dynamics(optimality);
    time_opts["optimality"] = add(optimality, "time", time, "total time T");
    add(optimality, "eps-dist", cfg.eps_dist, "distinguishability threshold");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        const auto* sub = app.get_subcommands().front();
        cfg.command = sub->get_name();
        if (auto it = time_opts.find(cfg.command); it != time_opts.end() && it->second->count() > 0) cfg.time = time;
        if (auto it = seed_opts.find(cfg.command); it != seed_opts.end() && it->second->count() > 0) {
            cfg.seed = seed;
            std::mt19937_64 rng(seed);
            cfg.marked = rng() % cfg.n;
        }
        if (cfg.samples == 0) cfg.samples = cfg.command == "schedule" ? 201 : 101;
        if (cfg.formats.empty()) {
            if (cfg.command == "spectrum" || cfg.command == "schedule") cfg.formats = {"csv"};
            if (cfg.command == "evolve" || cfg.command == "sweep") cfg.formats = {"csv", "json"};
            if (cfg.command == "optimality") cfg.formats = {"json"};
        }
        // Canonical order so equivalent invocations echo identical configs.
        std::set<std::string> unique(cfg.formats.begin(), cfg.formats.end());
        cfg.formats.assign(unique.begin(), unique.end());

        Outputs outputs(cfg, out);
        if (cfg.command == "spectrum") cmd_spectrum(cfg, outputs);
        if (cfg.command == "schedule") cmd_schedule(cfg, outputs);
        if (cfg.command == "evolve") cmd_evolve(cfg, outputs, err);
        if (cfg.command == "sweep") cmd_sweep(cfg, outputs);
        if (cfg.command == "optimality") cmd_optimality(cfg, outputs);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.push_back("adiabatic_search");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace adiabatic::cli
