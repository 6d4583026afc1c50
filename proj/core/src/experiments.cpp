#include "adiabatic/experiments.hpp"

#include <cmath>
#include <numeric>

#include "adiabatic/parallel.hpp"

namespace adiabatic {

std::string to_string(ScheduleFamily family) {
    return family == ScheduleFamily::Linear ? "linear" : "local";
}

Schedule family_schedule(ScheduleFamily family, std::uint64_t dimension, double total_time) {
    return family == ScheduleFamily::Linear ? linear_schedule(total_time)
                                            : local_adiabatic_schedule_for_duration(dimension, total_time);
}

std::vector<SpectrumPoint> spectrum_trace(std::uint64_t dimension, int samples) {
    if (samples < 2) throw std::invalid_argument("samples must be >= 2");
    std::vector<SpectrumPoint> out;
    out.reserve(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k) {
        const double s = k == samples - 1 ? 1.0 : static_cast<double>(k) / (samples - 1);
        out.push_back(eigenvalues(s, dimension));
    }
    return out;
}

std::vector<ScheduleKnot> sample_schedule(const Schedule& schedule, int samples) {
    if (samples < 2) throw std::invalid_argument("samples must be >= 2");
    const double total = schedule.total_time();
    std::vector<ScheduleKnot> out;
    out.reserve(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k) {
        const double t = k == samples - 1 ? total : total * k / (samples - 1);
        out.push_back({t, schedule.s_at(t), schedule.rate(t)});
    }
    return out;
}

std::vector<ScheduleKnot> schedule_trace(std::uint64_t dimension, double eps, int samples) {
    return sample_schedule(local_adiabatic_schedule(dimension, eps), samples);
}

double minimal_time(std::uint64_t dimension, ScheduleFamily family, double target, const IntegratorConfig& cfg,
                    const MinimalTimeOptions& options) {
    const auto h = SearchHamiltonian::from_dimension(dimension);
    const double n = static_cast<double>(dimension);
    if (!(target > 1.0 / n && target < 1.0)) {
        throw std::invalid_argument("target fidelity must lie in (1/N, 1)");
    }
    if (!(options.tolerance > 0.0) || !(options.initial_time > 0.0) || !(options.growth > 1.0)) {
        throw std::invalid_argument("invalid minimal-time search options");
    }

    auto reaches = [&](double total_time) {
        const auto schedule = family_schedule(family, dimension, total_time);
        return evolve_with(options.engine, h, schedule, cfg).success_probability >= target;
    };

    // At T -> 0 the success probability is 1/N < target, so lo = 0 is a valid lower end.
    double lo = 0.0;
    double hi = options.initial_time;
    while (!reaches(hi)) {
        lo = hi;
        hi *= options.growth;
        if (hi > options.max_time) {
            throw BracketNotFound("no duration below " + std::to_string(options.max_time) + " reaches target " +
                                  std::to_string(target) + " for N=" + std::to_string(dimension));
        }
    }
    while (hi - lo > options.tolerance * hi) {
        const double mid = 0.5 * (lo + hi);
        if (reaches(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

PowerLawFit fit_power_law(std::span<const std::pair<double, double>> points) {
    if (points.size() < 2) throw std::invalid_argument("power-law fit needs at least two points");
    std::vector<double> lx, ly;
    for (const auto& [x, y] : points) {
        if (!(x > 0.0) || !(y > 0.0)) throw std::invalid_argument("power-law fit needs positive data");
        lx.push_back(std::log(x));
        ly.push_back(std::log(y));
    }
    const double m = static_cast<double>(points.size());
    const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / m;
    const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / m;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("power-law fit needs at least two distinct x values");
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    double sq = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        const double r = ly[i] - (slope * lx[i] + intercept);
        sq += r * r;
    }
    return {slope, std::exp(intercept), std::sqrt(sq / m)};
}

ScalingReport scaling_sweep(std::span<const std::uint64_t> dimensions, ScheduleFamily family, double target,
                            const IntegratorConfig& cfg, const MinimalTimeOptions& options, unsigned jobs) {
    if (dimensions.size() < 4) throw std::invalid_argument("scaling sweep needs >= 4 sizes");
    for (std::size_t i = 0; i + 1 < dimensions.size(); ++i) {
        if (dimensions[i + 1] <= dimensions[i]) throw std::invalid_argument("sizes must be strictly increasing");
    }
    if (dimensions.back() < 4 * dimensions.front()) {
        throw std::invalid_argument("sizes must span at least two octaves");
    }

    const auto times = parallel_map(
        dimensions, [&](const std::uint64_t& n) { return minimal_time(n, family, target, cfg, options); }, jobs);

    ScalingReport report{family, target, {}, 0.0, 0.0, 0.0};
    std::vector<std::pair<double, double>> xy;
    for (std::size_t i = 0; i < dimensions.size(); ++i) {
        report.points.push_back({dimensions[i], times[i]});
        xy.emplace_back(static_cast<double>(dimensions[i]), times[i]);
    }
    const auto fit = fit_power_law(xy);
    report.exponent = fit.exponent;
    report.prefactor = fit.prefactor;
    report.residual = fit.residual;
    return report;
}

OptimalityReport optimality_check(std::uint64_t dimension, const Schedule& schedule, const IntegratorConfig& cfg,
                                  const OptimalityOptions& options) {
    const auto h0 = SearchHamiltonian::from_dimension(dimension, 0);
    if (dimension > kOptimalityMaxDimension) {
        throw std::invalid_argument("optimality check needs N <= " + std::to_string(kOptimalityMaxDimension) +
                                    " (N evolutions and N^2 overlaps)");
    }
    if (!(options.eps_dist > 0.0 && options.eps_dist <= 1.0)) {
        throw std::invalid_argument("eps_dist must lie in (0, 1]");
    }

    const std::size_t n = dimension;
    std::vector<Amplitudes> finals(n);
    double drift = 0.0;
    const bool symmetric = dimension > options.all_runs_max;

    if (symmetric) {
        auto run = evolve(h0, schedule, cfg);
        drift = run.norm_drift_max;
        const auto base = run.final_state->amplitudes();
        for (std::size_t m = 0; m < n; ++m) {
            // Relabeling 0 <-> m maps the m = 0 instance onto the m instance.
            finals[m].assign(base.begin(), base.end());
            std::swap(finals[m][0], finals[m][m]);
        }
    } else {
        std::vector<std::uint64_t> marks(n);
        std::iota(marks.begin(), marks.end(), 0);
        auto runs = parallel_map(
            marks, [&](const std::uint64_t& m) { return evolve(h0.with_marked(m), schedule, cfg); }, options.jobs);
        for (std::size_t m = 0; m < n; ++m) {
            drift = std::max(drift, runs[m].norm_drift_max);
            const auto amps = runs[m].final_state->amplitudes();
            finals[m].assign(amps.begin(), amps.end());
        }
    }

    double sum = 0.0;
    double min_pair = 1.0;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b) continue;
            Complex overlap{};
            for (std::size_t i = 0; i < n; ++i) overlap += std::conj(finals[a][i]) * finals[b][i];
            const double d = 1.0 - std::norm(overlap);
            sum += d;
            min_pair = std::min(min_pair, d);
        }
    }

    const double nd = static_cast<double>(dimension);
    OptimalityReport r{};
    r.dimension = dimension;
    r.schedule = schedule.describe();
    r.total_time = schedule.total_time();
    r.schedule_eps = schedule.epsilon();
    r.eps_dist = options.eps_dist;
    r.distinguishability_sum = sum;
    r.s_integral = schedule.integral_of_s();
    r.bound = 4.0 * nd * std::sqrt(nd) * r.s_integral;
    r.margin = r.bound - sum;
    r.min_pairwise_distinguishability = min_pair;
    r.lower_bound_time = options.eps_dist / 4.0 * (nd - 1.0) / std::sqrt(nd);
    r.distinguishable = min_pair >= options.eps_dist;
    r.time_bound_consistent = !r.distinguishable || r.total_time >= r.lower_bound_time;
    r.used_permutation_symmetry = symmetric;
    r.norm_drift_max = drift;
    return r;
}

}  // namespace adiabatic
