// Experiments: figure traces, minimal-time scaling sweeps and the
// distinguishability bound for families of marked items.

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "adiabatic/evolution.hpp"
#include "adiabatic/schedule.hpp"
#include "adiabatic/spectrum.hpp"

namespace adiabatic {

enum class ScheduleFamily { Linear, LocalAdiabatic };

std::string to_string(ScheduleFamily family);

/// Family member with total duration T. LocalAdiabatic is the closed-form
/// shape stretched in time, which is the same as choosing eps.
Schedule family_schedule(ScheduleFamily family, std::uint64_t dimension, double total_time);

/// Spectrum at `samples` equally spaced s in [0, 1].
std::vector<SpectrumPoint> spectrum_trace(std::uint64_t dimension, int samples);

/// (t, s, ds/dt) at `samples` equally spaced t in [0, T].
std::vector<ScheduleKnot> sample_schedule(const Schedule& schedule, int samples);
std::vector<ScheduleKnot> schedule_trace(std::uint64_t dimension, double eps, int samples);

struct MinimalTimeOptions {
    double tolerance = 1e-3;  // relative width of the final bracket
    double initial_time = 1.0;
    double growth = 2.0;
    double max_time = 1e6;
    Engine engine = Engine::Reduced;
};

class BracketNotFound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Smallest T (within relative tolerance) whose success probability reaches
/// `target`. The bracket grows geometrically from `initial_time` until the
/// target is first met, then bisects inside it. Success probability is not
/// monotone in T, so this is the first crossing seen on that grid.
double minimal_time(std::uint64_t dimension, ScheduleFamily family, double target, const IntegratorConfig& cfg,
                    const MinimalTimeOptions& options = {});

struct PowerLawFit {
    double exponent;
    double prefactor;
    double residual;  // RMS in log space
};

/// Least squares on (log x, log y). Needs two or more strictly positive points.
PowerLawFit fit_power_law(std::span<const std::pair<double, double>> points);

struct ScalingPoint {
    std::uint64_t dimension;
    double minimal_time;
};

struct ScalingReport {
    ScheduleFamily family;
    double target_fidelity;
    std::vector<ScalingPoint> points;
    double exponent;
    double prefactor;
    double residual;
};

/// Requires at least four strictly increasing sizes spanning two octaves.
ScalingReport scaling_sweep(std::span<const std::uint64_t> dimensions, ScheduleFamily family, double target,
                            const IntegratorConfig& cfg, const MinimalTimeOptions& options = {},
                            unsigned jobs = 1);

inline constexpr std::uint64_t kOptimalityMaxDimension = 64;

struct OptimalityOptions {
    double eps_dist = 0.5;
    /// Up to this size every marked item is evolved separately; above it the
    /// other final states are index permutations of the m = 0 run.
    std::uint64_t all_runs_max = 16;
    unsigned jobs = 1;
};

struct OptimalityReport {
    std::uint64_t dimension;
    std::string schedule;
    double total_time;
    double schedule_eps;
    double eps_dist;
    double distinguishability_sum;   // sum over m != m' of 1 - |<psi_m|psi_m'>|^2
    double s_integral;               // integral of s(t) over [0, T]
    double bound;                    // 4 N sqrt(N) s_integral
    double margin;                   // bound - distinguishability_sum
    double min_pairwise_distinguishability;
    double lower_bound_time;         // (eps_dist / 4)(N - 1) / sqrt(N)
    bool distinguishable;            // min pairwise >= eps_dist
    bool time_bound_consistent;      // !distinguishable || T >= lower_bound_time
    bool used_permutation_symmetry;
    double norm_drift_max;
};

OptimalityReport optimality_check(std::uint64_t dimension, const Schedule& schedule, const IntegratorConfig& cfg,
                                  const OptimalityOptions& options = {});

}  // namespace adiabatic
