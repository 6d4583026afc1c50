// Interpolation schedules s(t) on [0, T] with s(0) = 0 and s(T) = 1.
//
// Linear:          s = t / T (global adiabaticity, T >= N / eps).
// LocalAdiabatic:  ds/dt = eps g(s)^2, integrated in closed form:
//
//   t(s) = N / (2 eps sqrt(N-1)) [atan(sqrt(N-1)(2s-1)) + atan(sqrt(N-1))]
//
// Tabulated:       knots produced by integrating the local rate condition
//                  for an arbitrary gap profile, joined by a monotone cubic.

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "adiabatic/interpolation.hpp"

namespace adiabatic {

enum class ScheduleKind { Linear, LocalAdiabatic, Tabulated };

std::string to_string(ScheduleKind kind);

struct ScheduleKnot {
    double t;
    double s;
    double rate;
};

class Schedule {
public:
    ScheduleKind kind() const noexcept { return kind_; }
    double total_time() const noexcept { return total_time_; }

    /// LocalAdiabatic: database size. Zero for other kinds.
    std::uint64_t dimension() const noexcept { return dimension_; }
    /// LocalAdiabatic and Tabulated: the rate parameter eps. For a
    /// LocalAdiabatic schedule stretched to an arbitrary duration this is the
    /// effective value and may exceed 1. Zero for Linear.
    double epsilon() const noexcept { return epsilon_; }

    /// s(t). Throws std::out_of_range for t outside [0, T].
    double s_at(double t) const;
    /// ds/dt. Throws std::out_of_range for t outside [0, T].
    double rate(double t) const;

    /// Tabulated knots (empty for analytic kinds).
    const std::vector<ScheduleKnot>& knots() const noexcept { return knots_; }

    /// Same shape, run over a different total time.
    Schedule rescaled(double total_time) const;

    /// Integral of s(t) over [0, T] by adaptive Gauss-Kronrod quadrature.
    double integral_of_s() const;

    std::string describe() const;

private:
    friend Schedule linear_schedule(double);
    friend Schedule local_adiabatic_schedule(std::uint64_t, double);
    friend Schedule local_adiabatic_schedule_for_duration(std::uint64_t, double);
    friend Schedule tabulated_schedule(std::vector<ScheduleKnot>, double);

    Schedule() = default;
    double clamp_time(double t) const;

    ScheduleKind kind_ = ScheduleKind::Linear;
    double total_time_ = 1.0;
    std::uint64_t dimension_ = 0;
    double epsilon_ = 0.0;
    std::vector<ScheduleKnot> knots_;
    std::shared_ptr<const MonotoneCubic> interpolant_;
};

Schedule linear_schedule(double total_time);

/// Requires N >= 2 and 0 < eps < 1.
Schedule local_adiabatic_schedule(std::uint64_t dimension, double eps);

/// The local-adiabatic shape stretched to run for `total_time`.
Schedule local_adiabatic_schedule_for_duration(std::uint64_t dimension, double total_time);

/// Knots must start at (0, 0), end at s = 1, and be strictly increasing in t.
Schedule tabulated_schedule(std::vector<ScheduleKnot> knots, double eps = 0.0);

/// N / eps: the duration certified by the global (worst-gap) condition.
double global_adiabatic_time(std::uint64_t dimension, double eps);

double local_time_of_s(double s, std::uint64_t dimension, double eps);
/// Exact inverse of local_time_of_s on [0, local_total_time].
double local_s_of_time(double t, std::uint64_t dimension, double eps);
/// local_time_of_s(1); tends to (pi / (2 eps)) sqrt(N) for large N.
double local_total_time(std::uint64_t dimension, double eps);

inline double rate(const Schedule& schedule, double t) { return schedule.rate(t); }

/// Gap profile driving schedule synthesis. The local condition reads
/// ds/dt = eps g(s)^2 / c(s), where c is `coupling` when set and the
/// constant `coupling_bound` otherwise.
struct GapModel {
    std::function<double(double)> gap;
    double coupling_bound = 1.0;
    std::function<double(double)> coupling;
};

GapModel constant_gap_model(double value);

enum class CouplingMode { Bound, Exact };
GapModel grover_gap_model(std::uint64_t dimension, CouplingMode mode = CouplingMode::Bound);

struct SynthesisOptions {
    std::size_t max_steps = 200000;
};

/// Integrates the local rate condition from s = 0 to s = 1 with an adaptive
/// Dormand-Prince stepper at absolute and relative tolerance `tol`. Throws
/// std::domain_error if the gap evaluates to <= 0 and std::runtime_error if
/// the step cap is hit.
Schedule schedule_from_gap(const GapModel& model, double eps, double tol, const SynthesisOptions& options = {});

}  // namespace adiabatic
