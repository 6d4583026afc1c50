#include "adiabatic/evolution.hpp"

#include <algorithm>
#include <cmath>

#include <boost/numeric/odeint.hpp>

#include "adiabatic/spectrum.hpp"

namespace adiabatic {

namespace odeint = boost::numeric::odeint;

std::string to_string(IntegratorMethod method) {
    return method == IntegratorMethod::FixedStep ? "rk4" : "adaptive";
}

std::string to_string(Engine engine) { return engine == Engine::Full ? "full" : "reduced"; }

void IntegratorConfig::validate() const {
    if (!(step > 0.0)) throw std::invalid_argument("integrator step must be positive");
    if (!(tolerance > 0.0)) throw std::invalid_argument("integrator tolerance must be positive");
    if (sample_count < 2) throw std::invalid_argument("sample_count must be >= 2");
    if (!(norm_drift_threshold > 0.0)) throw std::invalid_argument("norm drift threshold must be positive");
}

namespace {

using State = std::vector<Complex>;

inline Complex times_minus_i(Complex v) { return {v.imag(), -v.real()}; }

struct FullRhs {
    const SearchHamiltonian* h;
    const Schedule* schedule;

    void operator()(const State& x, State& dxdt, double t) const {
        apply_hamiltonian(*h, schedule->s_at(t), x, dxdt);
        for (auto& v : dxdt) v = times_minus_i(v);
    }
};

struct ReducedRhs {
    std::uint64_t dimension;
    const Schedule* schedule;

    void operator()(const State& x, State& dxdt, double t) const {
        const Block2 b = reduced_block(dimension, schedule->s_at(t));
        dxdt[0] = times_minus_i(b.mm * x[0] + b.mc * x[1]);
        dxdt[1] = times_minus_i(b.mc * x[0] + b.cc * x[1]);
    }
};

double ground_fidelity(const std::array<Complex, 2>& coords, double s, std::uint64_t dimension) {
    const auto basis = reduced_eigenbasis(s, dimension);
    return std::norm(basis.ground[0] * coords[0] + basis.ground[1] * coords[1]);
}

double norm_squared(const State& x) {
    double acc = 0.0;
    for (const auto& v : x) acc += std::norm(v);
    return acc;
}

void require_finite(const State& x, double t) {
    for (const auto& v : x) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw NonFiniteStateError("non-finite amplitude at t=" + std::to_string(t));
        }
    }
}

// Advances x across [0, T], invoking `sample(t, x)` at sample_count equally
// spaced times including both ends. Returns the number of steps taken.
template <class Rhs, class Sample>
std::size_t integrate(const Rhs& rhs, State& x, double total_time, const IntegratorConfig& cfg, Sample&& sample) {
    const int n = cfg.sample_count;
    auto sample_time = [&](int k) { return k == n - 1 ? total_time : total_time * k / (n - 1); };

    std::size_t steps = 0;
    sample(0.0, x);
    if (cfg.method == IntegratorMethod::FixedStep) {
        odeint::runge_kutta4<State> stepper;
        for (int k = 0; k + 1 < n; ++k) {
            const double t0 = sample_time(k);
            const double span = sample_time(k + 1) - t0;
            const auto count = static_cast<std::size_t>(std::max(1.0, std::ceil(span / cfg.step - 1e-9)));
            const double dt = span / static_cast<double>(count);
            for (std::size_t j = 0; j < count; ++j) {
                stepper.do_step(rhs, x, t0 + static_cast<double>(j) * dt, dt);
            }
            steps += count;
            sample(sample_time(k + 1), x);
        }
    } else {
        auto stepper = odeint::make_controlled(cfg.tolerance, cfg.tolerance, odeint::runge_kutta_dopri5<State>());
        for (int k = 0; k + 1 < n; ++k) {
            const double t0 = sample_time(k);
            const double t1 = sample_time(k + 1);
            steps += odeint::integrate_adaptive(stepper, rhs, x, t0, t1, std::min(cfg.step, t1 - t0));
            sample(t1, x);
        }
    }
    return steps;
}

class TrajectoryRecorder {
public:
    TrajectoryRecorder(const Schedule& schedule, std::uint64_t dimension, int samples)
        : schedule_(schedule), dimension_(dimension) {
        trajectory_.reserve(static_cast<std::size_t>(samples));
    }

    void record(double t, const std::array<Complex, 2>& coords, double norm_sq) {
        const double s = schedule_.s_at(t);
        const double norm_error = std::abs(norm_sq - 1.0);
        drift_max_ = std::max(drift_max_, norm_error);
        trajectory_.push_back({t, s, ground_fidelity(coords, s, dimension_), gap(s, dimension_),
                               adiabaticity_ratio(s, schedule_.rate(t), dimension_), norm_error});
    }

    void finish(EvolutionResult& result, const IntegratorConfig& cfg) {
        result.norm_drift_max = drift_max_;
        result.drift_flagged = drift_max_ >= cfg.norm_drift_threshold;
        result.trajectory = std::move(trajectory_);
    }

private:
    const Schedule& schedule_;
    std::uint64_t dimension_;
    std::vector<TrajectorySample> trajectory_;
    double drift_max_ = 0.0;
};

void fill_final(EvolutionResult& result, const std::array<Complex, 2>& coords, std::uint64_t dimension) {
    result.subspace_amplitudes = coords;
    result.success_probability = std::norm(coords[0]);
    result.ground_fidelity_final = ground_fidelity(coords, 1.0, dimension);
}

}  // namespace

EvolutionResult evolve(const SearchHamiltonian& h, const Schedule& schedule, const IntegratorConfig& cfg) {
    cfg.validate();
    const auto initial = make_uniform_state(h);
    State x(initial.amplitudes().begin(), initial.amplitudes().end());

    EvolutionResult result;
    result.engine = Engine::Full;
    result.total_time = schedule.total_time();
    TrajectoryRecorder recorder(schedule, h.dimension(), cfg.sample_count);
    double leakage = 0.0;

    const FullRhs rhs{&h, &schedule};
    result.steps = integrate(rhs, x, schedule.total_time(), cfg, [&](double t, const State& state) {
        require_finite(state, t);
        leakage = std::max(leakage, off_span_weight(h, state));
        recorder.record(t, project_to_subspace(h, state), norm_squared(state));
    });

    recorder.finish(result, cfg);
    result.leakage_max = leakage;
    fill_final(result, project_to_subspace(h, x), h.dimension());
    result.success_probability = std::norm(x[h.marked()]);
    result.final_state = QuantumState::from_evolved(std::move(x));
    return result;
}

EvolutionResult evolve_reduced(const SearchHamiltonian& h, const Schedule& schedule, const IntegratorConfig& cfg) {
    cfg.validate();
    const double n = static_cast<double>(h.dimension());
    State x{Complex{1.0 / std::sqrt(n), 0.0}, Complex{std::sqrt((n - 1.0) / n), 0.0}};

    EvolutionResult result;
    result.engine = Engine::Reduced;
    result.total_time = schedule.total_time();
    TrajectoryRecorder recorder(schedule, h.dimension(), cfg.sample_count);

    const ReducedRhs rhs{h.dimension(), &schedule};
    result.steps = integrate(rhs, x, schedule.total_time(), cfg, [&](double t, const State& state) {
        require_finite(state, t);
        recorder.record(t, {state[0], state[1]}, norm_squared(state));
    });

    recorder.finish(result, cfg);
    fill_final(result, {x[0], x[1]}, h.dimension());
    return result;
}

EvolutionResult evolve_with(Engine engine, const SearchHamiltonian& h, const Schedule& schedule,
                            const IntegratorConfig& cfg) {
    return engine == Engine::Full ? evolve(h, schedule, cfg) : evolve_reduced(h, schedule, cfg);
}

double instantaneous_ground_fidelity(std::span<const Complex> psi, double s, const SearchHamiltonian& h) {
    return ground_fidelity(project_to_subspace(h, psi), s, h.dimension());
}

double instantaneous_ground_fidelity(const QuantumState& psi, double s, const SearchHamiltonian& h) {
    return instantaneous_ground_fidelity(psi.amplitudes(), s, h);
}

double adiabaticity_ratio(double s, double ds_dt, std::uint64_t dimension) {
    if (ds_dt == 0.0) return 0.0;
    const double g = gap(s, dimension);
    return std::abs(ds_dt) * coupling_matrix_element(s, dimension) / (g * g);
}

}  // namespace adiabatic
