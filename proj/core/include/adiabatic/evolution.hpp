// Time-dependent Schrodinger integration, i d/dt psi = H(s(t)) psi with hbar = 1.
//
// Two engines share the same integrators:
//   evolve          full N-dimensional state, H applied in O(N) per stage
//   evolve_reduced  the 2-D invariant span{|m>, |psi0>}, cost independent of N
// Starting from |psi0> both describe the same trajectory exactly; the full
// engine additionally reports leakage out of the span as an accuracy witness.

#pragma once

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "adiabatic/hamiltonian.hpp"
#include "adiabatic/schedule.hpp"

namespace adiabatic {

enum class IntegratorMethod { FixedStep, Adaptive };
enum class Engine { Full, Reduced };

std::string to_string(IntegratorMethod method);
std::string to_string(Engine engine);

struct IntegratorConfig {
    IntegratorMethod method = IntegratorMethod::FixedStep;
    double step = 0.01;         // fixed-step size, also the initial adaptive step
    double tolerance = 1e-10;   // adaptive: absolute and relative error per step
    int sample_count = 101;     // trajectory samples, equally spaced in t
    double norm_drift_threshold = 1e-8;

    void validate() const;
};

struct TrajectorySample {
    double t;
    double s;
    double ground_fidelity;
    double gap;
    double adiabaticity_ratio;
    double norm_error;
};

struct EvolutionResult {
    Engine engine = Engine::Full;
    double total_time = 0.0;
    /// Only the full engine materializes the state; see expand_subspace.
    std::optional<QuantumState> final_state;
    std::array<Complex, 2> subspace_amplitudes{};
    double success_probability = 0.0;     // |<m|psi(T)>|^2
    double ground_fidelity_final = 0.0;   // |<E0;T|psi(T)>|^2
    std::vector<TrajectorySample> trajectory;
    double norm_drift_max = 0.0;
    double leakage_max = 0.0;             // full engine only
    bool drift_flagged = false;
    std::size_t steps = 0;
};

/// Raised when the integrated state stops being finite.
class NonFiniteStateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Integrates from |psi0> in the full N-dimensional space. Never renormalizes.
EvolutionResult evolve(const SearchHamiltonian& h, const Schedule& schedule, const IntegratorConfig& cfg = {});

/// Same dynamics on the two-dimensional invariant subspace.
EvolutionResult evolve_reduced(const SearchHamiltonian& h, const Schedule& schedule,
                               const IntegratorConfig& cfg = {});

EvolutionResult evolve_with(Engine engine, const SearchHamiltonian& h, const Schedule& schedule,
                            const IntegratorConfig& cfg = {});

/// |<E0; s|psi>|^2.
double instantaneous_ground_fidelity(std::span<const Complex> psi, double s, const SearchHamiltonian& h);
double instantaneous_ground_fidelity(const QuantumState& psi, double s, const SearchHamiltonian& h);

/// (ds/dt) |<E1|dH/ds|E0>| / g(s)^2.
double adiabaticity_ratio(double s, double ds_dt, std::uint64_t dimension);

}  // namespace adiabatic
