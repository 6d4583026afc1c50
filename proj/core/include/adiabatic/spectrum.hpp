// Analytic eigen-structure of the interpolating search Hamiltonian.

#pragma once

#include <array>
#include <cstdint>

namespace adiabatic {

struct SpectrumPoint {
    double s;
    double E0;
    double E1;
    double E2;  // the degenerate upper level, always 1
    double gap;
    std::uint64_t e2_multiplicity;  // N - 2
};

/// g(s) = sqrt(1 - 4 (N-1)/N s (1-s)). Throws std::invalid_argument when
/// N < 2 or s is outside [0, 1].
double gap(double s, std::uint64_t dimension);

SpectrumPoint eigenvalues(double s, std::uint64_t dimension);

struct MinGap {
    double s_star;
    double g_min;
};

/// The avoided crossing sits at s = 1/2 with g = 1/sqrt(N).
MinGap min_gap(std::uint64_t dimension);

/// Ground and first excited eigenvectors of the reduced block, in the
/// {|m>, |m_perp>} basis. Real, with nonnegative |m> component.
struct ReducedEigenbasis {
    double E0;
    double E1;
    std::array<double, 2> ground;
    std::array<double, 2> excited;
};

ReducedEigenbasis reduced_eigenbasis(double s, std::uint64_t dimension);

/// |<E1; s| dH/ds |E0; s>| with dH/ds = Hm - H0. Never exceeds 1.
double coupling_matrix_element(double s, std::uint64_t dimension);

}  // namespace adiabatic
