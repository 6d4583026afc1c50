#include "adiabatic/spectrum.hpp"

#include <cmath>
#include <stdexcept>

#include "adiabatic/hamiltonian.hpp"

namespace adiabatic {

namespace {

void check_domain(double s, std::uint64_t dimension) {
    if (dimension < 2) throw std::invalid_argument("N must be >= 2");
    if (!(s >= 0.0 && s <= 1.0)) throw std::invalid_argument("s must lie in [0, 1]");
}

// Nonnegative first component; ties broken on the second.
std::array<double, 2> canonical_sign(std::array<double, 2> v) {
    if (v[0] < 0.0 || (v[0] == 0.0 && v[1] < 0.0)) return {-v[0], -v[1]};
    return v;
}

}  // namespace

double gap(double s, std::uint64_t dimension) {
    check_domain(s, dimension);
    const double n = static_cast<double>(dimension);
    // 1 - 4(1 - 1/N) s(1-s) rearranged so that no cancellation occurs near s = 1/2
    const double d = 1.0 - 2.0 * s;
    return std::sqrt(d * d + 4.0 * s * (1.0 - s) / n);
}

SpectrumPoint eigenvalues(double s, std::uint64_t dimension) {
    const double g = gap(s, dimension);
    return {s, 0.5 * (1.0 - g), 0.5 * (1.0 + g), 1.0, g, dimension - 2};
}

MinGap min_gap(std::uint64_t dimension) {
    if (dimension < 2) throw std::invalid_argument("N must be >= 2");
    return {0.5, 1.0 / std::sqrt(static_cast<double>(dimension))};
}

ReducedEigenbasis reduced_eigenbasis(double s, std::uint64_t dimension) {
    check_domain(s, dimension);
    const Block2 b = reduced_block(dimension, s);
    // Jacobi rotation: (cos t, sin t) with tan 2t = 2 mc / (mm - cc) is the upper eigenvector.
    const double theta = 0.5 * std::atan2(2.0 * b.mc, b.mm - b.cc);
    const double c = std::cos(theta);
    const double sn = std::sin(theta);
    const double g = gap(s, dimension);
    return {0.5 * (1.0 - g), 0.5 * (1.0 + g), canonical_sign({-sn, c}), canonical_sign({c, sn})};
}

double coupling_matrix_element(double s, std::uint64_t dimension) {
    const ReducedEigenbasis e = reduced_eigenbasis(s, dimension);
    const double n = static_cast<double>(dimension);
    // dH/ds = |psi0><psi0| - |m><m| in the {|m>, |m_perp>} basis
    const double b2 = (n - 1.0) / n;
    const double ab = std::sqrt(n - 1.0) / n;
    const auto& u = e.excited;
    const auto& v = e.ground;
    const double value = u[0] * (-b2 * v[0] + ab * v[1]) + u[1] * (ab * v[0] + b2 * v[1]);
    return std::abs(value);
}

}  // namespace adiabatic
