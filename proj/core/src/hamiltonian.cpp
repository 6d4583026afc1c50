#include "adiabatic/hamiltonian.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace adiabatic {

SearchHamiltonian::SearchHamiltonian(int n_qubits, std::uint64_t marked)
    : n_qubits_(n_qubits), dimension_(0), marked_(marked) {
    if (n_qubits < 1 || n_qubits > 62) {
        throw std::invalid_argument("n_qubits must be in [1, 62], got " + std::to_string(n_qubits));
    }
    dimension_ = std::uint64_t{1} << n_qubits;
    if (marked >= dimension_) {
        throw std::invalid_argument("marked index " + std::to_string(marked) + " outside [0, " +
                                    std::to_string(dimension_) + ")");
    }
}

SearchHamiltonian SearchHamiltonian::from_dimension(std::uint64_t dimension, std::uint64_t marked) {
    if (dimension < 2 || !std::has_single_bit(dimension)) {
        throw std::invalid_argument("N must be a power of two >= 2, got " + std::to_string(dimension));
    }
    return {std::countr_zero(dimension), marked};
}

QuantumState::QuantumState(Amplitudes amplitudes, double norm_tolerance) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty()) {
        throw std::invalid_argument("state must have at least one amplitude");
    }
    const double deviation = std::abs(norm_squared() - 1.0);
    if (!(deviation <= norm_tolerance)) {
        throw std::invalid_argument("state is not normalized (|norm^2 - 1| = " + std::to_string(deviation) + ")");
    }
}

QuantumState QuantumState::basis(std::uint64_t dimension, std::uint64_t index) {
    if (index >= dimension) {
        throw std::invalid_argument("basis index outside dimension");
    }
    Amplitudes amps(dimension);
    amps[index] = 1.0;
    return QuantumState(std::move(amps), Unchecked{});
}

QuantumState QuantumState::from_evolved(Amplitudes amplitudes) {
    return QuantumState(std::move(amplitudes), Unchecked{});
}

double QuantumState::norm_squared() const noexcept {
    double acc = 0.0;
    for (const auto& a : amplitudes_) acc += std::norm(a);
    return acc;
}

QuantumState make_uniform_state(const SearchHamiltonian& h) {
    const double amp = 1.0 / std::sqrt(static_cast<double>(h.dimension()));
    return QuantumState(Amplitudes(h.dimension(), Complex{amp, 0.0}));
}

namespace {

void check_dimension(const SearchHamiltonian& h, std::size_t size) {
    if (size != h.dimension()) {
        throw std::invalid_argument("dimension mismatch: Hamiltonian has N=" + std::to_string(h.dimension()) +
                                    ", vector has " + std::to_string(size));
    }
}

void check_interpolation(double s) {
    if (!(s >= 0.0 && s <= 1.0)) {
        throw std::invalid_argument("interpolation parameter s must lie in [0, 1]");
    }
}

}  // namespace

void apply_hamiltonian(const SearchHamiltonian& h, double s, std::span<const Complex> psi,
                       std::span<Complex> out) {
    check_interpolation(s);
    check_dimension(h, psi.size());
    check_dimension(h, out.size());

    const double n = static_cast<double>(h.dimension());
    Complex sum{};
    for (const auto& a : psi) sum += a;
    // (1 - s) <psi0|psi> psi0_i, with psi0_i = 1/sqrt(N)
    const Complex shift = (1.0 - s) * sum / n;
    const Complex marked_amp = psi[h.marked()];

    for (std::size_t i = 0; i < psi.size(); ++i) out[i] = psi[i] - shift;
    out[h.marked()] -= s * marked_amp;
}

Amplitudes apply_hamiltonian(const SearchHamiltonian& h, double s, std::span<const Complex> psi) {
    Amplitudes out(psi.size());
    apply_hamiltonian(h, s, psi, out);
    return out;
}

DenseMatrix dense_matrix(const SearchHamiltonian& h, double s, std::size_t cap) {
    const std::size_t n = h.dimension();
    if (n > cap) {
        throw std::invalid_argument("dense oracle refused: N=" + std::to_string(n) + " exceeds cap " +
                                    std::to_string(cap));
    }
    const double uniform = (1.0 - s) / static_cast<double>(n);
    DenseMatrix m{n, std::vector<double>(n * n, -uniform)};
    for (std::size_t i = 0; i < n; ++i) m.values[i * n + i] += 1.0;
    m.values[h.marked() * n + h.marked()] -= s;
    return m;
}

Block2 reduced_block(std::uint64_t dimension, double s) {
    if (dimension < 2) {
        throw std::invalid_argument("N must be >= 2");
    }
    const double n = static_cast<double>(dimension);
    // psi0 = a|m> + b|m_perp>, a = 1/sqrt(N), b = sqrt((N-1)/N)
    const double a2 = 1.0 / n;
    const double b2 = (n - 1.0) / n;
    const double ab = std::sqrt(n - 1.0) / n;
    const double w = 1.0 - s;
    return {1.0 - w * a2 - s, -w * ab, 1.0 - w * b2};
}

std::array<Complex, 2> project_to_subspace(const SearchHamiltonian& h, std::span<const Complex> psi) {
    check_dimension(h, psi.size());
    Complex rest{};
    for (std::size_t i = 0; i < psi.size(); ++i) {
        if (i != h.marked()) rest += psi[i];
    }
    // |m_perp> has amplitude 1/sqrt(N-1) on every i != m
    return {psi[h.marked()], rest / std::sqrt(static_cast<double>(h.dimension() - 1))};
}

Amplitudes expand_subspace(const SearchHamiltonian& h, const std::array<Complex, 2>& coords) {
    const Complex rest = coords[1] / std::sqrt(static_cast<double>(h.dimension() - 1));
    Amplitudes out(h.dimension(), rest);
    out[h.marked()] = coords[0];
    return out;
}

double off_span_weight(const SearchHamiltonian& h, std::span<const Complex> psi) {
    check_dimension(h, psi.size());
    if (h.dimension() == 2) return 0.0;
    // Inside the span all amplitudes off the marked item are equal, so the
    // off-span weight is the spread of those amplitudes about their mean.
    Complex mean{};
    for (std::size_t i = 0; i < psi.size(); ++i) {
        if (i != h.marked()) mean += psi[i];
    }
    mean /= static_cast<double>(h.dimension() - 1);
    double weight = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        if (i != h.marked()) weight += std::norm(psi[i] - mean);
    }
    return weight;
}

}  // namespace adiabatic
