// Search instance and the interpolating Hamiltonian
//
//   H(s) = (1 - s) H0 + s Hm,   H0 = I - |psi0><psi0|,   Hm = I - |m><m|
//
// H(s) is the identity minus a rank-2 term, so it is applied in O(N) without
// ever forming the matrix. The dense form exists only as a test oracle.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace adiabatic {

using Complex = std::complex<double>;
using Amplitudes = std::vector<Complex>;

inline constexpr double kDefaultNormTolerance = 1e-9;
inline constexpr std::size_t kDenseOracleCap = 256;

/// Database of N = 2^n items with one marked basis index.
class SearchHamiltonian {
public:
    SearchHamiltonian(int n_qubits, std::uint64_t marked);

    /// Throws std::invalid_argument unless `dimension` is a power of two >= 2.
    static SearchHamiltonian from_dimension(std::uint64_t dimension, std::uint64_t marked = 0);

    int n_qubits() const noexcept { return n_qubits_; }
    std::uint64_t dimension() const noexcept { return dimension_; }
    std::uint64_t marked() const noexcept { return marked_; }

    SearchHamiltonian with_marked(std::uint64_t marked) const { return {n_qubits_, marked}; }

private:
    int n_qubits_;
    std::uint64_t dimension_;
    std::uint64_t marked_;
};

/// Normalized amplitude vector. Construction checks the norm; evolved states
/// whose drift is tracked elsewhere go through `from_evolved`.
class QuantumState {
public:
    explicit QuantumState(Amplitudes amplitudes, double norm_tolerance = kDefaultNormTolerance);

    static QuantumState basis(std::uint64_t dimension, std::uint64_t index);
    static QuantumState from_evolved(Amplitudes amplitudes);

    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    std::size_t size() const noexcept { return amplitudes_.size(); }
    const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }
    double norm_squared() const noexcept;

private:
    struct Unchecked {};
    QuantumState(Amplitudes amplitudes, Unchecked) : amplitudes_(std::move(amplitudes)) {}

    Amplitudes amplitudes_;
};

QuantumState make_uniform_state(const SearchHamiltonian& h);

/// out = H(s) psi. One reduction pass for <psi0|psi>, one update pass.
/// `out` may alias `psi`.
void apply_hamiltonian(const SearchHamiltonian& h, double s, std::span<const Complex> psi,
                       std::span<Complex> out);
Amplitudes apply_hamiltonian(const SearchHamiltonian& h, double s, std::span<const Complex> psi);

/// Row-major real symmetric matrix.
struct DenseMatrix {
    std::size_t dim = 0;
    std::vector<double> values;

    double operator()(std::size_t row, std::size_t col) const { return values[row * dim + col]; }
};

/// Explicit H(s). Refuses dimensions above `cap`; this is an oracle for tests.
DenseMatrix dense_matrix(const SearchHamiltonian& h, double s, std::size_t cap = kDenseOracleCap);

/// 2x2 symmetric block [[mm, mc], [mc, cc]].
struct Block2 {
    double mm;
    double mc;
    double cc;
};

/// H(s) restricted to span{|m>, |m_perp>}, where |m_perp> is the normalized
/// part of |psi0> orthogonal to |m>. The span is invariant under H(s) and
/// the block depends on N only, not on which item is marked.
Block2 reduced_block(std::uint64_t dimension, double s);
inline Block2 reduced_block(const SearchHamiltonian& h, double s) { return reduced_block(h.dimension(), s); }

/// Coordinates (<m|psi>, <m_perp|psi>) of the projection onto the invariant span.
std::array<Complex, 2> project_to_subspace(const SearchHamiltonian& h, std::span<const Complex> psi);

/// Full state from subspace coordinates.
Amplitudes expand_subspace(const SearchHamiltonian& h, const std::array<Complex, 2>& coords);

/// Squared norm of psi outside span{|psi0>, |m>}.
double off_span_weight(const SearchHamiltonian& h, std::span<const Complex> psi);

}  // namespace adiabatic
