#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qtcss/errors.hpp"
#include "qtcss/rng.hpp"

namespace qtcss::quantum {

using cplx = std::complex<double>;

/// Dense statevectors are capped here; the protocol layer works on the
/// two-amplitude closed form beyond it and uses dense states as an oracle.
inline constexpr int kMaxDenseQubits = 20;
/// Reduced density matrices are materialized only up to this many qubits.
inline constexpr int kMaxDensityQubits = 12;
/// Eigenvalue-based positivity checks run only up to this many qubits;
/// larger matrices fall back to the diagonal fast path when it applies.
inline constexpr int kMaxEigenQubits = 8;

inline constexpr double kNormTol = 1e-10;       // norms, traces, probabilities
inline constexpr double kStructuralTol = 1e-12; // entries that must vanish

/// One-qubit pure state a|0> + b|1>, normalized within kNormTol.
struct SecretQubit {
    cplx a;
    cplx b;

    SecretQubit(cplx a_in, cplx b_in);

    /// cos(theta/2)|0> + e^{i omega} sin(theta/2)|1>.
    static SecretQubit from_bloch(double theta, double omega);
};

/// Dense m-qubit state. Qubit 0 is the leftmost ket position, so the
/// amplitude index is the big-endian reading of the bit string: |q0 q1 q2>
/// puts q0 in the top bit of the index.
class StateVector {
public:
    explicit StateVector(std::vector<cplx> amplitudes);

    static StateVector basis_state(int qubit_count, std::size_t index);
    static StateVector from_qubit(const SecretQubit& q);

    int qubit_count() const { return qubit_count_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<cplx>& amplitudes() const { return amps_; }
    cplx operator[](std::size_t i) const { return amps_[i]; }

private:
    std::vector<cplx> amps_;
    int qubit_count_;
};

/// Compact form of a|0...0> + b|1...1> on n qubits.
struct GhzForm {
    cplx a;
    cplx b;
    int n;

    GhzForm(cplx a_in, cplx b_in, int n_in);
};

/// Dense expansion of a GHZ form: a at index 0, b at index 2^n - 1.
StateVector expand(const GhzForm& g);

/// Appends `extra` qubits in |0> to the right of the register.
StateVector tensor_with_zeros(const StateVector& s, int extra);

/// Controlled-NOT; swaps amplitude pairs whose control bit is 1.
StateVector apply_cnot(const StateVector& s, int control, int target);

/// |<s|t>|, for comparing states up to global phase.
double overlap_magnitude(const StateVector& s, const StateVector& t);

/// Dense density matrix over k qubits. Construction validates Hermiticity
/// (1e-12), unit trace (1e-10) and positive semidefiniteness (eigensolve up
/// to kMaxEigenQubits, diagonal fast path above).
class DensityMatrix {
public:
    DensityMatrix(std::vector<cplx> entries, int qubit_count);

    int qubit_count() const { return qubit_count_; }
    std::size_t dim() const { return dim_; }
    cplx at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
    const std::vector<cplx>& entries() const { return entries_; }

    /// Row-major decimal text dump, one "re im" pair per entry.
    std::string to_text() const;

private:
    std::vector<cplx> entries_;
    std::size_t dim_;
    int qubit_count_;
};

/// Reduced density matrix of the kept qubits (indices strictly ascending).
/// Keeping every qubit returns the pure projector |s><s|.
DensityMatrix partial_trace(const StateVector& s, std::span<const int> keep);

/// Tr(rho^2); 1 exactly for pure states, < 1 for mixed ones.
double purity(const DensityMatrix& rho);

/// <sigma|rho|sigma> for a pure target sigma of matching dimension.
double fidelity_with_pure(const DensityMatrix& rho, const StateVector& sigma);

/// Orthonormal one-qubit measurement basis for the Bloch direction
/// (theta, omega): the plus vector is cos(theta/2)|0> + e^{i omega}
/// sin(theta/2)|1> and the minus vector is its antipode.
struct MeasurementBasis {
    double theta;
    double omega;

    MeasurementBasis(double theta_in, double omega_in);

    SecretQubit plus_vector() const;
    SecretQubit minus_vector() const;
};

/// Basis on the Bloch-sphere equator: (|0> +- e^{i omega}|1>)/sqrt(2).
MeasurementBasis equator_basis(double omega);

/// Born-rule measurement. Returns 0 when the plus vector fires, 1 for the
/// minus vector; in the computational basis (theta = 0) outcome 0 is |0>.
int measure(const SecretQubit& q, const MeasurementBasis& basis, SeededRng& rng);

struct FidelitySweepResult {
    double x_min; // |a|^2 at the minimum
    double f_min;
};

/// Grid sweep of the leaked-subset fidelity F(x) = x^2 + (1-x)^2 over
/// x = |a|^2 in [0, 1].
FidelitySweepResult sweep_subset_fidelity(double step);

} // namespace qtcss::quantum
