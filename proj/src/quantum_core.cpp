#include "qtcss/quantum_core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include <Eigen/Dense>

namespace qtcss::quantum {

namespace {

constexpr double kPi = std::numbers::pi;

double norm_sq(cplx a, cplx b)
{
    return std::norm(a) + std::norm(b);
}

int qubit_count_for_dim(std::size_t dim, const char* what)
{
    int m = 0;
    while ((std::size_t{1} << m) < dim && m <= kMaxDenseQubits)
        ++m;
    if ((std::size_t{1} << m) != dim || m < 1)
        raise(Errc::bad_parameters, std::string(what) + " dimension is not a power of two >= 2");
    return m;
}

void check_psd(const std::vector<cplx>& entries, std::size_t dim, int qubit_count)
{
    double max_off_diag = 0.0;
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            if (r != c)
                max_off_diag = std::max(max_off_diag, std::abs(entries[r * dim + c]));

    if (max_off_diag < kStructuralTol) {
        // Diagonal fast path; the GHZ-derived matrices land here.
        for (std::size_t r = 0; r < dim; ++r)
            if (entries[r * dim + r].real() < -kNormTol)
                raise(Errc::bad_parameters, "density matrix has a negative diagonal entry");
        return;
    }
    if (qubit_count > kMaxEigenQubits)
        return; // non-diagonal and too large to eigensolve; Hermiticity+trace already hold
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = entries[r * dim + c];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -kNormTol)
        raise(Errc::bad_parameters, "density matrix has a negative eigenvalue");
}

} // namespace

SecretQubit::SecretQubit(cplx a_in, cplx b_in) : a(a_in), b(b_in)
{
    if (std::abs(norm_sq(a, b) - 1.0) > kNormTol)
        raise(Errc::bad_parameters, "qubit amplitudes are not normalized");
}

SecretQubit SecretQubit::from_bloch(double theta, double omega)
{
    return {std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), omega)};
}

StateVector::StateVector(std::vector<cplx> amplitudes) : amps_(std::move(amplitudes))
{
    qubit_count_ = qubit_count_for_dim(amps_.size(), "statevector");
    if (qubit_count_ > kMaxDenseQubits)
        raise(Errc::too_many_qubits,
              std::to_string(qubit_count_) + " qubits exceed the dense cap of " +
                  std::to_string(kMaxDenseQubits));
    double n2 = 0.0;
    for (const auto& a : amps_)
        n2 += std::norm(a);
    if (std::abs(n2 - 1.0) > kNormTol)
        raise(Errc::bad_parameters, "statevector is not normalized");
}

StateVector StateVector::basis_state(int qubit_count, std::size_t index)
{
    if (qubit_count < 1 || qubit_count > kMaxDenseQubits)
        raise(Errc::too_many_qubits, "basis state qubit count out of range");
    std::vector<cplx> amps(std::size_t{1} << qubit_count, 0.0);
    amps.at(index) = 1.0;
    return StateVector(std::move(amps));
}

StateVector StateVector::from_qubit(const SecretQubit& q)
{
    return StateVector({q.a, q.b});
}

GhzForm::GhzForm(cplx a_in, cplx b_in, int n_in) : a(a_in), b(b_in), n(n_in)
{
    if (n < 1)
        raise(Errc::bad_parameters, "GHZ form needs at least one qubit");
    if (std::abs(norm_sq(a, b) - 1.0) > kNormTol)
        raise(Errc::bad_parameters, "GHZ amplitudes are not normalized");
}

StateVector expand(const GhzForm& g)
{
    if (g.n > kMaxDenseQubits)
        raise(Errc::too_many_qubits,
              std::to_string(g.n) + " qubits exceed the dense cap of " +
                  std::to_string(kMaxDenseQubits));
    std::vector<cplx> amps(std::size_t{1} << g.n, 0.0);
    amps.front() = g.a;
    amps.back() = g.b;
    return StateVector(std::move(amps));
}

StateVector tensor_with_zeros(const StateVector& s, int extra)
{
    if (extra < 0 || s.qubit_count() + extra > kMaxDenseQubits)
        raise(Errc::too_many_qubits, "tensor product exceeds the dense cap");
    std::vector<cplx> amps(std::size_t{1} << (s.qubit_count() + extra), 0.0);
    for (std::size_t i = 0; i < s.dim(); ++i)
        amps[i << extra] = s[i];
    return StateVector(std::move(amps));
}

StateVector apply_cnot(const StateVector& s, int control, int target)
{
    const int m = s.qubit_count();
    if (control < 0 || control >= m || target < 0 || target >= m)
        raise(Errc::index_out_of_range, "qubit index outside register");
    if (control == target)
        raise(Errc::control_equals_target, "control and target coincide");

    // Index bit of qubit q under the big-endian convention.
    const std::size_t control_bit = std::size_t{1} << (m - 1 - control);
    const std::size_t target_bit = std::size_t{1} << (m - 1 - target);

    std::vector<cplx> amps = s.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i)
        if ((i & control_bit) && !(i & target_bit))
            std::swap(amps[i], amps[i | target_bit]);
    return StateVector(std::move(amps));
}

double overlap_magnitude(const StateVector& s, const StateVector& t)
{
    if (s.dim() != t.dim())
        raise(Errc::dimension_mismatch, "states live in different registers");
    cplx acc = 0.0;
    for (std::size_t i = 0; i < s.dim(); ++i)
        acc += std::conj(s[i]) * t[i];
    return std::abs(acc);
}

DensityMatrix::DensityMatrix(std::vector<cplx> entries, int qubit_count)
    : entries_(std::move(entries)), qubit_count_(qubit_count)
{
    if (qubit_count < 1 || qubit_count > kMaxDensityQubits)
        raise(Errc::too_many_qubits, "density matrix qubit count out of range");
    dim_ = std::size_t{1} << qubit_count;
    if (entries_.size() != dim_ * dim_)
        raise(Errc::dimension_mismatch, "entry count does not match 2^k x 2^k");

    cplx trace = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        trace += entries_[r * dim_ + r];
        for (std::size_t c = r; c < dim_; ++c)
            if (std::abs(entries_[r * dim_ + c] - std::conj(entries_[c * dim_ + r])) >
                kStructuralTol)
                raise(Errc::bad_parameters, "density matrix is not Hermitian");
    }
    if (std::abs(trace - 1.0) > kNormTol)
        raise(Errc::bad_parameters, "density matrix trace differs from 1");
    check_psd(entries_, dim_, qubit_count_);
}

std::string DensityMatrix::to_text() const
{
    std::string out;
    char buf[64];
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            const cplx e = at(r, c);
            std::snprintf(buf, sizeof buf, "%.12g %.12g", e.real(), e.imag());
            out += buf;
            out += (c + 1 == dim_) ? '\n' : ' ';
        }
    }
    return out;
}

DensityMatrix partial_trace(const StateVector& s, std::span<const int> keep)
{
    const int m = s.qubit_count();
    if (keep.empty())
        raise(Errc::empty_keep_set, "keep set is empty");
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= m)
            raise(Errc::index_out_of_range, "kept qubit index outside register");
        if (i > 0 && keep[i] <= keep[i - 1])
            raise(Errc::bad_parameters, "keep set must be strictly ascending");
    }

    const int k = static_cast<int>(keep.size());
    if (k > kMaxDensityQubits)
        raise(Errc::too_many_qubits, "reduced matrix too large to materialize");
    const std::size_t kept_dim = std::size_t{1} << k;
    const int dropped = m - k;
    const std::size_t env_dim = std::size_t{1} << dropped;

    std::vector<int> traced;
    traced.reserve(dropped);
    for (int q = 0, j = 0; q < m; ++q) {
        if (j < k && keep[j] == q)
            ++j;
        else
            traced.push_back(q);
    }

    // Position masks of each kept/traced qubit in the full index.
    const auto bit_of = [m](int q) { return std::size_t{1} << (m - 1 - q); };

    std::vector<std::size_t> kept_stride(keep.size()), env_stride(traced.size());
    for (int i = 0; i < k; ++i)
        kept_stride[i] = bit_of(keep[i]);
    for (int i = 0; i < dropped; ++i)
        env_stride[i] = bit_of(traced[i]);

    const auto compose = [](std::size_t pattern, const std::vector<std::size_t>& strides) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < strides.size(); ++i)
            if (pattern & (std::size_t{1} << (strides.size() - 1 - i)))
                idx |= strides[i];
        return idx;
    };

    // rho = sum_e v_e v_e^dagger over environment patterns e. Zero slices
    // and zero entries are skipped, which keeps GHZ-shaped inputs cheap
    // without changing the result.
    std::vector<cplx> rho(kept_dim * kept_dim, 0.0);
    std::vector<cplx> slice(kept_dim);
    std::vector<std::size_t> nonzero;
    nonzero.reserve(kept_dim);
    for (std::size_t e = 0; e < env_dim; ++e) {
        const std::size_t env_idx = compose(e, env_stride);
        nonzero.clear();
        for (std::size_t r = 0; r < kept_dim; ++r) {
            slice[r] = s[env_idx | compose(r, kept_stride)];
            if (slice[r] != 0.0)
                nonzero.push_back(r);
        }
        for (const auto r : nonzero)
            for (const auto c : nonzero)
                rho[r * kept_dim + c] += slice[r] * std::conj(slice[c]);
    }
    return DensityMatrix(std::move(rho), k);
}

double purity(const DensityMatrix& rho)
{
    // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
    double acc = 0.0;
    for (const auto& e : rho.entries())
        acc += std::norm(e);
    return acc;
}

double fidelity_with_pure(const DensityMatrix& rho, const StateVector& sigma)
{
    if (sigma.dim() != rho.dim())
        raise(Errc::dimension_mismatch, "state and density matrix dimensions differ");
    cplx acc = 0.0;
    for (std::size_t r = 0; r < rho.dim(); ++r) {
        cplx row = 0.0;
        for (std::size_t c = 0; c < rho.dim(); ++c)
            row += rho.at(r, c) * sigma[c];
        acc += std::conj(sigma[r]) * row;
    }
    if (std::abs(acc.imag()) > kStructuralTol)
        raise(Errc::bad_parameters, "fidelity came out non-real");
    return acc.real();
}

MeasurementBasis::MeasurementBasis(double theta_in, double omega_in)
    : theta(theta_in), omega(omega_in)
{
    if (theta < 0.0 || theta > kPi)
        raise(Errc::bad_parameters, "polar angle outside [0, pi]");
}

SecretQubit MeasurementBasis::plus_vector() const
{
    return SecretQubit::from_bloch(theta, omega);
}

SecretQubit MeasurementBasis::minus_vector() const
{
    // Antipodal Bloch direction; orthonormal to the plus vector for every
    // theta, and equal to (|0> - e^{i omega}|1>)/sqrt(2) on the equator.
    return {std::sin(theta / 2.0), -std::polar(std::cos(theta / 2.0), omega)};
}

MeasurementBasis equator_basis(double omega)
{
    return {kPi / 2.0, omega};
}

int measure(const SecretQubit& q, const MeasurementBasis& basis, SeededRng& rng)
{
    const SecretQubit plus = basis.plus_vector();
    const double p_plus = std::norm(std::conj(plus.a) * q.a + std::conj(plus.b) * q.b);
    return rng.next_unit() < p_plus ? 0 : 1;
}

FidelitySweepResult sweep_subset_fidelity(double step)
{
    if (step <= 0.0 || step > 1.0)
        raise(Errc::bad_parameters, "sweep step must be in (0, 1]");
    const auto steps = static_cast<std::size_t>(std::llround(1.0 / step));
    FidelitySweepResult best{0.0, 1.0};
    for (std::size_t i = 0; i <= steps; ++i) {
        const double x = std::min(1.0, static_cast<double>(i) * step);
        const double f = x * x + (1.0 - x) * (1.0 - x);
        if (f < best.f_min)
            best = {x, f};
    }
    return best;
}

} // namespace qtcss::quantum
