#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qtcss/quantum_core.hpp"
#include "qtcss/rng.hpp"

namespace qtcss::protocol {

using HandleId = std::uint64_t;

enum class HandleStatus { live, consumed };

/// Token standing for one particle of the shared entangled state. A handle
/// is consumed by exactly one operation and nothing public duplicates one;
/// that single-use contract is the simulator's stand-in for no-cloning.
struct ShareHandle {
    HandleId id;
    std::uint64_t session_id;
    HandleStatus status;
};

/// What a proper subset of parties can see: the reduced state of their
/// particles plus its purity and its fidelity against the same-size pure
/// target. The matrix itself is materialized only when small enough to
/// hold densely; purity and fidelity are always present.
struct LeakageReport {
    int subset_size;
    std::optional<quantum::DensityMatrix> reduced_state;
    double purity;
    double fidelity;
    bool is_mixed;
};

/// Equator-basis classical-bit encoding: the two antipodal equator vectors
/// (|0> +- e^{i omega}|1>)/sqrt(2), with the plus vector standing for 1.
struct ClassicalBitEncoding {
    double omega;
    quantum::SecretQubit bit_one_vector;
    quantum::SecretQubit bit_zero_vector;
};

ClassicalBitEncoding equator_encoding(double omega);

quantum::SecretQubit encode_bit(int bit, const ClassicalBitEncoding& enc);

/// Measures q in the encoding's basis; exact encoding vectors decode
/// deterministically.
int decode_bit(const quantum::SecretQubit& q, const ClassicalBitEncoding& enc, SeededRng& rng);

/// Max entrywise difference between the reduced states seen under bit 0
/// and bit 1; 0 (below 1e-12) means the subset learns nothing.
double hiding_report(const quantum::DensityMatrix& bit_zero_state,
                     const quantum::DensityMatrix& bit_one_state);

struct TranscriptEvent {
    std::string op;
    std::string detail;
};

/// Single-owner state machine for one sharing of one secret qubit. The live
/// handle count always equals the qubit count of the GHZ form, and that
/// count is the (mandatory) reconstruction threshold. Sessions up to 12
/// qubits keep a dense statevector mirror, rebuilt through the actual CNOT
/// cascade and checked against the compact form after every mutation;
/// larger sessions run on the compact form alone.
///
/// Not thread-safe: operations on one session must be externally
/// serialized. Distinct sessions are independent.
class SharingSession {
public:
    static SharingSession deal(const quantum::SecretQubit& secret, int parties);

    std::uint64_t session_id() const { return session_id_; }
    const quantum::GhzForm& state() const { return state_; }
    int threshold() const { return state_.n; }
    bool closed() const { return closed_; }

    std::vector<HandleId> live_handles() const;
    std::vector<ShareHandle> handles() const;

    /// Consumes `handle` and replaces its particle with k entangled ones;
    /// the threshold rises by k - 1. Returns the k fresh handles.
    std::vector<HandleId> split(HandleId handle, int k);

    /// Consumes every handle and the session; requires exactly the full
    /// live set, else Errc::incomplete_quorum and nothing is consumed.
    quantum::SecretQubit reconstruct(std::span<const HandleId> handle_set);

    /// Non-destructive reduced-state analysis of a proper nonempty subset.
    /// A physical adversary could not read rho without measuring; the
    /// simulator exposes it as an analysis capability.
    LeakageReport analyze_subset(std::span<const HandleId> subset) const;

    const std::vector<TranscriptEvent>& transcript() const { return transcript_; }

    /// Dense mirror, present while the session is at most 12 qubits.
    const std::optional<quantum::StateVector>& dense_state() const { return dense_; }

private:
    SharingSession() = default;

    struct Slot {
        int position; // qubit index in the cascade register
        HandleStatus status;
    };

    std::vector<HandleId> issue_handles(int count, int first_position);
    void verify_mirror() const;
    const Slot& live_slot(HandleId id) const;
    void log(std::string op, std::string detail) const;

    std::uint64_t session_id_ = 0;
    quantum::GhzForm state_{1.0, 0.0, 1};
    std::map<HandleId, Slot> registry_;
    std::vector<std::pair<int, int>> cascade_; // applied CNOTs (control, target)
    std::optional<quantum::StateVector> dense_;
    mutable std::vector<TranscriptEvent> transcript_;
    HandleId next_handle_ = 1;
    bool closed_ = false;
};

/// Spec-level entry point; identical to SharingSession::deal.
SharingSession deal_quantum(const quantum::SecretQubit& secret, int parties);

} // namespace qtcss::protocol
