#include "qtcss/protocol.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>

namespace qtcss::protocol {

namespace {

using quantum::cplx;
using quantum::DensityMatrix;
using quantum::GhzForm;
using quantum::SecretQubit;
using quantum::StateVector;

std::uint64_t fresh_session_id()
{
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1);
}

/// Reduced state of any proper subset of a GHZ form, from the proven corner
/// structure: |a|^2 at the top-left corner, |b|^2 at the bottom-right.
DensityMatrix ghz_corner_reduced(const GhzForm& g, int subset_size)
{
    const std::size_t dim = std::size_t{1} << subset_size;
    std::vector<cplx> entries(dim * dim, 0.0);
    entries.front() = std::norm(g.a);
    entries.back() = std::norm(g.b);
    return {std::move(entries), subset_size};
}

std::string ids_to_string(std::span<const HandleId> ids)
{
    std::string s = "{";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(ids[i]);
    }
    return s + "}";
}

} // namespace

ClassicalBitEncoding equator_encoding(double omega)
{
    const quantum::MeasurementBasis basis = quantum::equator_basis(omega);
    return {omega, basis.plus_vector(), basis.minus_vector()};
}

quantum::SecretQubit encode_bit(int bit, const ClassicalBitEncoding& enc)
{
    if (bit != 0 && bit != 1)
        raise(Errc::bad_parameters, "bit must be 0 or 1");
    return bit == 1 ? enc.bit_one_vector : enc.bit_zero_vector;
}

int decode_bit(const quantum::SecretQubit& q, const ClassicalBitEncoding& enc, SeededRng& rng)
{
    const quantum::MeasurementBasis basis = quantum::equator_basis(enc.omega);
    // Outcome 0 is the plus vector, which encodes bit 1.
    return quantum::measure(q, basis, rng) == 0 ? 1 : 0;
}

double hiding_report(const quantum::DensityMatrix& bit_zero_state,
                     const quantum::DensityMatrix& bit_one_state)
{
    if (bit_zero_state.dim() != bit_one_state.dim())
        raise(Errc::dimension_mismatch, "reduced states have different dimensions");
    double max_diff = 0.0;
    for (std::size_t i = 0; i < bit_zero_state.entries().size(); ++i)
        max_diff = std::max(max_diff,
                            std::abs(bit_zero_state.entries()[i] - bit_one_state.entries()[i]));
    return max_diff;
}

SharingSession SharingSession::deal(const SecretQubit& secret, int parties)
{
    if (parties < 1)
        raise(Errc::bad_party_count, "cannot share to " + std::to_string(parties) + " parties");

    SharingSession s;
    s.session_id_ = fresh_session_id();
    s.state_ = GhzForm(secret.a, secret.b, parties);
    for (int q = 1; q < parties; ++q)
        s.cascade_.emplace_back(0, q);
    if (parties <= quantum::kMaxDensityQubits) {
        StateVector v = parties == 1
                            ? StateVector::from_qubit(secret)
                            : quantum::tensor_with_zeros(StateVector::from_qubit(secret),
                                                         parties - 1);
        for (const auto& [control, target] : s.cascade_)
            v = quantum::apply_cnot(v, control, target);
        s.dense_ = std::move(v);
    }
    s.issue_handles(parties, 0);
    s.verify_mirror();
    s.log("deal", "n=" + std::to_string(parties) + " state=" + std::to_string(parties) +
                      "-qubit entangled pair-amplitude form");
    return s;
}

std::vector<HandleId> SharingSession::live_handles() const
{
    std::vector<HandleId> out;
    for (const auto& [id, slot] : registry_)
        if (slot.status == HandleStatus::live)
            out.push_back(id);
    return out;
}

std::vector<ShareHandle> SharingSession::handles() const
{
    std::vector<ShareHandle> out;
    out.reserve(registry_.size());
    for (const auto& [id, slot] : registry_)
        out.push_back({id, session_id_, slot.status});
    return out;
}

std::vector<HandleId> SharingSession::issue_handles(int count, int first_position)
{
    std::vector<HandleId> fresh;
    fresh.reserve(count);
    for (int i = 0; i < count; ++i) {
        registry_.emplace(next_handle_, Slot{first_position + i, HandleStatus::live});
        fresh.push_back(next_handle_++);
    }
    return fresh;
}

const SharingSession::Slot& SharingSession::live_slot(HandleId id) const
{
    const auto it = registry_.find(id);
    if (it == registry_.end())
        raise(Errc::unknown_handle, "handle " + std::to_string(id) + " was never issued here");
    if (it->second.status == HandleStatus::consumed)
        raise(Errc::share_consumed, "handle " + std::to_string(id) + " is already consumed");
    return it->second;
}

void SharingSession::verify_mirror() const
{
    if (!dense_)
        return;
    // The compact form and the replayed cascade must agree entrywise.
    const StateVector expanded = quantum::expand(state_);
    for (std::size_t i = 0; i < expanded.dim(); ++i)
        if (std::abs(expanded[i] - (*dense_)[i]) > quantum::kStructuralTol)
            throw std::logic_error("compact form diverged from the dense CNOT replay");
}

void SharingSession::log(std::string op, std::string detail) const
{
    transcript_.push_back({std::move(op), std::move(detail)});
}

std::vector<HandleId> SharingSession::split(HandleId handle, int k)
{
    if (k < 2)
        raise(Errc::bad_parameters, "a split must produce at least 2 shares");
    const Slot slot = live_slot(handle); // copy; registry mutates below

    const int old_n = state_.n;
    const int new_n = old_n + k - 1;
    state_ = GhzForm(state_.a, state_.b, new_n);

    // The particle at `slot.position` becomes one of k entangled particles;
    // the k-1 new ones are appended to the register.
    for (int q = old_n; q < new_n; ++q)
        cascade_.emplace_back(slot.position, q);

    if (dense_ && new_n <= quantum::kMaxDensityQubits) {
        StateVector v = quantum::tensor_with_zeros(*dense_, k - 1);
        for (int q = old_n; q < new_n; ++q)
            v = quantum::apply_cnot(v, slot.position, q);
        dense_ = std::move(v);
    } else {
        dense_.reset();
    }

    registry_[handle].status = HandleStatus::consumed;
    auto fresh = issue_handles(1, slot.position);
    auto appended = issue_handles(k - 1, old_n);
    fresh.insert(fresh.end(), appended.begin(), appended.end());

    verify_mirror();
    log("split", "handle=" + std::to_string(handle) + " k=" + std::to_string(k) +
                     " threshold " + std::to_string(old_n) + "->" + std::to_string(new_n));
    return fresh;
}

quantum::SecretQubit SharingSession::reconstruct(std::span<const HandleId> handle_set)
{
    if (closed_)
        raise(Errc::share_consumed, "session is closed; every share was consumed");
    std::set<HandleId> given;
    for (auto id : handle_set) {
        live_slot(id); // unknown / consumed checks
        given.insert(id);
    }
    const auto live = live_handles();
    const std::set<HandleId> live_set(live.begin(), live.end());
    if (given != live_set || handle_set.size() != live.size()) {
        log("reconstruct", "attempt with " + ids_to_string(handle_set) +
                               " rejected: IncompleteQuorum (threshold " +
                               std::to_string(state_.n) + ")");
        raise(Errc::incomplete_quorum,
              std::to_string(handle_set.size()) + " handles given but the threshold is " +
                  std::to_string(state_.n) + " and every live share must be present");
    }

    SecretQubit secret{state_.a, state_.b};
    if (dense_) {
        // Uncompute: replay the cascade in reverse, then read the secret off
        // qubit 0 with all ancillas back in |0>.
        StateVector v = *dense_;
        for (auto it = cascade_.rbegin(); it != cascade_.rend(); ++it)
            v = quantum::apply_cnot(v, it->first, it->second);
        const std::size_t one_idx = std::size_t{1} << (v.qubit_count() - 1);
        for (std::size_t i = 0; i < v.dim(); ++i)
            if (i != 0 && i != one_idx && std::abs(v[i]) > quantum::kStructuralTol)
                throw std::logic_error("uncompute left amplitude outside the secret qubit");
        secret = SecretQubit{v[0], v[one_idx]};
    }

    for (auto& [id, slot] : registry_)
        slot.status = HandleStatus::consumed;
    closed_ = true;
    log("reconstruct", "all " + std::to_string(handle_set.size()) +
                           " shares consumed; secret released; session closed");
    return secret;
}

LeakageReport SharingSession::analyze_subset(std::span<const HandleId> subset) const
{
    std::set<int> positions;
    for (auto id : subset) {
        const Slot& slot = live_slot(id);
        if (!positions.insert(slot.position).second)
            raise(Errc::bad_parameters, "handle " + std::to_string(id) + " listed twice");
    }
    const std::size_t live_count = live_handles().size();
    if (subset.empty() || subset.size() >= live_count)
        raise(Errc::not_proper_subset,
              "subset of " + std::to_string(subset.size()) + " is not a proper nonempty part of " +
                  std::to_string(live_count) + " live shares");

    const int k = static_cast<int>(subset.size());
    LeakageReport report{k, std::nullopt, 0.0, 0.0, false};

    if (dense_) {
        const std::vector<int> keep(positions.begin(), positions.end());
        report.reduced_state = quantum::partial_trace(*dense_, keep);
    } else if (k <= quantum::kMaxEigenQubits) {
        report.reduced_state = ghz_corner_reduced(state_, k);
    }

    if (report.reduced_state) {
        report.purity = quantum::purity(*report.reduced_state);
        report.fidelity = quantum::fidelity_with_pure(
            *report.reduced_state, quantum::expand(GhzForm(state_.a, state_.b, k)));
    } else {
        // Corner form without materializing 2^k entries.
        const double a2 = std::norm(state_.a);
        const double b2 = std::norm(state_.b);
        report.purity = a2 * a2 + b2 * b2;
        report.fidelity = a2 * a2 + b2 * b2;
    }
    report.is_mixed = report.purity < 1.0 - quantum::kNormTol;

    log("analyze", "subset=" + std::to_string(k) + " purity=" + std::to_string(report.purity) +
                       " fidelity=" + std::to_string(report.fidelity));
    return report;
}

SharingSession deal_quantum(const quantum::SecretQubit& secret, int parties)
{
    return SharingSession::deal(secret, parties);
}

} // namespace qtcss::protocol
