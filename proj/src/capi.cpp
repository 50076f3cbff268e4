#include "qtcss/qtcss.h"

#include <algorithm>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtcss/classical_tcss.hpp"
#include "qtcss/errors.hpp"
#include "qtcss/protocol.hpp"
#include "qtcss/quantum_core.hpp"
#include "qtcss/rng.hpp"
#include "qtcss/scenario.hpp"

using nlohmann::json;

struct qtcss_session {
    qtcss::protocol::SharingSession impl;
};

namespace {

thread_local std::string g_last_error;

qtcss_status status_from(qtcss::Errc code)
{
    switch (code) {
    case qtcss::Errc::zero_inverse: return QTCSS_ERR_ZERO_INVERSE;
    case qtcss::Errc::modulus_mismatch: return QTCSS_ERR_MODULUS_MISMATCH;
    case qtcss::Errc::duplicate_abscissa: return QTCSS_ERR_DUPLICATE_ABSCISSA;
    case qtcss::Errc::singular_system: return QTCSS_ERR_SINGULAR_SYSTEM;
    case qtcss::Errc::bad_parameters: return QTCSS_ERR_BAD_PARAMETERS;
    case qtcss::Errc::duplicate_party: return QTCSS_ERR_DUPLICATE_PARTY;
    case qtcss::Errc::insufficient_shares: return QTCSS_ERR_INSUFFICIENT_SHARES;
    case qtcss::Errc::too_many_qubits: return QTCSS_ERR_TOO_MANY_QUBITS;
    case qtcss::Errc::index_out_of_range: return QTCSS_ERR_INDEX_OUT_OF_RANGE;
    case qtcss::Errc::control_equals_target: return QTCSS_ERR_CONTROL_EQUALS_TARGET;
    case qtcss::Errc::empty_keep_set: return QTCSS_ERR_EMPTY_KEEP_SET;
    case qtcss::Errc::dimension_mismatch: return QTCSS_ERR_DIMENSION_MISMATCH;
    case qtcss::Errc::bad_party_count: return QTCSS_ERR_BAD_PARTY_COUNT;
    case qtcss::Errc::share_consumed: return QTCSS_ERR_SHARE_CONSUMED;
    case qtcss::Errc::unknown_handle: return QTCSS_ERR_UNKNOWN_HANDLE;
    case qtcss::Errc::incomplete_quorum: return QTCSS_ERR_INCOMPLETE_QUORUM;
    case qtcss::Errc::not_proper_subset: return QTCSS_ERR_NOT_PROPER_SUBSET;
    case qtcss::Errc::invalid_scenario: return QTCSS_ERR_INVALID_SCENARIO;
    }
    return QTCSS_ERR_INTERNAL;
}

/// Runs `body`, translating exceptions into status codes and recording the
/// message for qtcss_last_error().
template <typename Fn>
qtcss_status guarded(Fn&& body)
{
    try {
        body();
        return QTCSS_OK;
    } catch (const qtcss::Error& e) {
        g_last_error = e.what();
        return status_from(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return QTCSS_ERR_BAD_ALLOC;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return QTCSS_ERR_INTERNAL;
    }
}

qtcss_status fail_bad_arg(const char* message)
{
    g_last_error = message;
    return QTCSS_ERR_BAD_PARAMETERS;
}

char* copy_out(const std::string& s)
{
    char* mem = new char[s.size() + 1];
    std::memcpy(mem, s.c_str(), s.size() + 1);
    return mem;
}

std::vector<qtcss::classical::ClassicalShare> shares_from_array(const char* shares_array)
{
    json arr;
    try {
        arr = json::parse(shares_array);
    } catch (const json::exception& e) {
        qtcss::raise(qtcss::Errc::bad_parameters,
                     std::string("share array is not valid JSON: ") + e.what());
    }
    if (!arr.is_array() || arr.empty())
        qtcss::raise(qtcss::Errc::bad_parameters, "expected a nonempty JSON array of shares");
    std::vector<qtcss::classical::ClassicalShare> shares;
    shares.reserve(arr.size());
    for (const auto& rec : arr)
        shares.push_back(qtcss::classical::share_from_record(rec.dump()));
    return shares;
}

std::string shares_to_array(const std::vector<qtcss::classical::ClassicalShare>& shares)
{
    json arr = json::array();
    for (const auto& s : shares)
        arr.push_back(json::parse(qtcss::classical::to_record(s)));
    return arr.dump();
}

} // namespace

extern "C" {

const char* qtcss_status_name(qtcss_status status)
{
    switch (status) {
    case QTCSS_OK: return "Ok";
    case QTCSS_ERR_ZERO_INVERSE: return "ZeroInverse";
    case QTCSS_ERR_MODULUS_MISMATCH: return "ModulusMismatch";
    case QTCSS_ERR_DUPLICATE_ABSCISSA: return "DuplicateAbscissa";
    case QTCSS_ERR_SINGULAR_SYSTEM: return "SingularSystem";
    case QTCSS_ERR_BAD_PARAMETERS: return "BadParameters";
    case QTCSS_ERR_DUPLICATE_PARTY: return "DuplicateParty";
    case QTCSS_ERR_INSUFFICIENT_SHARES: return "InsufficientShares";
    case QTCSS_ERR_TOO_MANY_QUBITS: return "TooManyQubits";
    case QTCSS_ERR_INDEX_OUT_OF_RANGE: return "IndexOutOfRange";
    case QTCSS_ERR_CONTROL_EQUALS_TARGET: return "ControlEqualsTarget";
    case QTCSS_ERR_EMPTY_KEEP_SET: return "EmptyKeepSet";
    case QTCSS_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
    case QTCSS_ERR_BAD_PARTY_COUNT: return "BadPartyCount";
    case QTCSS_ERR_SHARE_CONSUMED: return "ShareConsumed";
    case QTCSS_ERR_UNKNOWN_HANDLE: return "UnknownHandle";
    case QTCSS_ERR_INCOMPLETE_QUORUM: return "IncompleteQuorum";
    case QTCSS_ERR_NOT_PROPER_SUBSET: return "NotProperSubset";
    case QTCSS_ERR_INVALID_SCENARIO: return "InvalidScenario";
    case QTCSS_ERR_BUFFER_TOO_SMALL: return "BufferTooSmall";
    case QTCSS_ERR_BAD_ALLOC: return "BadAlloc";
    case QTCSS_ERR_INTERNAL: return "Internal";
    }
    return "Unknown";
}

const char* qtcss_last_error(void)
{
    return g_last_error.c_str();
}

void qtcss_string_free(char* s)
{
    delete[] s;
}

const char* qtcss_version(void)
{
    return "1.0.0";
}

qtcss_status qtcss_classical_deal(uint32_t secret, uint32_t modulus, uint32_t parties,
                                  uint32_t dx, uint32_t dy, uint64_t seed, char** out_shares)
{
    if (!out_shares)
        return fail_bad_arg("out_shares is null");
    return guarded([&] {
        qtcss::SeededRng rng(seed);
        const auto dealing = qtcss::classical::deal(qtcss::gf::FieldElement(secret, modulus),
                                                    parties, dx, dy, rng);
        *out_shares = copy_out(shares_to_array(dealing.shares));
    });
}

qtcss_status qtcss_classical_example_shares(uint32_t parties, char** out_shares)
{
    if (!out_shares)
        return fail_bad_arg("out_shares is null");
    return guarded([&] {
        const auto dealing =
            qtcss::classical::deal_fixed(qtcss::classical::example_polynomial(), parties);
        *out_shares = copy_out(shares_to_array(dealing.shares));
    });
}

qtcss_status qtcss_classical_reconstruct2(const char* share_a, const char* share_b,
                                          uint32_t* out_secret)
{
    if (!share_a || !share_b || !out_secret)
        return fail_bad_arg("null argument");
    return guarded([&] {
        const auto a = qtcss::classical::share_from_record(share_a);
        const auto b = qtcss::classical::share_from_record(share_b);
        *out_secret = qtcss::classical::reconstruct_threshold2(a, b).value();
    });
}

qtcss_status qtcss_classical_reconstruct3(const char* shares_array, uint32_t* out_secret)
{
    if (!shares_array || !out_secret)
        return fail_bad_arg("null argument");
    return guarded([&] {
        const auto shares = shares_from_array(shares_array);
        std::vector<qtcss::classical::TruncatedShare> truncated;
        truncated.reserve(shares.size());
        for (const auto& s : shares)
            truncated.push_back(qtcss::classical::truncate(s));
        *out_secret = qtcss::classical::reconstruct_threshold3_default(truncated).value();
    });
}

qtcss_status qtcss_classical_reconstruct4(const char* shares_array, uint32_t* out_secret)
{
    if (!shares_array || !out_secret)
        return fail_bad_arg("null argument");
    return guarded([&] {
        const auto shares = shares_from_array(shares_array);
        *out_secret = qtcss::classical::reconstruct_threshold4(shares).value();
    });
}

qtcss_status qtcss_classical_attack(const char* share_a, const char* share_b,
                                    uint32_t declared_threshold, int method,
                                    char** out_transcript)
{
    if (!share_a || !share_b || !out_transcript)
        return fail_bad_arg("null argument");
    if (method != 0 && method != 1)
        return fail_bad_arg("method must be 0 (column-poly-at-zero) or 1 (re-truncation)");
    return guarded([&] {
        const auto a = qtcss::classical::share_from_record(share_a);
        const auto b = qtcss::classical::share_from_record(share_b);
        const auto t = qtcss::classical::attack_with_old_shares(
            a, b, declared_threshold,
            method == 0 ? qtcss::classical::AttackMethod::column_poly_at_zero
                        : qtcss::classical::AttackMethod::re_truncation);
        json doc{
            {"colluders", t.colluding_party_ids},
            {"method", qtcss::classical::attack_method_name(t.method)},
            {"recovered_secret", t.recovered_secret.value()},
            {"narrative", t.narrative},
        };
        *out_transcript = copy_out(doc.dump());
    });
}

qtcss_status qtcss_session_deal(double a_re, double a_im, double b_re, double b_im,
                                uint32_t parties, qtcss_session** out_session)
{
    if (!out_session)
        return fail_bad_arg("out_session is null");
    *out_session = nullptr;
    return guarded([&] {
        const qtcss::quantum::SecretQubit secret{{a_re, a_im}, {b_re, b_im}};
        auto owned = std::make_unique<qtcss_session>(
            qtcss_session{qtcss::protocol::SharingSession::deal(secret,
                                                                static_cast<int>(parties))});
        *out_session = owned.release();
    });
}

void qtcss_session_free(qtcss_session* session)
{
    delete session;
}

qtcss_status qtcss_session_threshold(const qtcss_session* session, uint32_t* out)
{
    if (!session || !out)
        return fail_bad_arg("null argument");
    *out = static_cast<uint32_t>(session->impl.threshold());
    return QTCSS_OK;
}

qtcss_status qtcss_session_live_handles(const qtcss_session* session, qtcss_handle* out,
                                        size_t cap, size_t* out_count)
{
    if (!session || !out_count)
        return fail_bad_arg("null argument");
    const auto live = session->impl.live_handles();
    *out_count = live.size();
    if (!out)
        return QTCSS_OK;
    if (cap < live.size()) {
        g_last_error = "need capacity for " + std::to_string(live.size()) + " handles";
        return QTCSS_ERR_BUFFER_TOO_SMALL;
    }
    std::copy(live.begin(), live.end(), out);
    return QTCSS_OK;
}

qtcss_status qtcss_session_split(qtcss_session* session, qtcss_handle handle, uint32_t k,
                                 qtcss_handle* out_new, size_t cap, size_t* out_count)
{
    if (!session || !out_new || !out_count)
        return fail_bad_arg("null argument");
    if (cap < k) {
        g_last_error = "need capacity for " + std::to_string(k) + " fresh handles";
        return QTCSS_ERR_BUFFER_TOO_SMALL;
    }
    return guarded([&] {
        const auto fresh = session->impl.split(handle, static_cast<int>(k));
        *out_count = fresh.size();
        std::copy(fresh.begin(), fresh.end(), out_new);
    });
}

qtcss_status qtcss_session_reconstruct(qtcss_session* session, const qtcss_handle* handles,
                                       size_t count, double* out_a_re, double* out_a_im,
                                       double* out_b_re, double* out_b_im)
{
    if (!session || (!handles && count > 0) || !out_a_re || !out_a_im || !out_b_re || !out_b_im)
        return fail_bad_arg("null argument");
    return guarded([&] {
        const auto secret = session->impl.reconstruct({handles, count});
        *out_a_re = secret.a.real();
        *out_a_im = secret.a.imag();
        *out_b_re = secret.b.real();
        *out_b_im = secret.b.imag();
    });
}

qtcss_status qtcss_session_analyze(const qtcss_session* session, const qtcss_handle* subset,
                                   size_t count, char** out_report)
{
    if (!session || (!subset && count > 0) || !out_report)
        return fail_bad_arg("null argument");
    return guarded([&] {
        const auto report = session->impl.analyze_subset({subset, count});
        json doc{
            {"subset_size", report.subset_size},
            {"purity", report.purity},
            {"fidelity", report.fidelity},
            {"is_mixed", report.is_mixed},
        };
        if (report.reduced_state)
            doc["reduced_state"] = report.reduced_state->to_text();
        *out_report = copy_out(doc.dump());
    });
}

qtcss_status qtcss_session_transcript(const qtcss_session* session, char** out_json)
{
    if (!session || !out_json)
        return fail_bad_arg("null argument");
    return guarded([&] {
        json arr = json::array();
        for (const auto& event : session->impl.transcript())
            arr.push_back({{"op", event.op}, {"detail", event.detail}});
        *out_json = copy_out(arr.dump());
    });
}

qtcss_status qtcss_scenario_run(const char* scenario_json, qtcss_format format,
                                char** out_report, int* out_all_passed)
{
    if (!scenario_json || !out_report)
        return fail_bad_arg("null argument");
    if (format != QTCSS_FORMAT_TEXT && format != QTCSS_FORMAT_STRUCTURED)
        return fail_bad_arg("unknown report format");
    return guarded([&] {
        const auto scenario = qtcss::harness::parse_scenario_text(scenario_json);
        const auto report = qtcss::harness::run_scenario(scenario);
        const auto rendered = qtcss::harness::emit_report(
            report, format == QTCSS_FORMAT_TEXT ? qtcss::harness::ReportFormat::text
                                                : qtcss::harness::ReportFormat::structured);
        *out_report = copy_out(rendered);
        if (out_all_passed)
            *out_all_passed = report.all_passed ? 1 : 0;
    });
}

} // extern "C"
