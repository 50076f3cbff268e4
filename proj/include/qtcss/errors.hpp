#pragma once

#include <stdexcept>
#include <string>

namespace qtcss {

/// Failure categories shared by the whole library. The C API exposes the
/// same list as qtcss_status codes, so keep the two in sync (see qtcss.h).
enum class Errc {
    zero_inverse = 1,
    modulus_mismatch,
    duplicate_abscissa,
    singular_system,
    bad_parameters,
    duplicate_party,
    insufficient_shares,
    too_many_qubits,
    index_out_of_range,
    control_equals_target,
    empty_keep_set,
    dimension_mismatch,
    bad_party_count,
    share_consumed,
    unknown_handle,
    incomplete_quorum,
    not_proper_subset,
    invalid_scenario,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what)
{
    throw Error(code, what);
}

} // namespace qtcss
