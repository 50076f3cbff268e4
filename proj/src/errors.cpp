#include "qtcss/errors.hpp"

namespace qtcss {

const char* errc_name(Errc code) noexcept
{
    switch (code) {
    case Errc::zero_inverse: return "ZeroInverse";
    case Errc::modulus_mismatch: return "ModulusMismatch";
    case Errc::duplicate_abscissa: return "DuplicateAbscissa";
    case Errc::singular_system: return "SingularSystem";
    case Errc::bad_parameters: return "BadParameters";
    case Errc::duplicate_party: return "DuplicateParty";
    case Errc::insufficient_shares: return "InsufficientShares";
    case Errc::too_many_qubits: return "TooManyQubits";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::control_equals_target: return "ControlEqualsTarget";
    case Errc::empty_keep_set: return "EmptyKeepSet";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::bad_party_count: return "BadPartyCount";
    case Errc::share_consumed: return "ShareConsumed";
    case Errc::unknown_handle: return "UnknownHandle";
    case Errc::incomplete_quorum: return "IncompleteQuorum";
    case Errc::not_proper_subset: return "NotProperSubset";
    case Errc::invalid_scenario: return "InvalidScenario";
    }
    return "UnknownError";
}

} // namespace qtcss
