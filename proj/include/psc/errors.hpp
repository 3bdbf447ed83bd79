#ifndef PSC_ERRORS_HPP
#define PSC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace psc {

// Stable error identifiers. The CLI prints the identifier on stderr and maps
// every one of these to exit code 2.
enum class Errc {
    malformed_header,
    duplicate_candidate_name,
    unknown_candidate,
    incomplete_order,
    multiplicity_mismatch,
    malformed_quota_spec,
    malformed_policy_spec,
    quota_out_of_range,
    index_out_of_range,
    committee_wrong_size,
    too_many_candidates,
    search_space_too_large,
    script_exhausted,
    script_invalid_choice,
    node_budget_exceeded,
    invalid_dimensions,
    overlapping_blocs,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    Errc code() const { return code_; }
    const char* name() const { return errc_name(code_); }

private:
    Errc code_;
};

inline const char* errc_name(Errc code) {
    switch (code) {
        case Errc::malformed_header: return "MalformedHeader";
        case Errc::duplicate_candidate_name: return "DuplicateCandidateName";
        case Errc::unknown_candidate: return "UnknownCandidate";
        case Errc::incomplete_order: return "IncompleteOrder";
        case Errc::multiplicity_mismatch: return "MultiplicityMismatch";
        case Errc::malformed_quota_spec: return "MalformedQuotaSpec";
        case Errc::malformed_policy_spec: return "MalformedPolicySpec";
        case Errc::quota_out_of_range: return "QuotaOutOfRange";
        case Errc::index_out_of_range: return "IndexOutOfRange";
        case Errc::committee_wrong_size: return "CommitteeWrongSize";
        case Errc::too_many_candidates: return "TooManyCandidates";
        case Errc::search_space_too_large: return "SearchSpaceTooLarge";
        case Errc::script_exhausted: return "ScriptExhausted";
        case Errc::script_invalid_choice: return "ScriptInvalidChoice";
        case Errc::node_budget_exceeded: return "NodeBudgetExceeded";
        case Errc::invalid_dimensions: return "InvalidDimensions";
        case Errc::overlapping_blocs: return "OverlappingBlocs";
    }
    return "UnknownError";
}

} // namespace psc

#endif
