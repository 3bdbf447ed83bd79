#ifndef PSC_JSON_IO_HPP
#define PSC_JSON_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "psc/dummett.hpp"
#include "psc/md.hpp"
#include "psc/verify.hpp"

namespace psc {

// JSON views of the result types, with candidates as names and keys emitted
// in sorted order so output is byte-deterministic for identical inputs.

nlohmann::json witness_json(const PreferenceProfile& profile, const CoalitionWitness& witness);
nlohmann::json verdict_json(const PreferenceProfile& profile, const Quota& q, const Verdict& verdict);
nlohmann::json committee_json(const PreferenceProfile& profile, const Committee& committee);
nlohmann::json trace_step_json(const PreferenceProfile& profile, const MDStep& step);
std::vector<std::string> trace_json_lines(const PreferenceProfile& profile, const MDTrace& trace);
nlohmann::json enumeration_json(const PreferenceProfile& profile, const EnumerationReport& report);
nlohmann::json equivalence_json(const PreferenceProfile& profile, const EquivalenceReport& report);
nlohmann::json reconstruct_json(const PreferenceProfile& profile, const ReconstructResult& result);

} // namespace psc

#endif
