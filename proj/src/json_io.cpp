#include "psc/json_io.hpp"

namespace psc {

using nlohmann::json;

nlohmann::json witness_json(const PreferenceProfile& profile, const CoalitionWitness& witness) {
    return json{{"cset", names_of(profile, witness.cset)},
                {"support", witness.support},
                {"required", witness.required},
                {"achieved", witness.achieved},
                {"prefix_len", witness.prefix_len}};
}

nlohmann::json verdict_json(const PreferenceProfile& profile, const Quota& q, const Verdict& verdict) {
    json violations = json::array();
    for (const auto& witness : verdict.violations)
        violations.push_back(witness_json(profile, witness));
    return json{{"satisfies_psc", verdict.satisfies_psc},
                {"quota", q.str()},
                {"violations", violations}};
}

nlohmann::json committee_json(const PreferenceProfile& profile, const Committee& committee) {
    return json{{"committee", names_of(profile, committee)}};
}

nlohmann::json trace_step_json(const PreferenceProfile& profile, const MDStep& step) {
    return json{{"j", step.stage},
                {"class", names_of(profile, step.trigger_class)},
                {"chosen", profile.name_of(step.chosen)},
                {"w", names_of(profile, step.committee)}};
}

std::vector<std::string> trace_json_lines(const PreferenceProfile& profile, const MDTrace& trace) {
    std::vector<std::string> lines;
    lines.reserve(trace.size());
    for (const auto& step : trace)
        lines.push_back(trace_step_json(profile, step).dump());
    return lines;
}

nlohmann::json enumeration_json(const PreferenceProfile& profile, const EnumerationReport& report) {
    json outcomes = json::array();
    for (const auto& committee : report.outcomes)
        outcomes.push_back(names_of(profile, committee));
    return json{{"outcomes", outcomes},
                {"nodes_visited", report.nodes_visited},
                {"dedup_hits", report.dedup_hits}};
}

nlohmann::json equivalence_json(const PreferenceProfile& profile, const EquivalenceReport& report) {
    const auto committees = [&](const std::vector<Committee>& list) {
        json out = json::array();
        for (const auto& committee : list) out.push_back(names_of(profile, committee));
        return out;
    };
    json out = enumeration_json(profile, report.enumeration);
    out["equal"] = report.equal;
    out["brute_force"] = committees(report.brute_force);
    if (!report.equal) {
        out["only_enumerated"] = committees(report.only_enumerated);
        out["only_brute_force"] = committees(report.only_brute_force);
    }
    return out;
}

nlohmann::json reconstruct_json(const PreferenceProfile& profile, const ReconstructResult& result) {
    json steps = json::array();
    for (const auto& step : result.trace)
        steps.push_back(trace_step_json(profile, step));
    json out{{"is_psc", result.is_psc}, {"trace", steps}};
    if (!result.is_psc) {
        out["stuck_stage"] = result.stuck_stage;
        out["stuck_committee"] = names_of(profile, result.stuck_committee);
        json witnesses = json::array();
        for (const auto& witness : result.stuck_witnesses)
            witnesses.push_back(witness_json(profile, witness));
        out["stuck_witnesses"] = witnesses;
    }
    return out;
}

} // namespace psc
