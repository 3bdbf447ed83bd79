#include "psc/dummett.hpp"

#include "psc/verify.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace psc {

namespace {

struct StateKey {
    int stage;
    CandidateSet committee;

    friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
    std::size_t operator()(const StateKey& key) const {
        std::uint64_t h = 1469598103934665603ULL;
        const auto mix = [&h](std::uint64_t v) {
            h ^= v;
            h *= 1099511628211ULL;
        };
        mix(static_cast<std::uint64_t>(key.stage));
        for (CandidateId id : key.committee) mix(static_cast<std::uint64_t>(id) + 1);
        return static_cast<std::size_t>(h);
    }
};

void check_committee(const PreferenceProfile& profile, const Committee& w) {
    for (CandidateId id : w)
        if (id < 0 || id >= profile.m)
            throw Error(Errc::unknown_candidate, "candidate id " + std::to_string(id));
    if (w.size() != static_cast<std::size_t>(profile.k))
        throw Error(Errc::committee_wrong_size, "committee has " + std::to_string(w.size()) +
                                                    " members, expected k=" + std::to_string(profile.k));
    if (std::adjacent_find(w.begin(), w.end()) != w.end())
        throw Error(Errc::committee_wrong_size, "committee contains a duplicate member");
}

} // namespace

EnumerationReport enumerate_outcomes(const PreferenceProfile& profile, const Quota& q,
                                     const EnumerateOptions& options) {
    validate_quota(profile, q);

    EnumerationReport report;
    std::set<Committee> outcomes;
    std::unordered_set<StateKey, StateKeyHash> visited;

    const auto visit = [&](auto&& self, int stage, const CandidateSet& committee) -> void {
        if (options.memoize) {
            if (!visited.emplace(StateKey{stage, committee}).second) {
                ++report.dedup_hits;
                return;
            }
        }
        if (++report.nodes_visited > options.node_budget)
            throw Error(Errc::node_budget_exceeded,
                        "more than " + std::to_string(options.node_budget) + " states");

        const CandidateSet choices = choice_set(profile, q, committee, stage);
        if (choices.empty()) {
            if (stage == profile.m)
                outcomes.insert(committee);
            else
                self(self, stage + 1, committee);
            return;
        }
        for (CandidateId c : choices) self(self, stage, set_insert(committee, c));
    };
    visit(visit, 1, {});

    report.outcomes.assign(outcomes.begin(), outcomes.end());
    return report;
}

EquivalenceReport check_equivalence(const PreferenceProfile& profile, const Quota& q,
                                    const EnumerateOptions& options) {
    EquivalenceReport report;
    report.enumeration = enumerate_outcomes(profile, q, options);
    report.brute_force = psc_committees_bruteforce(profile, q);

    std::set_difference(report.enumeration.outcomes.begin(), report.enumeration.outcomes.end(),
                        report.brute_force.begin(), report.brute_force.end(),
                        std::back_inserter(report.only_enumerated));
    std::set_difference(report.brute_force.begin(), report.brute_force.end(),
                        report.enumeration.outcomes.begin(), report.enumeration.outcomes.end(),
                        std::back_inserter(report.only_brute_force));
    report.equal = report.only_enumerated.empty() && report.only_brute_force.empty();
    return report;
}

ReconstructResult reconstruct_path(const PreferenceProfile& profile, const Quota& q,
                                   const Committee& w) {
    validate_quota(profile, q);
    check_committee(profile, w);

    ReconstructResult result;
    CandidateSet committee;
    for (int j = 1; j <= profile.m; ++j) {
        while (true) {
            auto witnesses = unmet_demands(profile, q, committee, j);
            if (witnesses.empty()) break;
            CandidateSet choices;
            for (const auto& witness : witnesses)
                choices = set_union(choices, set_difference(witness.cset, committee));
            const CandidateSet inside_w = set_intersection(choices, w);
            if (inside_w.empty()) {
                result.is_psc = false;
                result.stuck_stage = j;
                result.stuck_committee = committee;
                result.stuck_witnesses = std::move(witnesses);
                return result;
            }
            const CandidateId chosen = inside_w.front();
            MDStep step;
            step.stage = j;
            step.chosen = chosen;
            for (const auto& witness : witnesses) {
                if (set_contains(witness.cset, chosen)) {
                    step.trigger_class = witness.cset;
                    break;
                }
            }
            committee = set_insert(committee, chosen);
            step.committee = committee;
            result.trace.push_back(std::move(step));
        }
    }
    if (committee != w)
        throw std::logic_error("restricted run completed with a committee other than w");
    result.is_psc = true;
    return result;
}

} // namespace psc
