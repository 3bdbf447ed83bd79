#include "psc/md.hpp"

#include <algorithm>
#include <sstream>

#include "psc/prng.hpp"

namespace psc {

TieBreakPolicy parse_policy(const PreferenceProfile& profile, const std::string& spec) {
    if (spec == "lex") return TieBreakPolicy::lexicographic();
    if (spec == "borda") return TieBreakPolicy::borda();
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    if (colon != std::string::npos && head == "random") {
        const std::string digits = spec.substr(colon + 1);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw Error(Errc::malformed_policy_spec, "random seed must be a nonnegative integer");
        return TieBreakPolicy::seeded_random(std::stoull(digits));
    }
    if (colon != std::string::npos && head == "script") {
        std::vector<CandidateId> script;
        std::string token;
        std::istringstream in(spec.substr(colon + 1));
        while (std::getline(in, token, ','))
            script.push_back(profile.index_of(token));
        if (script.empty())
            throw Error(Errc::script_exhausted, "empty script");
        return TieBreakPolicy::scripted(std::move(script));
    }
    throw Error(Errc::malformed_policy_spec,
                "policy must be lex, borda, random:SEED or script:name,... (got \"" + spec + "\")");
}

CandidateSet choice_set(const PreferenceProfile& profile, const Quota& q,
                        const CandidateSet& w, int j) {
    CandidateSet out;
    for (const auto& witness : unmet_demands(profile, q, w, j))
        out = set_union(out, set_difference(witness.cset, w));
    return out;
}

std::vector<std::int64_t> borda_scores(const PreferenceProfile& profile) {
    std::vector<std::int64_t> scores(static_cast<std::size_t>(profile.m), 0);
    for (const auto& ballot : profile.ballots)
        for (int rank = 1; rank <= profile.m; ++rank)
            scores[static_cast<std::size_t>(ballot.order[rank - 1])] +=
                ballot.multiplicity * (profile.m - rank);
    return scores;
}

namespace {

// Per-run mutable tie-break state (PRNG stream, script cursor, Borda table).
class Chooser {
public:
    Chooser(const PreferenceProfile& profile, const TieBreakPolicy& policy)
        : policy_(policy), rng_(policy.seed) {
        if (policy.kind == TieBreakPolicy::Kind::borda) scores_ = borda_scores(profile);
        for (CandidateId id : policy.script)
            if (id < 0 || id >= profile.m)
                throw Error(Errc::script_invalid_choice, "scripted id " + std::to_string(id));
    }

    CandidateId pick(const CandidateSet& choices) {
        switch (policy_.kind) {
            case TieBreakPolicy::Kind::lexicographic:
                return choices.front();
            case TieBreakPolicy::Kind::borda: {
                CandidateId best = choices.front();
                for (CandidateId c : choices)
                    if (scores_[static_cast<std::size_t>(c)] > scores_[static_cast<std::size_t>(best)])
                        best = c; // exact ties keep the lowest index
                return best;
            }
            case TieBreakPolicy::Kind::seeded_random:
                return choices[static_cast<std::size_t>(rng_.below(choices.size()))];
            case TieBreakPolicy::Kind::scripted: {
                if (cursor_ >= policy_.script.size())
                    throw Error(Errc::script_exhausted,
                                "script ended but a choice is still required");
                const CandidateId c = policy_.script[cursor_++];
                if (!set_contains(choices, c))
                    throw Error(Errc::script_invalid_choice,
                                "scripted candidate id " + std::to_string(c) +
                                    " is not in the current choice set");
                return c;
            }
        }
        throw Error(Errc::script_invalid_choice, "unreachable policy kind");
    }

private:
    const TieBreakPolicy& policy_;
    Xorshift64Star rng_;
    std::vector<std::int64_t> scores_;
    std::size_t cursor_ = 0;
};

} // namespace

MDResult run_md(const PreferenceProfile& profile, const Quota& q, const TieBreakPolicy& policy) {
    validate_quota(profile, q);
    Chooser chooser(profile, policy);

    MDResult result;
    CandidateSet w;
    for (int j = 1; j <= profile.m; ++j) {
        while (true) {
            const auto witnesses = unmet_demands(profile, q, w, j);
            if (witnesses.empty()) break;
            CandidateSet choices;
            for (const auto& witness : witnesses)
                choices = set_union(choices, set_difference(witness.cset, w));
            const CandidateId chosen = chooser.pick(choices);

            MDStep step;
            step.stage = j;
            step.chosen = chosen;
            for (const auto& witness : witnesses) {
                if (set_contains(witness.cset, chosen)) {
                    step.trigger_class = witness.cset;
                    break;
                }
            }
            w = set_insert(w, chosen);
            step.committee = w;
            result.trace.push_back(std::move(step));
        }
    }
    result.committee = std::move(w);
    return result;
}

} // namespace psc
