#include "psc/coalition.hpp"

#include <algorithm>

namespace psc {

std::pair<std::int64_t, std::vector<int>> maximal_support(const PreferenceProfile& profile,
                                                          const CandidateSet& cset) {
    if (cset.empty() || cset.size() > static_cast<std::size_t>(profile.m))
        throw Error(Errc::index_out_of_range, "candidate set size " + std::to_string(cset.size()));
    for (CandidateId id : cset)
        if (id < 0 || id >= profile.m)
            throw Error(Errc::unknown_candidate, "candidate id " + std::to_string(id));

    const int j = static_cast<int>(cset.size());
    std::int64_t weight = 0;
    std::vector<int> voters;
    for (std::size_t v = 0; v < profile.ballots.size(); ++v) {
        if (j_prefix(profile, profile.ballots[v], j) == cset) {
            weight += profile.ballots[v].multiplicity;
            voters.push_back(static_cast<int>(v));
        }
    }
    return {weight, voters};
}

std::vector<CoalitionWitness> active_coalitions(const PreferenceProfile& profile) {
    std::vector<CoalitionWitness> out;
    for (int j = 1; j <= profile.m; ++j) {
        for (auto& cls : prefix_classes(profile, j)) {
            CoalitionWitness w;
            w.cset = std::move(cls.cset);
            w.support = cls.weight;
            w.supporters = std::move(cls.voters);
            w.prefix_len = j;
            out.push_back(std::move(w));
        }
    }
    return out;
}

std::vector<CoalitionWitness> unmet_demands(const PreferenceProfile& profile, const Quota& q,
                                            const CandidateSet& w, int j_limit) {
    if (j_limit < 1 || j_limit > profile.m)
        throw Error(Errc::index_out_of_range, "prefix limit " + std::to_string(j_limit));
    for (CandidateId id : w)
        if (id < 0 || id >= profile.m)
            throw Error(Errc::unknown_candidate, "candidate id " + std::to_string(id));

    std::vector<CoalitionWitness> out;
    for (int j = 1; j <= j_limit; ++j) {
        for (auto& cls : prefix_classes(profile, j)) {
            const std::int64_t cap = demand_cap(cls.weight, q);
            const int required = static_cast<int>(std::min<std::int64_t>(cap, j));
            const int achieved = intersection_size(w, cls.cset);
            if (achieved >= required) continue;
            CoalitionWitness witness;
            witness.cset = std::move(cls.cset);
            witness.support = cls.weight;
            witness.supporters = std::move(cls.voters);
            witness.required = required;
            witness.achieved = achieved;
            witness.prefix_len = j;
            out.push_back(std::move(witness));
        }
    }
    return out;
}

} // namespace psc
