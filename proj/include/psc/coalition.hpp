#ifndef PSC_COALITION_HPP
#define PSC_COALITION_HPP

#include <cstdint>
#include <vector>

#include "psc/profile.hpp"
#include "psc/quota.hpp"

namespace psc {

// A solid coalition (candidate set plus its maximal supporting voter class)
// together with its representation bookkeeping against some committee W:
// required = min(floor(support/q), |cset|), achieved = |W ∩ cset|. A witness
// with achieved < required documents an unmet demand.
struct CoalitionWitness {
    CandidateSet cset;
    std::int64_t support = 0;   // multiplicity-weighted size of the maximal supporting class
    std::vector<int> supporters; // ballot indices of that class
    int required = 0;
    int achieved = 0;
    int prefix_len = 0; // |cset|; the stage at which this class appears

    friend bool operator==(const CoalitionWitness&, const CoalitionWitness&) = default;
};

// All voters whose |cset|-prefix equals cset: the unique maximal solid
// coalition supporting cset. May be empty.
std::pair<std::int64_t, std::vector<int>> maximal_support(const PreferenceProfile& profile,
                                                          const CandidateSet& cset);

// Every candidate set with nonempty maximal support, i.e. every prefix class
// over j = 1..m, in canonical order (j ascending, then lexicographic by
// cset). required/achieved are left zero; at most n*m entries.
std::vector<CoalitionWitness> active_coalitions(const PreferenceProfile& profile);

// All prefix classes with prefix length <= j_limit whose demand against w is
// unmet. Empty result means w satisfies every demand visible up to j_limit.
std::vector<CoalitionWitness> unmet_demands(const PreferenceProfile& profile, const Quota& q,
                                            const CandidateSet& w, int j_limit);

} // namespace psc

#endif
