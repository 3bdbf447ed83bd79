#ifndef PSC_DUMMETT_HPP
#define PSC_DUMMETT_HPP

#include <cstdint>
#include <vector>

#include "psc/coalition.hpp"
#include "psc/md.hpp"
#include "psc/profile.hpp"
#include "psc/quota.hpp"

namespace psc {

struct EnumerateOptions {
    std::int64_t node_budget = 10'000'000; // expanded states; exceeding throws, never truncates
    bool memoize = true;                   // off only for the soundness cross-check
};

struct EnumerationReport {
    std::vector<Committee> outcomes; // canonical order, each of size k
    std::int64_t nodes_visited = 0;  // states expanded
    std::int64_t dedup_hits = 0;     // states skipped because (j, committee) was already expanded
};

// Depth-first walk of the decision tree of all rule executions: from
// (j=1, empty committee), branch on every member of the choice set, advance
// the stage when it empties, record the committee past stage m. States are
// keyed by (j, committee) -- the choice set depends on nothing else -- so
// memoization collapses permuted addition orders.
EnumerationReport enumerate_outcomes(const PreferenceProfile& profile, const Quota& q,
                                     const EnumerateOptions& options = {});

struct EquivalenceReport {
    bool equal = false;
    EnumerationReport enumeration;
    std::vector<Committee> brute_force;
    std::vector<Committee> only_enumerated;  // symmetric difference, if any
    std::vector<Committee> only_brute_force;
};

// Runs both routes -- tree enumeration and brute-force verification of every
// size-k subset -- and compares the outcome sets. A mismatch indicates an
// implementation bug.
EquivalenceReport check_equivalence(const PreferenceProfile& profile, const Quota& q,
                                    const EnumerateOptions& options = {});

struct ReconstructResult {
    bool is_psc = false;
    MDTrace trace;                            // complete on success, partial when stuck
    int stuck_stage = -1;                     // filled on failure
    CandidateSet stuck_committee;
    std::vector<CoalitionWitness> stuck_witnesses;
};

// Simulates a rule execution restricted to choices inside w. If w satisfies
// PSC this never blocks and ends at exactly w; otherwise it reports the stage
// where every addable candidate lies outside w. Replaying the returned trace
// as a scripted policy through run_md reproduces w.
ReconstructResult reconstruct_path(const PreferenceProfile& profile, const Quota& q,
                                   const Committee& w);

} // namespace psc

#endif
