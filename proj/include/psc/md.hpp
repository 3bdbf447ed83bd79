#ifndef PSC_MD_HPP
#define PSC_MD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "psc/coalition.hpp"
#include "psc/profile.hpp"
#include "psc/quota.hpp"

namespace psc {

// Resolves the rule's free choice whenever more than one candidate could be
// added. Scripted policies consume their sequence in order and fail loudly on
// an entry outside the current choice set.
struct TieBreakPolicy {
    enum class Kind { lexicographic, borda, seeded_random, scripted };

    Kind kind = Kind::lexicographic;
    std::uint64_t seed = 0;                // seeded_random only
    std::vector<CandidateId> script;       // scripted only

    static TieBreakPolicy lexicographic() { return {}; }
    static TieBreakPolicy borda() { return {Kind::borda, 0, {}}; }
    static TieBreakPolicy seeded_random(std::uint64_t seed) { return {Kind::seeded_random, seed, {}}; }
    static TieBreakPolicy scripted(std::vector<CandidateId> script) {
        return {Kind::scripted, 0, std::move(script)};
    }
};

// "lex" | "borda" | "random:SEED" | "script:name,name,..."
TieBreakPolicy parse_policy(const PreferenceProfile& profile, const std::string& spec);

struct MDStep {
    int stage = 0;               // prefix length j at which the addition happened
    CandidateSet trigger_class;  // the unmet class that the chosen candidate serves
    CandidateId chosen = -1;
    CandidateSet committee;      // committee after this addition

    friend bool operator==(const MDStep&, const MDStep&) = default;
};

using MDTrace = std::vector<MDStep>;

struct MDResult {
    Committee committee;
    MDTrace trace;
};

// Union over all classes with an unmet demand at prefix lengths <= j of
// C' \ w. Empty iff no demand at stage j is unmet.
CandidateSet choice_set(const PreferenceProfile& profile, const Quota& q,
                        const CandidateSet& w, int j);

// The Minimal Demand rule: stages j = 1..m; within a stage, repeatedly add
// one candidate from the choice set (picked by the policy) until it empties,
// then advance. Terminates with exactly k candidates for every valid quota.
MDResult run_md(const PreferenceProfile& profile, const Quota& q, const TieBreakPolicy& policy);

// score(c) = sum over ballots of multiplicity * (m - rank(c)), rank 1-based.
// Indexed by candidate id.
std::vector<std::int64_t> borda_scores(const PreferenceProfile& profile);

} // namespace psc

#endif
