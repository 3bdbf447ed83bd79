#ifndef PSC_PROFILE_HPP
#define PSC_PROFILE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psc/errors.hpp"

namespace psc {

// Candidates are identified by their index into PreferenceProfile::candidate_names.
// Names are display-only; all set logic runs on indices.
using CandidateId = int;

// Canonical candidate-set representation: indices sorted ascending, no
// duplicates. Lexicographic order on these vectors is the canonical order for
// classes, witnesses and committees throughout.
using CandidateSet = std::vector<CandidateId>;

// A committee is just a candidate set whose size equals the profile's k.
using Committee = CandidateSet;

struct Ballot {
    std::vector<CandidateId> order; // strict complete ranking, most preferred first
    std::int64_t multiplicity = 1;

    friend bool operator==(const Ballot&, const Ballot&) = default;
};

// Immutable after construction by convention: every operation in this library
// takes `const PreferenceProfile&` and never mutates, so profiles can be
// shared freely across threads.
struct PreferenceProfile {
    std::vector<std::string> candidate_names;
    std::vector<Ballot> ballots;
    std::int64_t n = 0; // total voters = sum of multiplicities
    int m = 0;          // number of candidates
    int k = 0;          // committee size
    std::optional<std::string> quota_line; // raw "quota:" value from the ballot file, if any

    friend bool operator==(const PreferenceProfile&, const PreferenceProfile&) = default;

    CandidateId index_of(const std::string& name) const;
    const std::string& name_of(CandidateId id) const;
};

// One equivalence class of the stage-j voter partition: all voters whose
// j-prefix equals `cset`. `voters` holds ballot indices (each standing for
// that ballot's full multiplicity); `weight` is the multiplicity sum.
struct PrefixClass {
    CandidateSet cset;
    std::int64_t weight = 0;
    std::vector<int> voters;
};

// Throws if any profile invariant is violated (used by the parser and the
// generators; hand-built profiles in tests go through it too).
void validate_profile(const PreferenceProfile& profile);

// Ballot file format, UTF-8 text:
//   # comment lines start with '#', allowed anywhere; blank lines ignored
//   n m k
//   candidates: name1,name2,...,nameM
//   quota: hare|midpoint|p/r        (optional)
//   mult: name,name,...,name        (one line per ballot type, full ranking)
PreferenceProfile parse_profile(const std::string& text);

// Emits the format above in canonical form: identical rankings merged with
// summed multiplicities, ballots sorted lexicographically by candidate index.
std::string serialize_profile(const PreferenceProfile& profile);

// Merge identical rankings and sort ballots; parse(serialize(p)) == canonicalize(p).
PreferenceProfile canonicalize(const PreferenceProfile& profile);

// The unordered set of the ballot's j most-preferred candidates, 1 <= j <= m.
CandidateSet j_prefix(const PreferenceProfile& profile, const Ballot& ballot, int j);

// Partition of all voters by equality of their j-prefix, in canonical order
// (lexicographic by sorted candidate indices). Weights sum to n.
std::vector<PrefixClass> prefix_classes(const PreferenceProfile& profile, int j);

// --- small sorted-set helpers used across modules ---

bool set_contains(const CandidateSet& set, CandidateId id);
CandidateSet set_union(const CandidateSet& a, const CandidateSet& b);
CandidateSet set_difference(const CandidateSet& a, const CandidateSet& b);
CandidateSet set_intersection(const CandidateSet& a, const CandidateSet& b);
int intersection_size(const CandidateSet& a, const CandidateSet& b);
CandidateSet set_insert(const CandidateSet& set, CandidateId id);

std::vector<std::string> names_of(const PreferenceProfile& profile, const CandidateSet& set);
CandidateSet ids_of(const PreferenceProfile& profile, const std::vector<std::string>& names);

} // namespace psc

#endif
