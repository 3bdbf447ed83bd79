#ifndef PSC_GENERATE_HPP
#define PSC_GENERATE_HPP

#include <cstdint>
#include <vector>

#include "psc/profile.hpp"

namespace psc {

// Candidate names used by the generators: "a".."z" for m <= 26, else "c1".."cM".
std::vector<std::string> default_candidate_names(int m);

// n voters with independent uniform-random full rankings, deterministic in
// the seed. Output is canonicalized (identical rankings merged and sorted).
PreferenceProfile gen_impartial(std::int64_t n, int m, int k, std::uint64_t seed);

struct BlocSpec {
    std::int64_t size = 0;
    CandidateSet cset; // sorted candidate indices
};

// Each bloc contributes `size` voters ranking the bloc's candidates (in
// per-voter random order) ahead of all others (also random order), so every
// bloc is a solid coalition for its candidate set by construction. Bloc
// candidate sets must be pairwise disjoint; n is the sum of bloc sizes.
PreferenceProfile gen_blocs(const std::vector<BlocSpec>& blocs, int m, int k, std::uint64_t seed);

} // namespace psc

#endif
