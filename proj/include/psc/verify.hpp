#ifndef PSC_VERIFY_HPP
#define PSC_VERIFY_HPP

#include <vector>

#include "psc/coalition.hpp"
#include "psc/profile.hpp"
#include "psc/quota.hpp"

namespace psc {

struct Verdict {
    bool satisfies_psc = false;
    std::vector<CoalitionWitness> violations; // all of them, canonical order

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Fast check: w satisfies q-PSC iff no prefix class up to length m has an
// unmet demand. Rests on maximality: every solid coalition for C' is a subset
// of C'-s maximal class, whose demand dominates. Throws CommitteeWrongSize
// unless |w| == k.
Verdict verify_psc(const PreferenceProfile& profile, const Quota& q, const Committee& w);

// Slow definitional oracle: enumerates every nonempty candidate subset C',
// finds its supporters by scanning raw ballots, and tests every demand level
// l with l*q <= |N'| directly. Independent of the prefix-class machinery;
// guarded to m <= 20 candidates.
Verdict verify_psc_definitional(const PreferenceProfile& profile, const Quota& q, const Committee& w);

// All size-k committees passing verify_psc, canonical order. Guarded to
// C(m, k) <= 10^6 subsets.
std::vector<Committee> psc_committees_bruteforce(const PreferenceProfile& profile, const Quota& q);

} // namespace psc

#endif
