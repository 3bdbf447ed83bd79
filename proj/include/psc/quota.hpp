#ifndef PSC_QUOTA_HPP
#define PSC_QUOTA_HPP

#include <cstdint>
#include <string>

#include "psc/profile.hpp"
#include "psc/rational.hpp"

namespace psc {

// A quota is an exact rational q with n/(k+1) < q <= n/k. Construct through
// make_quota so the range invariant always holds; every operation that takes
// (profile, quota) re-checks the pair.
struct Quota {
    Rational value;

    std::string str() const { return value.str(); }
    friend bool operator==(const Quota&, const Quota&) = default;
};

// spec is "hare" (n/k), "midpoint" (the midpoint of the open-closed interval),
// or an explicit rational "p/r" which must lie inside (n/(k+1), n/k].
Quota make_quota(std::int64_t n, int k, const std::string& spec);

// Same, from an already-parsed rational.
Quota make_quota(std::int64_t n, int k, const Rational& value);

// Throws QuotaOutOfRange when q does not fit this profile's (n, k) interval.
void validate_quota(const PreferenceProfile& profile, const Quota& q);

// floor(coalition_size / q) by integer arithmetic: the largest l such that
// l*q <= coalition_size, i.e. the cap on how many seats a solid coalition of
// this size can demand.
std::int64_t demand_cap(std::int64_t coalition_size, const Quota& q);

} // namespace psc

#endif
