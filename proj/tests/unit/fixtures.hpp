#ifndef PSC_TEST_FIXTURES_HPP
#define PSC_TEST_FIXTURES_HPP

#include <functional>
#include <string>
#include <vector>

#include "psc/errors.hpp"
#include "psc/profile.hpp"
#include "psc/quota.hpp"

namespace fixtures {

// Two reference electorates used across the suites.
//
// P1: n=4, m=4, k=2 -- two blocs: {a,b} voters and {c,d} voters.
// P2: n=4, m=3, k=2 -- a-top majority with scattered seconds.

inline psc::PreferenceProfile p1() {
    return psc::parse_profile(
        "4 4 2\n"
        "candidates: a,b,c,d\n"
        "1: a,b,c,d\n"
        "1: a,b,d,c\n"
        "1: c,d,a,b\n"
        "1: c,d,b,a\n");
}

inline psc::PreferenceProfile p2() {
    return psc::parse_profile(
        "4 3 2\n"
        "candidates: a,b,c\n"
        "1: a,b,c\n"
        "1: a,c,b\n"
        "1: b,a,c\n"
        "1: c,b,a\n");
}

inline psc::Quota hare(const psc::PreferenceProfile& profile) {
    return psc::make_quota(profile.n, profile.k, "hare");
}

inline psc::CandidateSet cset(const psc::PreferenceProfile& profile,
                              const std::vector<std::string>& names) {
    return psc::ids_of(profile, names);
}

// Errc thrown by f, or nullopt-like sentinel when nothing was thrown.
inline int thrown_code(const std::function<void()>& f) {
    try {
        f();
    } catch (const psc::Error& e) {
        return static_cast<int>(e.code());
    }
    return -1;
}

inline int code(psc::Errc c) { return static_cast<int>(c); }

} // namespace fixtures

#endif
