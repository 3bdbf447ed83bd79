#include "psc/verify.hpp"

#include <algorithm>

namespace psc {

namespace {

void check_committee(const PreferenceProfile& profile, const Committee& w) {
    for (CandidateId id : w)
        if (id < 0 || id >= profile.m)
            throw Error(Errc::unknown_candidate, "candidate id " + std::to_string(id));
    if (w.size() != static_cast<std::size_t>(profile.k))
        throw Error(Errc::committee_wrong_size, "committee has " + std::to_string(w.size()) +
                                                    " members, expected k=" + std::to_string(profile.k));
    if (std::adjacent_find(w.begin(), w.end()) != w.end())
        throw Error(Errc::committee_wrong_size, "committee contains a duplicate member");
}

} // namespace

Verdict verify_psc(const PreferenceProfile& profile, const Quota& q, const Committee& w) {
    validate_quota(profile, q);
    check_committee(profile, w);
    Verdict verdict;
    verdict.violations = unmet_demands(profile, q, w, profile.m);
    verdict.satisfies_psc = verdict.violations.empty();
    return verdict;
}

Verdict verify_psc_definitional(const PreferenceProfile& profile, const Quota& q, const Committee& w) {
    validate_quota(profile, q);
    check_committee(profile, w);
    if (profile.m > 20)
        throw Error(Errc::too_many_candidates, "definitional check enumerates 2^m subsets; m=" +
                                                   std::to_string(profile.m) + " > 20");

    // Rank lookup per ballot: position[id] = 0-based rank.
    std::vector<std::vector<int>> position(profile.ballots.size(), std::vector<int>(profile.m));
    for (std::size_t v = 0; v < profile.ballots.size(); ++v)
        for (int r = 0; r < profile.m; ++r)
            position[v][static_cast<std::size_t>(profile.ballots[v].order[r])] = r;

    Verdict verdict;
    const std::uint32_t full = (1u << profile.m) - 1u;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        CandidateSet cset;
        for (int c = 0; c < profile.m; ++c)
            if (mask & (1u << c)) cset.push_back(c);
        const int size = static_cast<int>(cset.size());

        // N' = all voters preferring everything in C' to everything outside:
        // positions of C' occupy exactly the first |C'| ranks of the ballot.
        std::int64_t support = 0;
        std::vector<int> supporters;
        for (std::size_t v = 0; v < profile.ballots.size(); ++v) {
            int worst_inside = -1;
            for (CandidateId c : cset) worst_inside = std::max(worst_inside, position[v][static_cast<std::size_t>(c)]);
            bool solid = true;
            for (int c = 0; c < profile.m && solid; ++c)
                if (!(mask & (1u << c)) && position[v][static_cast<std::size_t>(c)] < worst_inside)
                    solid = false;
            if (solid) {
                support += profile.ballots[v].multiplicity;
                supporters.push_back(static_cast<int>(v));
            }
        }
        if (support == 0) continue;

        const int achieved = intersection_size(w, cset);
        // Every demand level l with l*q <= |N'|, compared exactly: l*num <= |N'|*den.
        int worst_required = 0;
        for (std::int64_t l = 1;
             static_cast<__int128>(l) * q.value.num() <= static_cast<__int128>(support) * q.value.den();
             ++l) {
            worst_required = static_cast<int>(std::min<std::int64_t>(l, size));
            if (worst_required == size) break; // larger l cannot demand more
        }
        if (achieved < worst_required) {
            CoalitionWitness witness;
            witness.cset = std::move(cset);
            witness.support = support;
            witness.supporters = std::move(supporters);
            witness.required = worst_required;
            witness.achieved = achieved;
            witness.prefix_len = size;
            verdict.violations.push_back(std::move(witness));
        }
    }

    std::sort(verdict.violations.begin(), verdict.violations.end(),
              [](const CoalitionWitness& a, const CoalitionWitness& b) {
                  if (a.prefix_len != b.prefix_len) return a.prefix_len < b.prefix_len;
                  return a.cset < b.cset;
              });
    verdict.satisfies_psc = verdict.violations.empty();
    return verdict;
}

std::vector<Committee> psc_committees_bruteforce(const PreferenceProfile& profile, const Quota& q) {
    validate_quota(profile, q);

    double count = 1.0;
    for (int i = 0; i < profile.k; ++i)
        count = count * (profile.m - i) / (i + 1);
    if (count > 1e6)
        throw Error(Errc::search_space_too_large, "C(m, k) exceeds 10^6 committees");

    std::vector<Committee> passing;
    Committee w(static_cast<std::size_t>(profile.k));
    for (int i = 0; i < profile.k; ++i) w[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (verify_psc(profile, q, w).satisfies_psc) passing.push_back(w);
        // next k-combination of [0, m) in lexicographic order
        int i = profile.k - 1;
        while (i >= 0 && w[static_cast<std::size_t>(i)] == profile.m - profile.k + i) --i;
        if (i < 0) break;
        ++w[static_cast<std::size_t>(i)];
        for (int t = i + 1; t < profile.k; ++t)
            w[static_cast<std::size_t>(t)] = w[static_cast<std::size_t>(t - 1)] + 1;
    }
    return passing;
}

} // namespace psc
