#include "psc/generate.hpp"

#include <algorithm>
#include <numeric>

#include "psc/prng.hpp"

namespace psc {

std::vector<std::string> default_candidate_names(int m) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(m));
    if (m <= 26) {
        for (int i = 0; i < m; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    } else {
        for (int i = 0; i < m; ++i) names.push_back("c" + std::to_string(i + 1));
    }
    return names;
}

PreferenceProfile gen_impartial(std::int64_t n, int m, int k, std::uint64_t seed) {
    if (n < 1 || m < 1 || k < 1 || k > m)
        throw Error(Errc::invalid_dimensions,
                    "need n >= 1 and 1 <= k <= m, got n=" + std::to_string(n) +
                        " m=" + std::to_string(m) + " k=" + std::to_string(k));

    Xorshift64Star rng(seed);
    PreferenceProfile profile;
    profile.candidate_names = default_candidate_names(m);
    profile.n = n;
    profile.m = m;
    profile.k = k;
    for (std::int64_t v = 0; v < n; ++v) {
        Ballot ballot;
        ballot.order.resize(static_cast<std::size_t>(m));
        std::iota(ballot.order.begin(), ballot.order.end(), 0);
        rng.shuffle(ballot.order);
        profile.ballots.push_back(std::move(ballot));
    }
    profile = canonicalize(profile);
    validate_profile(profile);
    return profile;
}

PreferenceProfile gen_blocs(const std::vector<BlocSpec>& blocs, int m, int k, std::uint64_t seed) {
    if (m < 1 || k < 1 || k > m || blocs.empty())
        throw Error(Errc::invalid_dimensions,
                    "need at least one bloc and 1 <= k <= m, got m=" + std::to_string(m) +
                        " k=" + std::to_string(k));

    std::vector<char> claimed(static_cast<std::size_t>(m), 0);
    std::int64_t n = 0;
    for (const auto& bloc : blocs) {
        if (bloc.size < 1)
            throw Error(Errc::invalid_dimensions, "bloc sizes must be positive");
        if (bloc.cset.empty())
            throw Error(Errc::invalid_dimensions, "bloc candidate set is empty");
        for (CandidateId id : bloc.cset) {
            if (id < 0 || id >= m)
                throw Error(Errc::unknown_candidate, "bloc candidate id " + std::to_string(id));
            if (claimed[static_cast<std::size_t>(id)]++)
                throw Error(Errc::overlapping_blocs,
                            "candidate id " + std::to_string(id) + " appears in two blocs");
        }
        n += bloc.size;
    }

    Xorshift64Star rng(seed);
    PreferenceProfile profile;
    profile.candidate_names = default_candidate_names(m);
    profile.n = n;
    profile.m = m;
    profile.k = k;
    for (const auto& bloc : blocs) {
        CandidateSet others;
        for (CandidateId id = 0; id < m; ++id)
            if (!set_contains(bloc.cset, id)) others.push_back(id);
        for (std::int64_t v = 0; v < bloc.size; ++v) {
            std::vector<CandidateId> head = bloc.cset;
            std::vector<CandidateId> tail = others;
            rng.shuffle(head);
            rng.shuffle(tail);
            Ballot ballot;
            ballot.order = std::move(head);
            ballot.order.insert(ballot.order.end(), tail.begin(), tail.end());
            profile.ballots.push_back(std::move(ballot));
        }
    }
    profile = canonicalize(profile);
    validate_profile(profile);
    return profile;
}

} // namespace psc
