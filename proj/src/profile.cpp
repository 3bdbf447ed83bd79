#include "psc/profile.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace psc {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string token;
    std::istringstream in(s);
    while (std::getline(in, token, sep)) parts.push_back(trim(token));
    if (!s.empty() && s.back() == sep) parts.emplace_back();
    return parts;
}

std::int64_t parse_positive_int(const std::string& s, Errc code, const char* what) {
    if (s.empty()) throw Error(code, std::string("empty ") + what);
    std::int64_t v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw Error(code, std::string("bad ") + what + " \"" + s + "\"");
        if (v > (INT64_MAX - (c - '0')) / 10) throw Error(code, std::string(what) + " overflows");
        v = v * 10 + (c - '0');
    }
    return v;
}

} // namespace

CandidateId PreferenceProfile::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < candidate_names.size(); ++i)
        if (candidate_names[i] == name) return static_cast<CandidateId>(i);
    throw Error(Errc::unknown_candidate, "\"" + name + "\" is not a candidate of this profile");
}

const std::string& PreferenceProfile::name_of(CandidateId id) const {
    if (id < 0 || id >= m) throw Error(Errc::index_out_of_range, "candidate id " + std::to_string(id));
    return candidate_names[static_cast<std::size_t>(id)];
}

void validate_profile(const PreferenceProfile& profile) {
    if (profile.m < 1 || profile.candidate_names.size() != static_cast<std::size_t>(profile.m))
        throw Error(Errc::malformed_header, "candidate list does not match m");
    if (profile.k < 1 || profile.k > profile.m)
        throw Error(Errc::malformed_header, "k must satisfy 1 <= k <= m");
    if (profile.n < 1)
        throw Error(Errc::malformed_header, "n must be at least 1");

    std::unordered_set<std::string> seen;
    for (const auto& name : profile.candidate_names) {
        if (name.empty())
            throw Error(Errc::malformed_header, "empty candidate name");
        if (name.find_first_of(",:# \t") != std::string::npos)
            throw Error(Errc::malformed_header, "candidate name \"" + name + "\" contains a reserved character");
        if (!seen.insert(name).second)
            throw Error(Errc::duplicate_candidate_name, "\"" + name + "\"");
    }

    std::int64_t total = 0;
    std::vector<char> mark(static_cast<std::size_t>(profile.m));
    for (const auto& ballot : profile.ballots) {
        if (ballot.multiplicity < 1)
            throw Error(Errc::multiplicity_mismatch, "ballot multiplicity must be positive");
        if (ballot.order.size() != static_cast<std::size_t>(profile.m))
            throw Error(Errc::incomplete_order, "ballot ranks " + std::to_string(ballot.order.size()) +
                                                    " of " + std::to_string(profile.m) + " candidates");
        std::fill(mark.begin(), mark.end(), 0);
        for (CandidateId id : ballot.order) {
            if (id < 0 || id >= profile.m)
                throw Error(Errc::unknown_candidate, "candidate id " + std::to_string(id));
            if (mark[static_cast<std::size_t>(id)]++)
                throw Error(Errc::incomplete_order, "candidate repeated in one ballot");
        }
        total += ballot.multiplicity;
    }
    if (total != profile.n)
        throw Error(Errc::multiplicity_mismatch, "header declares n=" + std::to_string(profile.n) +
                                                     " but multiplicities sum to " + std::to_string(total));
}

PreferenceProfile parse_profile(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::vector<std::string> lines;
    while (std::getline(in, raw)) {
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        lines.push_back(line);
    }
    if (lines.size() < 2) throw Error(Errc::malformed_header, "expected header and candidate list");

    PreferenceProfile profile;
    {
        std::istringstream header(lines[0]);
        std::string ns, ms, ks, extra;
        if (!(header >> ns >> ms >> ks) || (header >> extra))
            throw Error(Errc::malformed_header, "first line must be \"n m k\", got \"" + lines[0] + "\"");
        profile.n = parse_positive_int(ns, Errc::malformed_header, "n");
        profile.m = static_cast<int>(parse_positive_int(ms, Errc::malformed_header, "m"));
        profile.k = static_cast<int>(parse_positive_int(ks, Errc::malformed_header, "k"));
    }

    const std::string cand_prefix = "candidates:";
    if (lines[1].rfind(cand_prefix, 0) != 0)
        throw Error(Errc::malformed_header, "second line must start with \"candidates:\"");
    profile.candidate_names = split(trim(lines[1].substr(cand_prefix.size())), ',');

    std::size_t next = 2;
    const std::string quota_prefix = "quota:";
    if (next < lines.size() && lines[next].rfind(quota_prefix, 0) == 0) {
        profile.quota_line = trim(lines[next].substr(quota_prefix.size()));
        ++next;
    }

    std::unordered_map<std::string, CandidateId> ids;
    for (std::size_t i = 0; i < profile.candidate_names.size(); ++i) {
        if (!ids.emplace(profile.candidate_names[i], static_cast<CandidateId>(i)).second)
            throw Error(Errc::duplicate_candidate_name, "\"" + profile.candidate_names[i] + "\"");
    }

    for (; next < lines.size(); ++next) {
        const auto colon = lines[next].find(':');
        if (colon == std::string::npos)
            throw Error(Errc::malformed_header, "ballot line missing \"mult:\" prefix: \"" + lines[next] + "\"");
        Ballot ballot;
        ballot.multiplicity = parse_positive_int(trim(lines[next].substr(0, colon)),
                                                 Errc::malformed_header, "ballot multiplicity");
        for (const auto& name : split(trim(lines[next].substr(colon + 1)), ',')) {
            const auto it = ids.find(name);
            if (it == ids.end())
                throw Error(Errc::unknown_candidate, "\"" + name + "\" in ballot line " + std::to_string(next + 1));
            ballot.order.push_back(it->second);
        }
        profile.ballots.push_back(std::move(ballot));
    }

    validate_profile(profile);
    return profile;
}

PreferenceProfile canonicalize(const PreferenceProfile& profile) {
    std::map<std::vector<CandidateId>, std::int64_t> merged;
    for (const auto& ballot : profile.ballots) merged[ballot.order] += ballot.multiplicity;

    PreferenceProfile out = profile;
    out.ballots.clear();
    for (const auto& [order, mult] : merged) out.ballots.push_back(Ballot{order, mult});
    return out;
}

std::string serialize_profile(const PreferenceProfile& profile) {
    const PreferenceProfile canon = canonicalize(profile);
    std::ostringstream out;
    out << canon.n << ' ' << canon.m << ' ' << canon.k << '\n';
    out << "candidates: ";
    for (int i = 0; i < canon.m; ++i) {
        if (i) out << ',';
        out << canon.candidate_names[static_cast<std::size_t>(i)];
    }
    out << '\n';
    if (canon.quota_line) out << "quota: " << *canon.quota_line << '\n';
    for (const auto& ballot : canon.ballots) {
        out << ballot.multiplicity << ": ";
        for (std::size_t i = 0; i < ballot.order.size(); ++i) {
            if (i) out << ',';
            out << canon.candidate_names[static_cast<std::size_t>(ballot.order[i])];
        }
        out << '\n';
    }
    return out.str();
}

CandidateSet j_prefix(const PreferenceProfile& profile, const Ballot& ballot, int j) {
    if (j < 1 || j > profile.m)
        throw Error(Errc::index_out_of_range, "prefix length " + std::to_string(j) +
                                                  " outside [1, " + std::to_string(profile.m) + "]");
    CandidateSet prefix(ballot.order.begin(), ballot.order.begin() + j);
    std::sort(prefix.begin(), prefix.end());
    return prefix;
}

std::vector<PrefixClass> prefix_classes(const PreferenceProfile& profile, int j) {
    if (j < 1 || j > profile.m)
        throw Error(Errc::index_out_of_range, "prefix length " + std::to_string(j) +
                                                  " outside [1, " + std::to_string(profile.m) + "]");
    // std::map keys are already in canonical (lexicographic) order.
    std::map<CandidateSet, PrefixClass> classes;
    for (std::size_t v = 0; v < profile.ballots.size(); ++v) {
        CandidateSet prefix = j_prefix(profile, profile.ballots[v], j);
        auto& cls = classes[prefix];
        if (cls.cset.empty()) cls.cset = std::move(prefix);
        cls.weight += profile.ballots[v].multiplicity;
        cls.voters.push_back(static_cast<int>(v));
    }
    std::vector<PrefixClass> out;
    out.reserve(classes.size());
    for (auto& [_, cls] : classes) out.push_back(std::move(cls));
    return out;
}

bool set_contains(const CandidateSet& set, CandidateId id) {
    return std::binary_search(set.begin(), set.end(), id);
}

CandidateSet set_union(const CandidateSet& a, const CandidateSet& b) {
    CandidateSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

CandidateSet set_difference(const CandidateSet& a, const CandidateSet& b) {
    CandidateSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

CandidateSet set_intersection(const CandidateSet& a, const CandidateSet& b) {
    CandidateSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

int intersection_size(const CandidateSet& a, const CandidateSet& b) {
    return static_cast<int>(set_intersection(a, b).size());
}

CandidateSet set_insert(const CandidateSet& set, CandidateId id) {
    CandidateSet out = set;
    out.insert(std::lower_bound(out.begin(), out.end(), id), id);
    return out;
}

std::vector<std::string> names_of(const PreferenceProfile& profile, const CandidateSet& set) {
    std::vector<std::string> names;
    names.reserve(set.size());
    for (CandidateId id : set) names.push_back(profile.name_of(id));
    return names;
}

CandidateSet ids_of(const PreferenceProfile& profile, const std::vector<std::string>& names) {
    CandidateSet ids;
    ids.reserve(names.size());
    for (const auto& name : names) ids.push_back(profile.index_of(name));
    std::sort(ids.begin(), ids.end());
    return ids;
}

} // namespace psc
