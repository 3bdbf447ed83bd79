#include "psc/quota.hpp"

namespace psc {

namespace {

void check_range(std::int64_t n, int k, const Rational& value) {
    const Rational lower(n, k + 1); // exclusive
    const Rational upper(n, k);     // inclusive
    if (!(lower < value && value <= upper))
        throw Error(Errc::quota_out_of_range,
                    value.str() + " is not in (" + lower.str() + ", " + upper.str() + "]");
}

} // namespace

Quota make_quota(std::int64_t n, int k, const Rational& value) {
    if (n < 1 || k < 1) throw Error(Errc::invalid_dimensions, "quota requires n >= 1 and k >= 1");
    check_range(n, k, value);
    return Quota{value};
}

Quota make_quota(std::int64_t n, int k, const std::string& spec) {
    if (n < 1 || k < 1) throw Error(Errc::invalid_dimensions, "quota requires n >= 1 and k >= 1");
    if (spec == "hare") return Quota{Rational(n, k)};
    if (spec == "midpoint") return Quota{(Rational(n, k + 1) + Rational(n, k)) * Rational(1, 2)};
    return make_quota(n, k, Rational::parse(spec));
}

void validate_quota(const PreferenceProfile& profile, const Quota& q) {
    check_range(profile.n, profile.k, q.value);
}

std::int64_t demand_cap(std::int64_t coalition_size, const Quota& q) {
    if (coalition_size < 0)
        throw Error(Errc::index_out_of_range, "coalition size must be nonnegative");
    return q.value.floor_quotient(coalition_size);
}

} // namespace psc
