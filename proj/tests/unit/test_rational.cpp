#include "doctest.h"

#include "fixtures.hpp"
#include "psc/prng.hpp"
#include "psc/quota.hpp"
#include "psc/rational.hpp"

using namespace psc;
using fixtures::code;
using fixtures::thrown_code;

TEST_SUITE("rational") {

TEST_CASE("normalization and exact comparison") {
    CHECK(Rational(4, 2) == Rational(2, 1));
    CHECK(Rational(-4, -2) == Rational(2, 1));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(25, 12).str() == "25/12");
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(2, 3) < Rational(3, 4));
    CHECK(Rational(5, 3) <= Rational(5, 3));
    CHECK_FALSE(Rational(5, 3) < Rational(5, 3));
    // boundary case that floating point would get wrong for large values
    CHECK(Rational(1000000000000000000LL, 999999999999999999LL) > Rational(1, 1));
}

TEST_CASE("parse accepts p/r and bare integers") {
    CHECK(Rational::parse("25/12") == Rational(25, 12));
    CHECK(Rational::parse("2") == Rational(2, 1));
    CHECK(thrown_code([] { Rational::parse("2.5"); }) == code(Errc::malformed_quota_spec));
    CHECK(thrown_code([] { Rational::parse("3/0"); }) == code(Errc::malformed_quota_spec));
    CHECK(thrown_code([] { Rational::parse(""); }) == code(Errc::malformed_quota_spec));
    CHECK(thrown_code([] { Rational::parse("a/b"); }) == code(Errc::malformed_quota_spec));
}

TEST_CASE("make_quota named and explicit specs") {
    CHECK(make_quota(4, 2, "hare").value == Rational(2, 1));
    CHECK(make_quota(5, 2, "midpoint").value == Rational(25, 12));
    CHECK(make_quota(4, 2, "3/2").value == Rational(3, 2));
    // 1/1 <= 4/3, so it falls outside (4/3, 2]
    CHECK(thrown_code([] { make_quota(4, 2, "1/1"); }) == code(Errc::quota_out_of_range));
    CHECK(thrown_code([] { make_quota(4, 2, "4/3"); }) == code(Errc::quota_out_of_range));
    CHECK(make_quota(4, 2, "2/1").value == Rational(2, 1)); // upper bound inclusive
    CHECK(thrown_code([] { make_quota(4, 2, "9/4"); }) == code(Errc::quota_out_of_range));
    CHECK(thrown_code([] { make_quota(4, 2, "droop"); }) == code(Errc::malformed_quota_spec));
}

TEST_CASE("demand_cap stated values") {
    CHECK(demand_cap(4, Quota{Rational(2, 1)}) == 2);
    CHECK(demand_cap(3, Quota{Rational(2, 1)}) == 1);
    CHECK(demand_cap(5, Quota{Rational(25, 12)}) == 2);
    CHECK(demand_cap(0, Quota{Rational(2, 1)}) == 0);
    CHECK(thrown_code([] { demand_cap(-1, Quota{Rational(2, 1)}); }) == code(Errc::index_out_of_range));
}

TEST_CASE("demand_cap bracket and monotonicity properties") {
    Xorshift64Star rng(20240811);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::int64_t num = 1 + static_cast<std::int64_t>(rng.below(40));
        const std::int64_t den = 1 + static_cast<std::int64_t>(rng.below(40));
        const Quota q{Rational(num, den)};
        const std::int64_t size = static_cast<std::int64_t>(rng.below(200));
        const std::int64_t cap = demand_cap(size, q);

        // cap*q <= size < (cap+1)*q, exactly
        CHECK(cap * num <= size * den);
        CHECK(size * den < (cap + 1) * num);
        CHECK(demand_cap(size + 1, q) >= cap);
    }
}

TEST_CASE("whole electorate demands exactly k seats under any valid quota") {
    Xorshift64Star rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::int64_t n = 1 + static_cast<std::int64_t>(rng.below(60));
        const int k = 1 + static_cast<int>(rng.below(8));

        CHECK(demand_cap(n, make_quota(n, k, "hare")) == k);
        CHECK(demand_cap(n, make_quota(n, k, "midpoint")) == k);

        // a random in-range rational: p/d with n*d/(k+1) < p <= n*d/k
        for (int attempt = 0; attempt < 64; ++attempt) {
            const std::int64_t d = 1 + static_cast<std::int64_t>(rng.below(24));
            std::int64_t hi = (n * d) / k;
            if (hi * (k + 1) <= n * d) continue; // no integer numerator in range
            CHECK(demand_cap(n, make_quota(n, k, Rational(hi, d))) == k);
            break;
        }
    }
}

} // TEST_SUITE
