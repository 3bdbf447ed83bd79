#include "doctest.h"

#include <algorithm>

#include "fixtures.hpp"
#include "psc/coalition.hpp"
#include "psc/generate.hpp"
#include "psc/verify.hpp"

using namespace psc;
using fixtures::code;
using fixtures::thrown_code;

TEST_SUITE("generate") {

TEST_CASE("gen_impartial shape and determinism") {
    const auto p = gen_impartial(3, 3, 1, 7);
    CHECK(p.n == 3);
    CHECK(p.m == 3);
    CHECK(p.k == 1);
    CHECK(p.candidate_names == std::vector<std::string>{"a", "b", "c"});
    std::int64_t total = 0;
    for (const auto& ballot : p.ballots) total += ballot.multiplicity;
    CHECK(total == 3);

    CHECK(gen_impartial(3, 3, 1, 7) == p);
    CHECK(serialize_profile(gen_impartial(3, 3, 1, 7)) == serialize_profile(p));
    CHECK(gen_impartial(3, 3, 1, 8) != p);

    CHECK(thrown_code([] { gen_impartial(0, 3, 1, 1); }) == code(Errc::invalid_dimensions));
    CHECK(thrown_code([] { gen_impartial(3, 3, 4, 1); }) == code(Errc::invalid_dimensions));

    const auto wide = gen_impartial(2, 30, 2, 1);
    CHECK(wide.candidate_names[0] == "c1");
    CHECK(wide.candidate_names[29] == "c30");
}

TEST_CASE("gen_blocs plants solid coalitions") {
    const std::vector<BlocSpec> blocs{{2, {0, 1}}, {2, {2, 3}}};
    const auto p = gen_blocs(blocs, 4, 2, 1);
    CHECK(p.n == 4);
    CHECK(maximal_support(p, {0, 1}).first >= 2);
    CHECK(maximal_support(p, {2, 3}).first >= 2);

    const auto all_a = gen_blocs({{4, {0}}}, 3, 1, 5);
    for (const auto& ballot : all_a.ballots) CHECK(ballot.order[0] == 0);

    CHECK(thrown_code([] { gen_blocs({{1, {0, 1}}, {1, {0, 2}}}, 3, 1, 1); }) ==
          code(Errc::overlapping_blocs));
    CHECK(thrown_code([] { gen_blocs({{0, {0}}}, 3, 1, 1); }) == code(Errc::invalid_dimensions));
    CHECK(thrown_code([] { gen_blocs({}, 3, 1, 1); }) == code(Errc::invalid_dimensions));
    CHECK(thrown_code([] { gen_blocs({{1, {9}}}, 3, 1, 1); }) == code(Errc::unknown_candidate));
}

TEST_CASE("large-enough blocs force representation in every PSC committee") {
    // hare quota 2: each bloc of 2 voters is entitled to one of its candidates
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto p = gen_blocs({{2, {0, 1}}, {2, {2, 3}}}, 4, 2, seed);
        const auto q = fixtures::hare(p);
        const auto committees = psc_committees_bruteforce(p, q);
        CHECK(!committees.empty());
        for (const auto& w : committees) {
            CHECK(intersection_size(w, {0, 1}) >= 1);
            CHECK(intersection_size(w, {2, 3}) >= 1);
        }
    }
}

TEST_CASE("generators emit parseable canonical ballot files") {
    for (std::uint64_t seed = 20; seed < 30; ++seed) {
        const auto p = gen_impartial(5 + seed % 4, 3 + static_cast<int>(seed % 3), 2, seed);
        CHECK(parse_profile(serialize_profile(p)) == p);

        const auto b = gen_blocs({{3, {0}}, {2, {1, 2}}}, 4, 2, seed);
        CHECK(parse_profile(serialize_profile(b)) == b);
    }
}

} // TEST_SUITE
