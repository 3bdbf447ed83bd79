#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "fixtures.hpp"
#include "psc/generate.hpp"
#include "psc/json_io.hpp"
#include "psc/md.hpp"
#include "psc/prng.hpp"
#include "psc/verify.hpp"

using namespace psc;
using fixtures::code;
using fixtures::cset;
using fixtures::thrown_code;

TEST_SUITE("md") {

TEST_CASE("choice_set unions all unmet classes") {
    const auto p1 = fixtures::p1();
    const auto q1 = fixtures::hare(p1);
    CHECK(choice_set(p1, q1, {}, 1) == cset(p1, {"a", "c"}));
    CHECK(choice_set(p1, q1, cset(p1, {"a", "c"}), 4).empty());

    const auto p2 = fixtures::p2();
    CHECK(choice_set(p2, fixtures::hare(p2), cset(p2, {"a"}), 3) == cset(p2, {"b", "c"}));
}

TEST_CASE("run_md with lexicographic tie-break on the reference profiles") {
    const auto p1 = fixtures::p1();
    const auto r1 = run_md(p1, fixtures::hare(p1), TieBreakPolicy::lexicographic());
    CHECK(r1.committee == cset(p1, {"a", "c"}));
    REQUIRE(r1.trace.size() == 2);
    CHECK(r1.trace[0].stage == 1);
    CHECK(r1.trace[0].trigger_class == cset(p1, {"a"}));
    CHECK(r1.trace[0].chosen == p1.index_of("a"));
    CHECK(r1.trace[0].committee == cset(p1, {"a"}));
    CHECK(r1.trace[1].stage == 1);
    CHECK(r1.trace[1].trigger_class == cset(p1, {"c"}));
    CHECK(r1.trace[1].chosen == p1.index_of("c"));

    const auto p2 = fixtures::p2();
    const auto r2 = run_md(p2, fixtures::hare(p2), TieBreakPolicy::lexicographic());
    CHECK(r2.committee == cset(p2, {"a", "b"}));
    REQUIRE(r2.trace.size() == 2);
    CHECK(r2.trace[0].stage == 1);
    CHECK(r2.trace[0].trigger_class == cset(p2, {"a"}));
    CHECK(r2.trace[1].stage == 3);
    CHECK(r2.trace[1].trigger_class == cset(p2, {"a", "b", "c"}));
    CHECK(r2.trace[1].chosen == p2.index_of("b"));
}

TEST_CASE("scripted policy follows the script or fails loudly") {
    const auto p2 = fixtures::p2();
    const auto q = fixtures::hare(p2);
    const auto r = run_md(p2, q, TieBreakPolicy::scripted({p2.index_of("a"), p2.index_of("c")}));
    CHECK(r.committee == cset(p2, {"a", "c"}));

    // stage-1 choice set is {a} only
    CHECK(thrown_code([&] { run_md(p2, q, TieBreakPolicy::scripted({p2.index_of("b")})); }) ==
          code(Errc::script_invalid_choice));
    CHECK(thrown_code([&] { run_md(p2, q, TieBreakPolicy::scripted({p2.index_of("a")})); }) ==
          code(Errc::script_exhausted));
    // surplus script entries after the final stage are ignored
    const auto extra = run_md(p2, q, TieBreakPolicy::scripted(
        {p2.index_of("a"), p2.index_of("c"), p2.index_of("b")}));
    CHECK(extra.committee == cset(p2, {"a", "c"}));
}

TEST_CASE("policy spec parsing") {
    const auto p2 = fixtures::p2();
    CHECK(parse_policy(p2, "lex").kind == TieBreakPolicy::Kind::lexicographic);
    CHECK(parse_policy(p2, "borda").kind == TieBreakPolicy::Kind::borda);
    const auto r = parse_policy(p2, "random:12345");
    CHECK(r.kind == TieBreakPolicy::Kind::seeded_random);
    CHECK(r.seed == 12345);
    const auto s = parse_policy(p2, "script:a,c");
    CHECK(s.script == std::vector<CandidateId>{0, 2});
    CHECK(thrown_code([&] { parse_policy(p2, "random:x"); }) == code(Errc::malformed_policy_spec));
    CHECK(thrown_code([&] { parse_policy(p2, "bogus"); }) == code(Errc::malformed_policy_spec));
    CHECK(thrown_code([&] { parse_policy(p2, "script:a,zz"); }) == code(Errc::unknown_candidate));
}

TEST_CASE("borda_scores") {
    const auto p2 = fixtures::p2();
    CHECK(borda_scores(p2) == std::vector<std::int64_t>{5, 4, 3});

    const auto single = parse_profile("1 2 1\ncandidates: a,b\n1: a,b\n");
    CHECK(borda_scores(single) == std::vector<std::int64_t>{1, 0});

    const auto sym = parse_profile("2 2 1\ncandidates: a,b\n1: a,b\n1: b,a\n");
    CHECK(borda_scores(sym) == std::vector<std::int64_t>{1, 1});
}

TEST_CASE("borda policy breaks exact score ties by lowest index") {
    // two voters a>b, b>a: stage-2 class {a,b} demands one seat, scores tied 1:1
    const auto sym = parse_profile("2 2 1\ncandidates: a,b\n1: a,b\n1: b,a\n");
    const auto q = fixtures::hare(sym);
    const auto borda = run_md(sym, q, TieBreakPolicy::borda());
    const auto scripted = run_md(sym, q, TieBreakPolicy::scripted({sym.index_of("a")}));
    CHECK(borda.committee == scripted.committee);
    CHECK(borda.committee == cset(sym, {"a"}));

    // when scores differ the higher one wins even where lex would pick the other
    const auto skew = parse_profile(
        "4 3 2\n"
        "candidates: a,b,c\n"
        "2: a,c,b\n"
        "1: b,c,a\n"
        "1: c,b,a\n");
    // stage-2 choice set is {b,c}; borda gives b:3, c:5
    CHECK(borda_scores(skew) == std::vector<std::int64_t>{4, 3, 5});
    CHECK(run_md(skew, fixtures::hare(skew), TieBreakPolicy::borda()).committee ==
          cset(skew, {"a", "c"}));
    CHECK(run_md(skew, fixtures::hare(skew), TieBreakPolicy::lexicographic()).committee ==
          cset(skew, {"a", "b"}));
}

TEST_CASE("identical inputs give byte-identical traces") {
    const auto p = gen_impartial(6, 5, 3, 77);
    const auto q = fixtures::hare(p);
    const auto a = run_md(p, q, TieBreakPolicy::seeded_random(1234));
    const auto b = run_md(p, q, TieBreakPolicy::seeded_random(1234));
    CHECK(a.committee == b.committee);
    CHECK(a.trace == b.trace);
    CHECK(trace_json_lines(p, a.trace) == trace_json_lines(p, b.trace));
}

TEST_CASE("every policy yields a size-k PSC committee") {
    Xorshift64Star rng(314159);
    for (int trial = 0; trial < 150; ++trial) {
        const std::int64_t n = 2 + static_cast<std::int64_t>(rng.below(7));
        const int m = 2 + static_cast<int>(rng.below(5));
        const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(m, 4))));
        const auto p = gen_impartial(n, m, k, rng.next());
        const auto q = make_quota(n, k, trial % 3 == 0 ? "midpoint" : "hare");

        TieBreakPolicy policy;
        switch (trial % 4) {
            case 0: policy = TieBreakPolicy::lexicographic(); break;
            case 1: policy = TieBreakPolicy::borda(); break;
            case 2: policy = TieBreakPolicy::seeded_random(rng.next()); break;
            case 3: {
                // replay a seeded run as a script: a valid adversarial script
                const auto pre = run_md(p, q, TieBreakPolicy::seeded_random(rng.next()));
                std::vector<CandidateId> script;
                for (const auto& step : pre.trace) script.push_back(step.chosen);
                policy = TieBreakPolicy::scripted(std::move(script));
                break;
            }
        }
        const auto result = run_md(p, q, policy);
        CHECK(static_cast<int>(result.committee.size()) == k);
        CHECK(verify_psc(p, q, result.committee).satisfies_psc);
        CHECK(result.trace.size() == static_cast<std::size_t>(k));

        // stages nondecreasing, committee grows by one per step
        for (std::size_t i = 0; i < result.trace.size(); ++i) {
            if (i) CHECK(result.trace[i].stage >= result.trace[i - 1].stage);
            CHECK(result.trace[i].committee.size() == i + 1);
        }
    }
}

TEST_CASE("each addition strictly shrinks the stage shortfall") {
    const auto shortfall = [](const PreferenceProfile& p, const Quota& q,
                              const CandidateSet& w, int j) {
        std::int64_t total = 0;
        for (const auto& witness : unmet_demands(p, q, w, j))
            total += witness.required - witness.achieved;
        return total;
    };
    Xorshift64Star rng(5150);
    for (int trial = 0; trial < 60; ++trial) {
        const std::int64_t n = 2 + static_cast<std::int64_t>(rng.below(7));
        const int m = 2 + static_cast<int>(rng.below(5));
        const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(m, 4))));
        const auto p = gen_impartial(n, m, k, rng.next());
        const auto q = make_quota(n, k, "hare");
        const auto result = run_md(p, q, TieBreakPolicy::seeded_random(rng.next()));

        int per_stage = 0;
        int last_stage = 0;
        for (const auto& step : result.trace) {
            per_stage = (step.stage == last_stage) ? per_stage + 1 : 1;
            last_stage = step.stage;
            CHECK(per_stage <= k);
            CandidateSet before = step.committee;
            before.erase(std::find(before.begin(), before.end(), step.chosen));
            CHECK(shortfall(p, q, step.committee, step.stage) <
                  shortfall(p, q, before, step.stage));
        }
    }
}

} // TEST_SUITE
