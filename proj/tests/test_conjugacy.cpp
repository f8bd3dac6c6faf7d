#include "doctest.h"
#include "helpers.hpp"
#include "symdyn/conjugacy.hpp"

#include <random>
#include <stdexcept>

using namespace symdyn;
using testutil::W;

namespace {

Sft empty_sft() {
    return Sft(testutil::letters("01"), {W("0 0"), W("1 1"), W("0 1")});
}

} // namespace

TEST_CASE("reason strings") {
    CHECK(reason_string(NotConjugateReason::language_count_plateau) == "language-count-plateau");
    CHECK(reason_string(NotConjugateReason::count_overshoot) == "count-overshoot");
    CHECK(reason_string(NotConjugateReason::similarity_failed_at_equal_counts) ==
          "similarity-failed-at-equal-counts");
}

TEST_CASE("classify_case") {
    Sft gm = testutil::golden_mean();
    Sft blocks = block_present_sft(gm, 2);
    CHECK(classify_case(gm, testutil::full_shift("01")) == SizeCase::equal_counts);
    CHECK(classify_case(gm, blocks) == SizeCase::x_smaller);
    CHECK(classify_case(blocks, gm) == SizeCase::y_smaller);
}

TEST_CASE("an SFT is conjugate to its block presentations") {
    Sft gm = testutil::golden_mean();
    Sft blocks = block_present_sft(gm, 2);
    ConjugacyDecision d = decide_direct_conjugacy(gm, blocks);
    CHECK(d.conjugate);
    CHECK(d.m == 2);
    CHECK(d.n == 1);
    CHECK(d.count_computations == 3);
    REQUIRE(d.witness.has_value());
    CHECK(is_similarity_witness(block_present_sft(gm, d.m), block_present_sft(blocks, d.n),
                                *d.witness));

    // mirrored arguments grow the other side
    ConjugacyDecision r = decide_direct_conjugacy(blocks, gm);
    CHECK(r.conjugate);
    CHECK(r.m == 1);
    CHECK(r.n == 2);

    ConjugacyDecision deep = decide_direct_conjugacy(gm, block_present_sft(gm, 3));
    CHECK(deep.conjugate);
    CHECK(deep.m == 3);
    CHECK(deep.n == 1);
    CHECK(deep.count_computations == 4);
}

TEST_CASE("self conjugacy settles at the identity") {
    Sft gm = testutil::golden_mean();
    ConjugacyDecision d = decide_direct_conjugacy(gm, gm);
    CHECK(d.conjugate);
    CHECK(d.m == 1);
    CHECK(d.n == 1);
    CHECK(d.count_computations == 2);
    REQUIRE(d.witness.has_value());
    CHECK(d.witness->mapping().at(Symbol("[0]")) == Symbol("[0]"));
}

TEST_CASE("similarity failure at equal counts") {
    ConjugacyDecision d =
        decide_direct_conjugacy(testutil::golden_mean(), testutil::full_shift("01"));
    CHECK_FALSE(d.conjugate);
    REQUIRE(d.reason.has_value());
    CHECK(*d.reason == NotConjugateReason::similarity_failed_at_equal_counts);
    CHECK(d.m == 1);
    CHECK(d.n == 1);
    CHECK(d.count_computations == 2);
    CHECK_FALSE(d.witness.has_value());
}

TEST_CASE("periodic side plateaus") {
    Sft p2 = testutil::period_two();
    Sft blocks = block_present_sft(testutil::golden_mean(), 2);
    ConjugacyDecision d = decide_direct_conjugacy(p2, blocks);
    CHECK_FALSE(d.conjugate);
    REQUIRE(d.reason.has_value());
    CHECK(*d.reason == NotConjugateReason::language_count_plateau);
    CHECK(d.m == 2);
    CHECK(d.n == 1);
    CHECK(d.count_computations == 3);
}

TEST_CASE("count overshoot") {
    ConjugacyDecision d =
        decide_direct_conjugacy(testutil::golden_mean(), testutil::full_shift("0123"));
    CHECK_FALSE(d.conjugate);
    REQUIRE(d.reason.has_value());
    CHECK(*d.reason == NotConjugateReason::count_overshoot);
    CHECK(d.m == 3); // counts 2, 3, 5 jump over 4
    CHECK(d.n == 1);
    CHECK(d.count_computations == 4);
}

TEST_CASE("iteration cap throws instead of deciding") {
    CHECK_THROWS_AS(decide_direct_conjugacy(testutil::golden_mean(),
                                            testutil::full_shift("01234567"), 1),
                    std::runtime_error);
}

TEST_CASE("empty subshifts") {
    ConjugacyDecision both = decide_direct_conjugacy(empty_sft(), empty_sft());
    CHECK(both.conjugate);
    CHECK(both.m == 1);
    CHECK(both.n == 1);
    REQUIRE(both.witness.has_value());
    CHECK(both.witness->mapping().empty());
    CHECK(both.note == "both subshifts are empty");

    ConjugacyDecision one = decide_direct_conjugacy(empty_sft(), testutil::golden_mean());
    CHECK_FALSE(one.conjugate);
    REQUIRE(one.reason.has_value());
    CHECK(*one.reason == NotConjugateReason::language_count_plateau);
    CHECK(one.note == "exactly one of the subshifts is empty");
    CHECK_FALSE(decide_direct_conjugacy(testutil::golden_mean(), empty_sft()).conjugate);
}

TEST_CASE("decision is symmetric on random pairs") {
    std::mt19937 rng(29u);
    for (int i = 0; i < 15; ++i) {
        Sft a = testutil::random_sft(rng, 3, 2, false);
        Sft b = testutil::random_sft(rng, 3, 2, false);
        ConjugacyDecision ab = decide_direct_conjugacy(a, b, 64);
        ConjugacyDecision ba = decide_direct_conjugacy(b, a, 64);
        CHECK(ab.conjugate == ba.conjugate);
        if (!ab.conjugate) {
            REQUIRE(ab.reason.has_value());
            REQUIRE(ba.reason.has_value());
            CHECK(*ab.reason == *ba.reason);
        }
    }
}

TEST_CASE("witnesses verify on random block presentations") {
    std::mt19937 rng(31u);
    for (int i = 0; i < 10; ++i) {
        Sft x = testutil::random_sft(rng, 3, 2, true);
        for (std::size_t k : {1u, 2u, 3u}) {
            ConjugacyDecision d = decide_direct_conjugacy(x, block_present_sft(x, k), 64);
            CHECK(d.conjugate);
            if (d.conjugate)
                CHECK(is_similarity_witness(block_present_sft(x, d.m),
                                            block_present_sft(block_present_sft(x, k), d.n),
                                            *d.witness));
        }
    }
}
