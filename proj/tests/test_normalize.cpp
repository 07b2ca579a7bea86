#include <doctest.h>

#include <random>

#include "gpw/closure.hpp"
#include "gpw/normalize.hpp"

using namespace gpw;

namespace {

DirectiveBiSequence random_bisequence(std::mt19937& rng, std::size_t max_pre,
                                      std::size_t max_per) {
    std::uniform_int_distribution<std::size_t> pre_dist(0, max_pre);
    std::uniform_int_distribution<std::size_t> per_dist(1, max_per);
    std::uniform_int_distribution<int> bit(0, 1);
    auto step = [&] {
        return Step{static_cast<Letter>(bit(rng)),
                    bit(rng) ? Antimorphism::E : Antimorphism::R};
    };
    std::vector<Step> pre(pre_dist(rng)), per(per_dist(rng));
    for (Step& s : pre) s = step();
    for (Step& s : per) s = step();
    return DirectiveBiSequence(std::move(pre), std::move(per));
}

}  // namespace

TEST_CASE("bi-sequence grammar") {
    const DirectiveBiSequence bi = DirectiveBiSequence::parse("1010(1)^w", "RERE(RREE)^w");
    CHECK(bi.preperiod().size() == 4);
    CHECK(bi.period().size() == 4);  // lcm of 1 and 4
    CHECK(bi.at(1) == Step{1, Antimorphism::R});
    CHECK(bi.at(5) == Step{1, Antimorphism::R});
    CHECK(bi.at(7) == Step{1, Antimorphism::E});
    CHECK(bi.at(11) == Step{1, Antimorphism::E});
    CHECK(bi.delta_text() == "1010(1)^w");
    CHECK(bi.theta_text() == "RERE(RREE)^w");

    CHECK_THROWS_AS(DirectiveBiSequence::parse("101", "(R)^w"), InvalidBiSequence);
    CHECK_THROWS_AS(DirectiveBiSequence::parse("()^w", "(R)^w"), InvalidBiSequence);
    CHECK_THROWS_AS(DirectiveBiSequence::parse("(2)^w", "(R)^w"), InvalidBiSequence);
    CHECK_THROWS_AS(DirectiveBiSequence::parse("(0)^w", "(X)^w"), InvalidBiSequence);
}

TEST_CASE("canonical forms and value equality") {
    const DirectiveBiSequence a = DirectiveBiSequence::parse("(01)^w", "(R)^w");
    const DirectiveBiSequence b = DirectiveBiSequence::parse("01(0101)^w", "RR(RR)^w");
    CHECK(a.same_sequence(b));
    CHECK(a.canonical() == b.canonical());
    CHECK(b.canonical().delta_text() == "(01)^w");
    CHECK(b.canonical().theta_text() == "(R)^w");
    CHECK_FALSE(a.same_sequence(DirectiveBiSequence::parse("(10)^w", "(R)^w")));
}

TEST_CASE("normalization of ((011)^w, (EER)^w)") {
    const DirectiveBiSequence bi = DirectiveBiSequence::parse("(011)^w", "(EER)^w");
    const NormalizationResult result = normalize(bi);
    REQUIRE(result.periodic_form_found);
    CHECK(result.normalized.delta_text() == "01(10)^w");
    CHECK(result.normalized.theta_text() == "(RE)^w");

    // Two prefix rules cascade before the sweep takes over.
    REQUIRE(result.applied_prefix_rules.size() == 2);
    CHECK(result.applied_prefix_rules[0] == PrefixRuleApplication{2, 1});
    CHECK(result.applied_prefix_rules[1] == PrefixRuleApplication{3, 1});
    CHECK(result.sweep_edit_count > 0);

    const DirectiveBiSequence detected = detect_periodic_normal_form(bi, 100);
    CHECK(detected.preperiod() ==
          std::vector<Step>{{0, Antimorphism::R}, {1, Antimorphism::E}});
    CHECK(detected.period() ==
          std::vector<Step>{{1, Antimorphism::R}, {0, Antimorphism::E}});
}

TEST_CASE("normalization of the counterexample bi-sequence") {
    const DirectiveBiSequence result =
        detect_periodic_normal_form(counterexample_bisequence(), 100);
    CHECK(result.delta_text() == "1010(1)^w");
    CHECK(result.theta_text() == "RERE(RREE)^w");
}

TEST_CASE("already-normalized input is a fixpoint") {
    const DirectiveBiSequence bi = DirectiveBiSequence::parse("01(10)^w", "(RE)^w");
    const NormalizationResult result = normalize(bi);
    REQUIRE(result.periodic_form_found);
    CHECK(result.applied_prefix_rules.empty());
    CHECK(result.sweep_edit_count == 0);
    CHECK(result.normalized.same_sequence(bi));

    CHECK(detect_periodic_normal_form(bi, 16).same_sequence(bi));
}

TEST_CASE("a pure-R bi-sequence is not normalized: E-palindromic prefixes are missed") {
    // The chain of ((01)^w, (R)^w) is 0, 010, 010010, ... and skips the
    // E-palindromic prefix 01, so prefix rule 1 fires. The normalized form
    // threads the E-closure step in and generates the same word.
    const DirectiveBiSequence bi = DirectiveBiSequence::parse("(01)^w", "(R)^w");
    CHECK_FALSE(is_normalized_upto(bi, 10));

    const NormalizationResult result = normalize(bi);
    REQUIRE(result.periodic_form_found);
    CHECK(result.applied_prefix_rules ==
          std::vector<PrefixRuleApplication>{PrefixRuleApplication{1, 1}});
    CHECK(word_prefix(result.normalized, 500) == word_prefix(bi, 500));
    CHECK(is_normalized_upto(result.normalized, 200));
}

TEST_CASE("normalized chain of the counterexample shifts by two") {
    const DirectiveBiSequence tilde = detect_periodic_normal_form(counterexample_bisequence(), 100);
    const PrefixChain original = generate_chain(counterexample_bisequence(), 8);
    const PrefixChain normalized = generate_chain(tilde, 10);
    CHECK(normalized.prefix(1).str() == "1");
    CHECK(normalized.prefix(2).str() == "10");
    CHECK(normalized.prefix(3).str() == "101");
    for (std::size_t k = 4; k <= 10; ++k) {
        CHECK(normalized.prefix(k) == original.prefix(k - 2));
    }
}

TEST_CASE("is_normalized_upto examples") {
    CHECK_FALSE(is_normalized_upto(DirectiveBiSequence::parse("(011)^w", "(EER)^w"), 10));
    CHECK(is_normalized_upto(DirectiveBiSequence::parse("01(10)^w", "(RE)^w"), 10));
    CHECK(is_normalized_upto(DirectiveBiSequence::parse("1010(1)^w", "RERE(RREE)^w"), 40));
    CHECK_FALSE(is_normalized_upto(counterexample_bisequence(), 40));
}

TEST_CASE("word invariance, idempotence, completeness on random bi-sequences") {
    std::mt19937 rng(1618);
    int checked = 0;
    for (int iter = 0; iter < 50; ++iter) {
        const DirectiveBiSequence bi = random_bisequence(rng, 2, 4);
        const NormalizationResult result = normalize_stream(bi, 48);
        REQUIRE(result.periodic_form_found);
        ++checked;

        CHECK(word_prefix(bi, 800) == word_prefix(result.normalized, 800));
        CHECK(is_normalized_upto(result.normalized, 160));

        const NormalizationResult again = normalize_stream(result.normalized, 48);
        CHECK(again.applied_prefix_rules.empty());
        CHECK(again.sweep_edit_count == 0);
        CHECK(again.normalized.same_sequence(result.normalized));
    }
    CHECK(checked == 50);
}

TEST_CASE("emitted pairs agree with the periodic form") {
    std::mt19937 rng(5);
    for (int iter = 0; iter < 20; ++iter) {
        const DirectiveBiSequence bi = random_bisequence(rng, 2, 3);
        const NormalizationResult result = normalize_stream(bi, 64);
        REQUIRE(result.periodic_form_found);
        for (std::size_t i = 1; i <= result.emitted.size(); ++i) {
            CHECK(result.emitted[i - 1] == result.normalized.at(i));
        }
    }
}
