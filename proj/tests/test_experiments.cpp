#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "gpw/closure.hpp"
#include "gpw/complexity.hpp"
#include "gpw/experiments.hpp"
#include "gpw/quadratic.hpp"

using namespace gpw;

TEST_CASE("quadratic integers") {
    const QuadraticInt tau = QuadraticInt::tau();
    const QuadraticInt tau_c = QuadraticInt::tau_conj();
    CHECK(tau * tau_c == QuadraticInt{1, 0});
    CHECK(tau + tau_c == QuadraticInt{14, 0});
    CHECK(tau.pow(2) == 14 * tau - QuadraticInt{1, 0});  // x^2 = 14x - 1
    CHECK(tau.pow(3).conjugate() == tau_c.pow(3));
    CHECK(tau.to_double() == doctest::Approx(13.92820323).epsilon(1e-9));
}

TEST_CASE("weak bispecial factors") {
    CHECK(weak_bispecial(5).str() == "011010110");
    CHECK(weak_bispecial(7).str() == "010101101011001010010101");

    // s_9 is the highlighted 101-letter factor of the published w_9.
    const std::string w9 = appendix_prefixes()[8];
    CHECK(weak_bispecial_length(9) == 101);
    CHECK(weak_bispecial(9).str() == w9.substr(55, 101));
    CHECK(weak_bispecial_length(9) ==
          2 * counterexample_length(4) + 2 * counterexample_length(6) + 1);

    CHECK(is_theta_palindrome(Antimorphism::R, weak_bispecial(5)));
    CHECK(is_theta_palindrome(Antimorphism::R, weak_bispecial(9)));
    CHECK(is_theta_palindrome(Antimorphism::E, weak_bispecial(7)));

    CHECK(weak_bispecial_length(5) == 9);
    CHECK(weak_bispecial_length(7) == 24);
    for (std::size_t k : {5u, 7u, 9u, 11u, 13u}) {
        CHECK(weak_bispecial(k).size() == static_cast<std::size_t>(weak_bispecial_length(k)));
    }

    CHECK_THROWS_AS(weak_bispecial(4), BadIndex);
    CHECK_THROWS_AS(weak_bispecial(3), BadIndex);  // j >= 1 required
    CHECK_THROWS_AS(weak_bispecial_tail(6), BadIndex);
}

TEST_CASE("weak bispecials occur inside their chain member") {
    const PrefixChain chain = counterexample_chain(11);
    for (std::size_t k : {5u, 7u, 9u, 11u}) {
        const Word s = weak_bispecial(k);
        const WordView inside = chain.prefix_view(k);
        const bool found =
            std::search(inside.begin(), inside.end(), s.begin(), s.end()) != inside.end();
        CHECK(found);
    }
}

TEST_CASE("boundary factors of the weak bispecials") {
    const PrefixChain chain = counterexample_chain(11);

    const Word p5 = weak_bispecial_tail(5);
    CHECK(p5.str() == "1010110");  // w_3 · strip_prefix(w_0, w_1)
    const Word p7 = weak_bispecial_tail(7);
    CHECK(p7 == chain.prefix(5) + strip_prefix(chain.prefix(2), chain.prefix(3)));

    for (std::size_t k : {5u, 7u, 9u, 11u}) {
        const Word tail = weak_bispecial_tail(k);
        const Word s = weak_bispecial(k);
        REQUIRE(tail.size() <= s.size());
        CHECK(s.suffix(tail.size()) == tail);
        CHECK(is_prefix(tail.view(), chain.prefix_view(k - 1)));  // w_{4j} resp. w_{4j+2}
    }
}

TEST_CASE("bispecial lemma verification") {
    const std::vector<Check> checks = verify_bispecial_lemmas(2, 110);
    for (const Check& c : checks) {
        INFO(c.name, ": expected ", c.expected, ", actual ", c.actual);
        CHECK(c.pass);
    }
}

TEST_CASE("bispecial prefixes have at least three bilateral extensions") {
    const PrefixChain window = counterexample_chain(15);
    const WordView text = window.word().view();
    for (std::size_t n = 1; n + 2 <= 144; ++n) {
        const BispecialReport rep = extension_sets(text, text.first(n));
        if (rep.cls == BispecialClass::not_bispecial) continue;
        CHECK(rep.bilateral_count() >= 3);
    }
}

TEST_CASE("second-difference band structure in the exact window") {
    const PrefixChain window = counterexample_chain(15);
    const ComplexityProfile profile = substring_complexity(window.word().view(), 144);
    std::set<std::int64_t> strong_lengths, weak_lengths;
    for (std::size_t m = 1; 2 * m + 1 <= 15; ++m) {
        strong_lengths.insert(counterexample_length(2 * static_cast<std::int64_t>(m) + 1));
    }
    for (std::size_t m = 2; 2 * m + 1 <= 15; ++m) {
        weak_lengths.insert(weak_bispecial_length(2 * m + 1));
    }
    for (std::size_t n = 1; n + 2 <= 144; ++n) {
        const std::int64_t d2 = profile.second_diff(n);
        const auto v = static_cast<std::int64_t>(n);
        if (strong_lengths.contains(v)) {
            CHECK(d2 >= 2);
        } else if (weak_lengths.contains(v)) {
            CHECK(d2 >= -2);
        } else {
            CHECK(d2 >= 0);
        }
    }
}

TEST_CASE("length report") {
    const std::vector<Check> checks = length_sequences(6, 12);
    for (const Check& c : checks) {
        INFO(c.name, ": expected ", c.expected, ", actual ", c.actual);
        CHECK(c.pass);
    }

    // closed form at k = 1: (1+2r3)tau + (1-2r3)tau' = 62 = 6|w_4| + 2
    const QuadraticInt lhs =
        QuadraticInt{1, 2} * QuadraticInt::tau() + QuadraticInt{1, -2} * QuadraticInt::tau_conj();
    CHECK(lhs == QuadraticInt{62, 0});
    CHECK(62 == 6 * counterexample_length(4) + 2);
}

TEST_CASE("limsup constant and series") {
    CHECK(std::abs(limsup_analytic_constant() - 4.57735) < 1e-5);
    CHECK(std::abs(limsup_analytic_constant() - (4.0 + 1.0 / std::sqrt(3.0))) < 1e-12);
    CHECK(limsup_constant_symbolic_check());

    CHECK(limsup_max_k_for_budget(10'000'000) == 3);
    CHECK(limsup_max_k_for_budget(300'000) == 2);

    const LimsupReport report = limsup_series(2);
    REQUIRE(report.samples.size() == 2);
    CHECK(report.samples[0].n == 102);
    CHECK(report.samples[0].complexity > 4 * 102);
    for (const LimsupSample& s : report.samples) {
        CHECK(s.ratio.to_double() >= 4.5);
        CHECK(s.ratio.to_double() < 6.0);
    }
    CHECK_THROWS_AS(limsup_series(4, 10'000'000), WindowTooSmall);
}

TEST_CASE("occurrence classification of 110") {
    const Word v = Word::from_string("110");

    const std::vector<OccurrenceRecord> in_w4 = classify_occurrences(v, 4);
    REQUIRE(in_w4.size() == 2);
    CHECK(in_w4[0].factor.str() == "011");
    CHECK(in_w4[0].position == 3);
    CHECK(in_w4[0].regular);
    CHECK(in_w4[0].image == ImageKind::reversal);
    CHECK(in_w4[1].factor.str() == "110");
    CHECK(in_w4[1].position == 4);
    CHECK(in_w4[1].regular);
    CHECK(in_w4[1].image == ImageKind::identity);

    const std::vector<OccurrenceRecord> in_w5 = classify_occurrences(v, 5);
    bool found_irregular = false;
    for (const OccurrenceRecord& rec : in_w5) {
        if (rec.position == 9 && rec.factor.str() == "110") {
            CHECK_FALSE(rec.regular);
            found_irregular = true;
        }
        if (rec.position == 4 && rec.factor.str() == "110") CHECK(rec.regular);
    }
    CHECK(found_irregular);
}

TEST_CASE("occurrences of w_4 and E(w_4) in w_8 are all regular") {
    const PrefixChain chain = counterexample_chain(8);
    const Word w4 = chain.prefix(4);
    const std::vector<OccurrenceRecord> records = classify_occurrences(w4, 8);
    CHECK(records.size() >= 2);
    for (const OccurrenceRecord& rec : records) {
        INFO("position ", rec.position);
        CHECK(rec.regular);
    }
}

TEST_CASE("regularity is image-invariant") {
    const PrefixChain chain = counterexample_chain(7);
    for (const char* text : {"110", "011", "10101", "0101"}) {
        const Word v = Word::from_string(text);
        auto all_regular = [&](const Word& u) {
            for (const OccurrenceRecord& rec : classify_occurrences(u, 7)) {
                if (!rec.regular) return false;
            }
            return true;
        };
        const bool base = all_regular(v);
        CHECK(base == all_regular(apply_antimorphism(Antimorphism::E, v)));
        CHECK(base == all_regular(apply_antimorphism(Antimorphism::R, v)));
        CHECK(base == all_regular(complement_word(v)));
    }
}

TEST_CASE("scan of a single bi-sequence") {
    const ScanRecord sturmian = scan_single(DirectiveBiSequence::parse("(01)^w", "(R)^w"), 120,
                                            Rational{6, 1}, 100000);
    CHECK(sturmian.n_checked == 120);
    CHECK(sturmian.max_first_diff == 1);
    CHECK(sturmian.max_ratio == Rational::of(2, 1));  // C(1)/1
    CHECK(sturmian.violations.empty());
    CHECK_FALSE(sturmian.periodic);

    const ScanRecord constant =
        scan_single(DirectiveBiSequence::parse("(1)^w", "(R)^w"), 50, Rational{6, 1}, 100000);
    CHECK(constant.periodic);
    CHECK(constant.max_first_diff == 0);
}

TEST_CASE("scan enumeration: canonical dedup and determinism") {
    ScanOptions options;
    options.period_max = 2;
    options.preperiod_max = 1;
    options.n_max = 60;
    options.letter_budget = 60000;

    const std::vector<ScanRecord> serial = scan_conjecture(options);
    CHECK(!serial.empty());

    // No duplicate canonical keys, and complement representatives only once.
    std::set<std::pair<std::string, std::string>> keys;
    for (const ScanRecord& rec : serial) {
        CHECK(keys.emplace(rec.delta, rec.theta).second);
    }

    options.jobs = 3;
    const std::vector<ScanRecord> parallel = scan_conjecture(options);
    REQUIRE(parallel.size() == serial.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].delta == parallel[i].delta);
        CHECK(serial[i].max_ratio == parallel[i].max_ratio);
        CHECK(serial[i].n_checked == parallel[i].n_checked);
    }

    // The Sturmian record is present with its known values.
    bool found = false;
    for (const ScanRecord& rec : serial) {
        if (rec.delta == "(01)^w" && rec.theta == "(R)^w") {
            found = true;
            CHECK(rec.max_first_diff == 1);
        }
    }
    CHECK(found);
}

TEST_CASE("verification suite passes end to end") {
    const std::vector<Check> checks = verify_paper_suite();
    CHECK(checks.size() >= 15);
    for (const Check& c : checks) {
        INFO(c.name, ": expected ", c.expected, ", actual ", c.actual);
        CHECK(c.pass);
    }
    CHECK(all_pass(checks));
}
