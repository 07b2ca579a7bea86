#ifndef GPW_EXPERIMENTS_HPP
#define GPW_EXPERIMENTS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gpw/bisequence.hpp"
#include "gpw/complexity.hpp"
#include "gpw/quadratic.hpp"
#include "gpw/word.hpp"

namespace gpw {

struct BadIndex : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct WindowTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact nonnegative rational, reduced.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational of(std::int64_t num, std::int64_t den);
    bool operator==(const Rational&) const = default;
    bool less(const Rational& other) const { return num * other.den < other.num * den; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
};

/// One verification check: name, what was expected, what was measured.
struct Check {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

bool all_pass(const std::vector<Check>& checks);

/// The weak bispecial factors of the counterexample word (k = 4j+1 or 4j+3,
/// j >= 1):
///   s_{4j+1} = R(w_{4j-3}) · strip_prefix(w_{4j-4}, w_{4j-1})
///                          · strip_prefix(w_{4j-4}, w_{4j-3})
///   s_{4j+3} = E(w_{4j-1}) · strip_prefix(w_{4j-2}, w_{4j+1})
///                          · strip_prefix(w_{4j-2}, w_{4j-1})
/// s_{4j+1} is a palindrome, s_{4j+3} an E-palindrome; s_k occurs in w_k.
Word weak_bispecial(std::size_t k);

/// |s_k| from the length identities, without building words.
std::int64_t weak_bispecial_length(std::size_t k);

/// The boundary factor of s_k: a suffix of s_k that is also a prefix of
/// w_{4j} (for k = 4j+1) resp. w_{4j+2} (for k = 4j+3).
Word weak_bispecial_tail(std::size_t k);

/// Checks the bispecial structure of the counterexample word for chain
/// parameters j = 1..j_max: w_{4j+1}, w_{4j+3} strong with all four bilateral
/// extensions, the s-factors and their images weak with the stated extension
/// pairs, the central-factor claims, the length ordering, and (up to
/// exhaustive_max_n) that no other weak bispecial exists at any length.
std::vector<Check> verify_bispecial_lemmas(std::size_t j_max = 1,
                                           std::size_t exhaustive_max_n = 110);

/// Verifies the length recurrences of the counterexample chain against
/// generated words (k <= generated_k_max) and the closed form
/// 6|w_{4k}| + 2 = (1+2*sqrt(3))*tau^k + (1-2*sqrt(3))*tau'^k exactly in
/// Z[sqrt(3)] for k <= closed_form_k_max.
std::vector<Check> length_sequences(std::size_t generated_k_max = 6,
                                    std::size_t closed_form_k_max = 12);

/// 4 + ((tau'+5)/(tau+5)) * (2*tau/(tau-1)); equals 4 + 1/sqrt(3).
double limsup_analytic_constant();

/// Exact witness of the same identity in Z[sqrt(3)].
bool limsup_constant_symbolic_check();

struct LimsupSample {
    std::size_t k;
    std::int64_t n;          // |s_{4k+5}| + 1
    std::int64_t complexity; // certified-exact C(n)
    Rational ratio;
};

struct LimsupReport {
    double analytic_constant = 0;
    std::vector<LimsupSample> samples;
};

/// Largest k whose sample C(|s_{4k+5}|+1) fits a window of at most `letters`
/// letters.
std::size_t limsup_max_k_for_budget(std::int64_t letters);

/// Evaluates C(n)/n at n = |s_{4k+5}|+1 for k = 1..k_max from one certified
/// window. Throws WindowTooSmall when the needed window exceeds the budget.
LimsupReport limsup_series(std::size_t k_max, std::int64_t letter_budget = 12'000'000);

enum class ImageKind { identity, exchange, reversal, exchange_reversal };

/// One occurrence of an image of the queried factor, labeled regular when it
/// is generated from the very first image occurrence by mirror propagation
/// along the prefix chain.
struct OccurrenceRecord {
    Word factor;
    std::size_t position = 0;
    ImageKind image = ImageKind::identity;
    bool regular = false;
    std::optional<std::size_t> generated_at_step;
    std::optional<std::size_t> generated_from;
};

/// Labels every occurrence of every image of v inside the counterexample
/// prefix w_k. Throws FactorAbsent when no image occurs.
std::vector<OccurrenceRecord> classify_occurrences(const Word& v, std::size_t k);

struct ScanOptions {
    std::size_t period_max = 4;
    std::size_t preperiod_max = 2;
    std::size_t n_max = 500;
    Rational threshold = {6, 1};
    std::size_t jobs = 1;
    std::size_t letter_budget = 400'000;
    std::vector<DirectiveBiSequence> extra;  // scanned in addition to the enumeration
};

struct ScanRecord {
    std::string delta;
    std::string theta;
    std::size_t n_checked = 0;   // stable range actually reached
    Rational max_ratio;          // max over n <= n_checked of C(n)/n
    std::int64_t max_first_diff = 0;
    std::vector<std::size_t> violations;  // n with C(n) >= threshold * n
    bool periodic = false;
};

/// Scans one bi-sequence to its stable range.
ScanRecord scan_single(const DirectiveBiSequence& bi, std::size_t n_max, Rational threshold,
                       std::size_t letter_budget);

/// Enumerates all bi-sequences within the size bounds (deduplicated up to
/// structural equality and global letter complement), scans each, and returns
/// records sorted by canonical key. Deterministic for any jobs count.
std::vector<ScanRecord> scan_conjecture(const ScanOptions& options);

using ClosureFn = std::function<Word(Antimorphism, const Word&)>;

/// Brute-force minimality audit: over every word of length <= max_len and
/// both antimorphisms, fn(theta, w) must be the shortest theta-palindrome
/// with prefix w.
bool check_closure_minimality(const ClosureFn& fn, std::size_t max_len);

/// Appendix chain prefixes w_1..w_9 as published, for golden comparisons.
const std::vector<std::string>& appendix_prefixes();

/// Runs every reproduction check in fixed order; failures are data.
std::vector<Check> verify_paper_suite();

}  // namespace gpw

#endif  // GPW_EXPERIMENTS_HPP
