#ifndef GPW_NORMALIZE_HPP
#define GPW_NORMALIZE_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpw/bisequence.hpp"

namespace gpw {

/// A directive bi-sequence is normalized when its prefix chain contains every
/// palindromic and E-palindromic prefix of the generated word. Normalization
/// rewrites the bi-sequence without changing the word:
///
/// prefix rules, re-applied until none matches:
///   (a a', RR)        -> (a a' a, RER)
///   (a^i, R^{i-1} E)  -> (a^i a', R^i E)          i >= 1
///   (a^i a' a', R^i EE) -> (a^i a' a' a, R^i ERE) i >= 1
/// then one left-to-right sweep inserting into every factor
///   (a b b', t t' t') -> (a b b' b, t t' t t')
/// where a' and t' denote the complementary letter and antimorphism.

/// One prefix-rule application; `i` is the run parameter of rules 2 and 3.
struct PrefixRuleApplication {
    int rule;
    std::size_t i;

    bool operator==(const PrefixRuleApplication&) const = default;
};

struct NormalizationResult {
    /// Eventually periodic form of the normalized bi-sequence; meaningful
    /// only when periodic_form_found (it is then exact).
    DirectiveBiSequence normalized;
    std::vector<PrefixRuleApplication> applied_prefix_rules;
    /// Sweep insertions performed while producing `emitted`.
    std::size_t sweep_edit_count = 0;
    bool periodic_form_found = false;
    /// The first emitted pairs of the normalized bi-sequence (>= the
    /// requested min_len).
    std::vector<Step> emitted;
};

/// Runs the normalization transducer until at least min_len pairs are final,
/// detecting an eventually periodic form along the way.
NormalizationResult normalize_stream(const DirectiveBiSequence& bi, std::size_t min_len);

/// Convenience: normalize_stream with a default emission length.
NormalizationResult normalize(const DirectiveBiSequence& bi);

struct NoCycleFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Eventually periodic representation of the normalized stream, found by
/// detecting a repeated transducer state within `budget` emitted pairs.
/// Throws NoCycleFound if no repetition shows up.
DirectiveBiSequence detect_periodic_normal_form(const DirectiveBiSequence& bi,
                                                std::size_t budget);

/// Generates the word to length `len` and checks that every palindromic and
/// E-palindromic prefix of length <= len is a member of the prefix chain.
bool is_normalized_upto(const DirectiveBiSequence& bi, std::size_t len);

}  // namespace gpw

#endif  // GPW_NORMALIZE_HPP
