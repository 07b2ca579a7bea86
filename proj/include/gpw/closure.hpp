#ifndef GPW_CLOSURE_HPP
#define GPW_CLOSURE_HPP

#include <cstdint>
#include <vector>

#include "gpw/bisequence.hpp"
#include "gpw/eertree.hpp"
#include "gpw/word.hpp"

namespace gpw {

/// Longest suffix s of w with s = theta(s). Always defined: the empty word
/// qualifies for theta = E, a single letter for theta = R.
Word longest_theta_palindromic_suffix(Antimorphism theta, const Word& w);

/// Quadratic reference scan for the same query; kept as the oracle the
/// incremental index is tested against.
Word scan_longest_theta_palindromic_suffix(Antimorphism theta, WordView w);

/// Shortest theta-palindrome having w as a prefix: with w = p·s and s the
/// longest theta-palindromic suffix, the closure is p·s·theta(p).
Word theta_closure(Antimorphism theta, const Word& w);

/// Metadata of one closure step.
struct ChainStep {
    Letter letter;
    Antimorphism theta;
    std::size_t length_after;
};

/// The prefix chain w_0 = eps, w_1, w_2, ... of iterated closure. Every w_k
/// is a prefix of the last one, so the chain stores a single buffer plus the
/// per-step boundaries.
class PrefixChain {
public:
    PrefixChain() = default;
    PrefixChain(Word word, std::vector<ChainStep> steps);

    /// Number of closure steps taken (the chain holds w_0..w_steps).
    std::size_t steps() const { return steps_.size(); }
    std::size_t length(std::size_t k) const;
    WordView prefix_view(std::size_t k) const { return word_.view(0, length(k)); }
    Word prefix(std::size_t k) const { return word_.prefix(length(k)); }
    const Word& word() const { return word_; }
    const ChainStep& step(std::size_t k) const { return steps_.at(k - 1); }

private:
    Word word_;
    std::vector<ChainStep> steps_;
};

/// Incremental chain generator; each step appends the directive letter and
/// the reflected prefix demanded by the closure. The palindromic-suffix
/// queries are answered by two eertree indexes, so total work is near-linear
/// in the final length.
class ChainBuilder {
public:
    explicit ChainBuilder(DirectiveBiSequence bi);

    void advance();
    void advance_until_length(std::size_t min_length);

    std::size_t steps_done() const { return steps_.size(); }
    std::size_t length() const { return buffer_.size(); }
    WordView view() const { return {buffer_.data(), buffer_.size()}; }
    const std::vector<ChainStep>& steps() const { return steps_; }
    const DirectiveBiSequence& bisequence() const { return bi_; }

    PrefixChain chain() const;

private:
    void push_letter(Letter c);

    DirectiveBiSequence bi_;
    std::vector<Letter> buffer_;
    std::vector<ChainStep> steps_;
    PalindromeSuffixTracker r_tracker_{Antimorphism::R};
    PalindromeSuffixTracker e_tracker_{Antimorphism::E};
};

/// Chain w_0..w_steps for the bi-sequence.
PrefixChain generate_chain(const DirectiveBiSequence& bi, std::size_t steps);

/// First n letters of the generated infinite word.
Word word_prefix(const DirectiveBiSequence& bi, std::size_t n);

/// The directive bi-sequence (1^w, (EERR)^w) of the counterexample word,
/// whose complexity exceeds 4n for all n >= 10.
const DirectiveBiSequence& counterexample_bisequence();

/// Counterexample chain built by concatenation and prefix cancellation only
/// (no palindromic-suffix search):
///   w_{4k+1} = w_{4k}·10·E(w_{4k})
///   w_{4k+2} = w_{4k+1}·strip_prefix(w_{4k-2}, w_{4k+1})
///   w_{4k+3} = w_{4k+2}·strip_prefix(010, R(w_{4k+2}))
///   w_{4k+4} = w_{4k+3}·strip_prefix(w_{4k}, w_{4k+3})
/// with w_z = eps for z <= 0. Identical to generate_chain on the same input.
PrefixChain counterexample_chain(std::size_t steps);

/// |w_0|..|w_k_max| of the counterexample chain, by the length recurrences.
std::vector<std::int64_t> counterexample_lengths(std::size_t k_max);
std::int64_t counterexample_length(std::int64_t k);

enum class ReferenceWord { fibonacci, thue_morse };

/// Length-n prefix of the named morphic fixed point (iterated from 0).
Word reference_word_prefix(ReferenceWord which, std::size_t n);

}  // namespace gpw

#endif  // GPW_CLOSURE_HPP
