#ifndef GPW_EERTREE_HPP
#define GPW_EERTREE_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "gpw/word.hpp"

namespace gpw {

/// Incremental index of the theta-palindromic suffixes of a growing word
/// (a palindromic tree). Letters are fed left to right; after each letter the
/// tracker knows the longest theta-palindromic suffix of the word so far.
///
/// The R variant is the classic eertree with the imaginary root of length -1.
/// The E variant has only the empty root: E-palindromes have even length and
/// extend as comp(c)·p·c, and the longest E-palindromic suffix may be empty.
class PalindromeSuffixTracker {
public:
    explicit PalindromeSuffixTracker(Antimorphism theta);

    /// Consumes letters of `text` beyond what has already been processed.
    /// `text` must be the whole word read so far (the tracker keeps no copy).
    void absorb(WordView text);

    std::size_t processed() const { return processed_; }

    /// Length of the longest theta-palindromic suffix of the processed word.
    std::size_t longest_suffix_length() const { return static_cast<std::size_t>(len_[last_]); }

    /// Number of distinct nonempty theta-palindromic factors seen.
    std::size_t distinct_palindromes() const;

private:
    std::int32_t make_node(std::int32_t len, std::int32_t link);
    bool extendable(std::int32_t node, WordView text, std::size_t i, Letter match) const;
    void push(WordView text, std::size_t i);

    Antimorphism theta_;
    std::vector<std::int32_t> len_;
    std::vector<std::int32_t> link_;
    std::vector<std::array<std::int32_t, 2>> child_;
    std::int32_t last_ = 0;
    std::size_t processed_ = 0;
};

}  // namespace gpw

#endif  // GPW_EERTREE_HPP
