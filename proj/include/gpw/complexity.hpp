#ifndef GPW_COMPLEXITY_HPP
#define GPW_COMPLEXITY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "gpw/bisequence.hpp"
#include "gpw/word.hpp"

namespace gpw {

/// Online suffix automaton over the binary alphabet; counts distinct factors
/// per length in one pass over the states.
class SuffixAutomaton {
public:
    SuffixAutomaton();

    void extend(Letter c);
    void extend(WordView w);

    std::size_t length() const { return length_; }
    std::size_t states() const { return len_.size(); }

    /// counts[n] = number of distinct factors of length n, 0 <= n <= n_max
    /// (counts[0] = 1, the empty factor).
    std::vector<std::int64_t> factor_counts(std::size_t n_max) const;

private:
    std::vector<std::int32_t> len_;
    std::vector<std::int32_t> link_;
    std::vector<std::array<std::int32_t, 2>> next_;
    std::int32_t last_ = 0;
    std::size_t length_ = 0;
};

/// Factor-complexity table of a finite word: C(n) with first and second
/// differences. `exact_upto` is the largest n for which the values are
/// certified to equal those of the infinite word the prefix came from; it is
/// caller policy (0 when nothing beyond C(0) is certified).
struct ComplexityProfile {
    std::vector<std::int64_t> values;  // C(0)..C(n_max)
    std::int64_t exact_upto = 0;

    std::size_t n_max() const { return values.size() - 1; }
    std::int64_t value(std::size_t n) const { return values.at(n); }
    std::int64_t first_diff(std::size_t n) const { return values.at(n + 1) - values.at(n); }
    std::int64_t second_diff(std::size_t n) const {
        return values.at(n + 2) - 2 * values.at(n + 1) + values.at(n);
    }
};

/// Exact factor counts of the prefix p for all n <= n_max (requires
/// n_max <= |p|).
ComplexityProfile substring_complexity(WordView p, std::size_t n_max);

/// Smallest n <= n_max with C(n) <= n — the Morse-Hedlund witness of
/// eventual periodicity — or nullopt.
std::optional<std::size_t> morse_hedlund_periodicity(WordView p, std::size_t n_max);

enum class BispecialClass { weak, strong, neutral_bispecial, not_bispecial };

/// Extension data of one factor observed inside a reference word. Masks are
/// indexed by letter (bit a) and by pair (bit 2a+b for the extension a·w·b).
struct BispecialReport {
    Word factor;
    std::uint8_t left_mask = 0;
    std::uint8_t right_mask = 0;
    std::uint8_t bilateral_mask = 0;
    int b_index = 0;
    BispecialClass cls = BispecialClass::not_bispecial;

    int left_count() const;
    int right_count() const;
    int bilateral_count() const;
    bool has_bilateral(Letter a, Letter b) const {
        return bilateral_mask & (1u << (2 * a + b));
    }
};

struct FactorAbsent : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Collects every observed left/right/bilateral extension of w inside p and
/// classifies w. Meaningful for the infinite word only when p is an exact
/// window for |w| + 2.
BispecialReport extension_sets(WordView p, WordView w);

/// Reports for all bispecial factors of length n inside p (factors with both
/// letters on each side). The b_index of every unreported length-n factor
/// is 0, so the reported b-indices sum to the second complexity difference
/// inside an exact window.
std::vector<BispecialReport> classify_bispecials(WordView p, std::size_t n);

enum class ExactnessMethod { lemma_window, stabilization };

struct ExactnessWindow {
    std::int64_t prefix_len_used;
    std::int64_t max_exact_n;
    ExactnessMethod method;
};

/// Containment window of the counterexample word: the prefix w_{k+2} holds
/// every factor of length <= |w_{k-5}| of the infinite word (k >= 5). For
/// extension sets at length n the window must satisfy n + 2 <= |w_{k-5}|.
ExactnessWindow counterexample_exact_window(std::size_t k);

/// Smallest k usable with counterexample_exact_window so that factor counts
/// up to length n are certified.
std::size_t counterexample_window_for_length(std::int64_t n);

/// Stabilization-based complexity for arbitrary bi-sequences: values are
/// flagged stable once unchanged while the chain grows across a span of
/// confirmation steps. Stable values are lower bounds with confidence, never
/// certified exact.
struct StableProfile {
    ComplexityProfile profile;      // from the final chain prefix; exact_upto = 0
    std::size_t stable_upto = 0;    // all n <= stable_upto are stable
    std::size_t prefix_len = 0;
    bool hit_budget = false;
    std::optional<std::size_t> periodic_evidence;  // Morse-Hedlund fired at n
};

StableProfile stable_complexity(const DirectiveBiSequence& bi, std::size_t n_max,
                                std::size_t letter_budget);

}  // namespace gpw

#endif  // GPW_COMPLEXITY_HPP
