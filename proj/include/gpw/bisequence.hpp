#ifndef GPW_BISEQUENCE_HPP
#define GPW_BISEQUENCE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gpw/word.hpp"

namespace gpw {

/// One step of a directive bi-sequence: the letter to append and the
/// antimorphism whose closure is taken.
struct Step {
    Letter letter;
    Antimorphism theta;

    bool operator==(const Step&) const = default;
    auto operator<=>(const Step&) const = default;
};

struct InvalidBiSequence : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An eventually periodic sequence of (letter, antimorphism) pairs.
/// Indexing is 1-based: position i resolves to preperiod[i-1] when
/// i <= |preperiod| and cycles through the period afterwards.
///
/// Text grammar for each component (letters over {0,1}, antimorphisms over
/// {R,E}):  sequence := block* "(" block+ ")^w".  The two component strings
/// may use different period lengths; they are merged over a common index set
/// (preperiod = max, period = lcm).
class DirectiveBiSequence {
public:
    DirectiveBiSequence(std::vector<Step> preperiod, std::vector<Step> period);

    static DirectiveBiSequence parse(std::string_view delta_text, std::string_view theta_text);

    const std::vector<Step>& preperiod() const { return preperiod_; }
    const std::vector<Step>& period() const { return period_; }

    /// The i-th pair (delta_i, theta_i), i >= 1.
    Step at(std::size_t i) const;

    /// Structurally minimal representation of the same sequence: shortest
    /// period (primitive root) and shortest preperiod.
    DirectiveBiSequence canonical() const;

    /// True iff both describe the same infinite sequence of pairs.
    bool same_sequence(const DirectiveBiSequence& other) const;

    /// Letters complemented, antimorphisms unchanged. The generated word is
    /// the letterwise complement of the original.
    DirectiveBiSequence complemented() const;

    /// Text form of the letter component, e.g. "1010(1)^w".
    std::string delta_text() const;
    /// Text form of the antimorphism component, e.g. "RERE(RREE)^w".
    std::string theta_text() const;

    bool operator==(const DirectiveBiSequence&) const = default;

private:
    std::vector<Step> preperiod_;
    std::vector<Step> period_;
};

}  // namespace gpw

#endif  // GPW_BISEQUENCE_HPP
