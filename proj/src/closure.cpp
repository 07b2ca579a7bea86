#include "gpw/closure.hpp"

#include <cassert>
#include <stdexcept>

namespace gpw {

Word scan_longest_theta_palindromic_suffix(Antimorphism theta, WordView w) {
    const std::size_t n = w.size();
    const std::size_t step = theta == Antimorphism::E ? 2 : 1;
    std::size_t start = theta == Antimorphism::E ? n % 2 : 0;
    for (std::size_t len = n - start; len + step > step; len -= step) {
        if (is_theta_palindrome(theta, w.subspan(n - len))) return Word(w.subspan(n - len));
    }
    return Word{};
}

Word longest_theta_palindromic_suffix(Antimorphism theta, const Word& w) {
    PalindromeSuffixTracker tracker(theta);
    tracker.absorb(w.view());
    return w.suffix(tracker.longest_suffix_length());
}

Word theta_closure(Antimorphism theta, const Word& w) {
    PalindromeSuffixTracker tracker(theta);
    tracker.absorb(w.view());
    const std::size_t p_len = w.size() - tracker.longest_suffix_length();
    Word out;
    out.reserve(w.size() + p_len);
    out.append(w.view());
    for (std::size_t i = p_len; i-- > 0;) {
        out.push_back(theta == Antimorphism::R ? w[i] : complement(w[i]));
    }
    return out;
}

PrefixChain::PrefixChain(Word word, std::vector<ChainStep> steps)
    : word_(std::move(word)), steps_(std::move(steps)) {
    assert(steps_.empty() || steps_.back().length_after == word_.size());
}

std::size_t PrefixChain::length(std::size_t k) const {
    if (k == 0) return 0;
    return steps_.at(k - 1).length_after;
}

ChainBuilder::ChainBuilder(DirectiveBiSequence bi) : bi_(std::move(bi)) {}

void ChainBuilder::push_letter(Letter c) {
    buffer_.push_back(c);
    const WordView text{buffer_.data(), buffer_.size()};
    r_tracker_.absorb(text);
    e_tracker_.absorb(text);
}

void ChainBuilder::advance() {
    const Step step = bi_.at(steps_.size() + 1);
    push_letter(step.letter);

    const PalindromeSuffixTracker& tracker =
        step.theta == Antimorphism::R ? r_tracker_ : e_tracker_;
    const std::size_t p_len = buffer_.size() - tracker.longest_suffix_length();
    // Appending theta(p) completes w_k·delta = p·s to the closure p·s·theta(p).
    for (std::size_t i = p_len; i-- > 0;) {
        Letter c = buffer_[i];
        push_letter(step.theta == Antimorphism::R ? c : complement(c));
    }
    steps_.push_back({step.letter, step.theta, buffer_.size()});
}

void ChainBuilder::advance_until_length(std::size_t min_length) {
    while (buffer_.size() < min_length) advance();
}

PrefixChain ChainBuilder::chain() const {
    return PrefixChain(Word(std::vector<Letter>(buffer_)), steps_);
}

PrefixChain generate_chain(const DirectiveBiSequence& bi, std::size_t steps) {
    ChainBuilder builder(bi);
    for (std::size_t k = 0; k < steps; ++k) builder.advance();
    return builder.chain();
}

Word word_prefix(const DirectiveBiSequence& bi, std::size_t n) {
    if (n == 0) return Word{};
    ChainBuilder builder(bi);
    builder.advance_until_length(n);
    return Word(builder.view().first(n));
}

const DirectiveBiSequence& counterexample_bisequence() {
    static const DirectiveBiSequence bi = DirectiveBiSequence::parse("(1)^w", "(EERR)^w");
    return bi;
}

std::vector<std::int64_t> counterexample_lengths(std::size_t k_max) {
    std::vector<std::int64_t> len(k_max + 1, 0);
    auto at = [&](std::int64_t z) { return z <= 0 ? 0 : len[static_cast<std::size_t>(z)]; };
    for (std::size_t k = 1; k <= k_max; ++k) {
        const std::int64_t j = static_cast<std::int64_t>(k);
        switch (k % 4) {
            case 1: len[k] = 2 * at(j - 1) + 2; break;
            case 2: len[k] = 2 * at(j - 1) - at(j - 4); break;
            case 3: len[k] = 2 * at(j - 1) - 3; break;
            case 0: len[k] = 2 * at(j - 1) - at(j - 4); break;
        }
    }
    return len;
}

std::int64_t counterexample_length(std::int64_t k) {
    if (k <= 0) return 0;
    return counterexample_lengths(static_cast<std::size_t>(k)).back();
}

PrefixChain counterexample_chain(std::size_t steps) {
    if (steps < 1) throw std::invalid_argument("counterexample_chain needs steps >= 1");
    const std::vector<std::int64_t> lengths = counterexample_lengths(steps);

    std::vector<Letter> buf;
    buf.reserve(static_cast<std::size_t>(lengths.back()));
    std::vector<ChainStep> meta;
    meta.reserve(steps);

    auto len_of = [&](std::int64_t z) {
        return z <= 0 ? std::size_t{0} : static_cast<std::size_t>(lengths[static_cast<std::size_t>(z)]);
    };
    for (std::size_t k = 1; k <= steps; ++k) {
        const std::int64_t j = static_cast<std::int64_t>(k);
        const std::size_t m = buf.size();  // |w_{k-1}|
        Antimorphism theta;
        switch (k % 4) {
            case 1: {  // w_{4i}·10·E(w_{4i})
                theta = Antimorphism::E;
                buf.push_back(1);
                buf.push_back(0);
                for (std::size_t i = m; i-- > 0;) buf.push_back(complement(buf[i]));
                break;
            }
            case 3: {  // w·strip_prefix(010, R(w))
                theta = Antimorphism::R;
                assert(m >= 4 && buf[m - 1] == 0 && buf[m - 2] == 1 && buf[m - 3] == 0);
                for (std::size_t i = m - 3; i-- > 0;) buf.push_back(buf[i]);
                break;
            }
            default: {  // w·strip_prefix(w_{k-4}, w)
                theta = k % 4 == 2 ? Antimorphism::E : Antimorphism::R;
                const std::size_t cut = len_of(j - 4);
                for (std::size_t i = cut; i < m; ++i) buf.push_back(buf[i]);
                break;
            }
        }
        assert(buf.size() == len_of(j));
        meta.push_back({1, theta, buf.size()});
    }
    return PrefixChain(Word(std::move(buf)), std::move(meta));
}

Word reference_word_prefix(ReferenceWord which, std::size_t n) {
    const Morphism& phi =
        which == ReferenceWord::fibonacci ? Morphism::fibonacci() : Morphism::thue_morse();
    Word w{0};
    while (w.size() < n) w = phi.apply(w);
    return n == 0 ? Word{} : w.prefix(n);
}

}  // namespace gpw
