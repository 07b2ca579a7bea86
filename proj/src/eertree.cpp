#include "gpw/eertree.hpp"

#include <cassert>

namespace gpw {

namespace {
constexpr std::int32_t kNone = -1;
}

PalindromeSuffixTracker::PalindromeSuffixTracker(Antimorphism theta) : theta_(theta) {
    if (theta_ == Antimorphism::R) {
        // node 0: imaginary root (length -1), node 1: empty root.
        make_node(-1, 0);
        make_node(0, 0);
        last_ = 1;
    } else {
        // node 0: empty root; the length-(-1) root has no E-palindromic children.
        make_node(0, 0);
        last_ = 0;
    }
}

std::int32_t PalindromeSuffixTracker::make_node(std::int32_t len, std::int32_t link) {
    len_.push_back(len);
    link_.push_back(link);
    child_.push_back({kNone, kNone});
    return static_cast<std::int32_t>(len_.size()) - 1;
}

std::size_t PalindromeSuffixTracker::distinct_palindromes() const {
    return len_.size() - (theta_ == Antimorphism::R ? 2 : 1);
}

bool PalindromeSuffixTracker::extendable(std::int32_t node, WordView text, std::size_t i,
                                         Letter match) const {
    const std::int32_t l = len_[node];
    if (l < 0) return true;  // imaginary root: extends to the single letter text[i]
    return i >= static_cast<std::size_t>(l) + 1 && text[i - l - 1] == match;
}

void PalindromeSuffixTracker::push(WordView text, std::size_t i) {
    const Letter c = text[i];
    const Letter match = theta_ == Antimorphism::R ? c : complement(c);

    std::int32_t cur = last_;
    while (cur != 0 && !extendable(cur, text, i, match)) cur = link_[cur];
    if (!extendable(cur, text, i, match)) {
        // Only possible for theta = E: no suffix comp(c)·p·c exists, the
        // longest E-palindromic suffix is the empty word.
        last_ = 0;
        return;
    }

    if (child_[cur][c] != kNone) {
        last_ = child_[cur][c];
        return;
    }

    const std::int32_t new_len = len_[cur] + 2;
    std::int32_t suffix_link;
    if (theta_ == Antimorphism::R && new_len == 1) {
        suffix_link = 1;  // single letters link to the empty root
    } else if (theta_ == Antimorphism::E && new_len == 2) {
        suffix_link = 0;
    } else {
        std::int32_t t = link_[cur];
        while (t != 0 && !extendable(t, text, i, match)) t = link_[t];
        if (theta_ == Antimorphism::R) {
            if (!extendable(t, text, i, match)) t = 0;  // falls back to the imaginary root
            suffix_link = child_[t][c];
        } else {
            suffix_link = extendable(t, text, i, match) ? child_[t][c] : 0;
        }
        assert(suffix_link != kNone);
    }
    const std::int32_t node = make_node(new_len, suffix_link);
    child_[cur][c] = node;
    last_ = node;
}

void PalindromeSuffixTracker::absorb(WordView text) {
    assert(text.size() >= processed_);
    for (std::size_t i = processed_; i < text.size(); ++i) push(text, i);
    processed_ = text.size();
}

}  // namespace gpw
