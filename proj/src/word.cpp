#include "gpw/word.hpp"

#include <algorithm>
#include <ostream>

namespace gpw {

Word Word::from_string(std::string_view text) {
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (char c : text) {
        if (c == '0') {
            letters.push_back(0);
        } else if (c == '1') {
            letters.push_back(1);
        } else {
            throw std::invalid_argument("word text must be over {0,1}, got '" +
                                        std::string(1, c) + "'");
        }
    }
    return Word(std::move(letters));
}

std::string Word::str() const {
    std::string out;
    out.reserve(size());
    for (Letter a : letters_) out.push_back(a ? '1' : '0');
    return out;
}

Word operator+(const Word& a, const Word& b) {
    Word out;
    out.reserve(a.size() + b.size());
    out.append(a.view());
    out.append(b.view());
    return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

char antimorphism_char(Antimorphism t) { return t == Antimorphism::R ? 'R' : 'E'; }

Antimorphism antimorphism_from_char(char c) {
    if (c == 'R') return Antimorphism::R;
    if (c == 'E') return Antimorphism::E;
    throw std::invalid_argument("antimorphism symbol must be R or E");
}

Word apply_antimorphism(Antimorphism theta, WordView w) {
    Word out;
    out.reserve(w.size());
    if (theta == Antimorphism::R) {
        for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(*it);
    } else {
        for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(complement(*it));
    }
    return out;
}

Word apply_antimorphism(Antimorphism theta, const Word& w) {
    return apply_antimorphism(theta, w.view());
}

bool is_theta_palindrome(Antimorphism theta, WordView w) {
    const std::size_t n = w.size();
    if (theta == Antimorphism::E && n % 2 != 0) return false;
    for (std::size_t i = 0, j = n; i < j--; ++i) {
        Letter mirrored = theta == Antimorphism::R ? w[j] : complement(w[j]);
        if (w[i] != mirrored) return false;
    }
    return true;
}

Word complement_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (Letter a : w) out.push_back(complement(a));
    return out;
}

Word Morphism::apply(WordView w) const {
    Word out;
    out.reserve(w.size() * std::max(image0.size(), image1.size()));
    for (Letter a : w) out.append(a ? image1.view() : image0.view());
    return out;
}

const Morphism& Morphism::fibonacci() {
    static const Morphism phi{Word{0, 1}, Word{0}};
    return phi;
}

const Morphism& Morphism::thue_morse() {
    static const Morphism phi{Word{0, 1}, Word{1, 0}};
    return phi;
}

bool is_prefix(WordView candidate, WordView whole) {
    return candidate.size() <= whole.size() &&
           std::equal(candidate.begin(), candidate.end(), whole.begin());
}

WordView strip_prefix(WordView v, WordView y) {
    if (!is_prefix(v, y)) throw NotAPrefix("strip_prefix: v is not a prefix of y");
    return y.subspan(v.size());
}

Word strip_prefix(const Word& v, const Word& y) {
    return Word(strip_prefix(v.view(), y.view()));
}

}  // namespace gpw
