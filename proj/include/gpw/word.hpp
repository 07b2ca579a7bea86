#ifndef GPW_WORD_HPP
#define GPW_WORD_HPP

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gpw {

/// A letter of the binary alphabet, stored as 0 or 1.
using Letter = std::uint8_t;

constexpr Letter complement(Letter a) { return static_cast<Letter>(a ^ 1u); }

/// Read-only view into a word's letters.
using WordView = std::span<const Letter>;

/// A finite binary word. Letters are stored contiguously; the empty word is
/// the concatenation identity.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}
    explicit Word(WordView view) : letters_(view.begin(), view.end()) {}

    /// Parses a string over {0,1}; the empty string is the empty word.
    static Word from_string(std::string_view text);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    void push_back(Letter a) { letters_.push_back(a); }
    void reserve(std::size_t n) { letters_.reserve(n); }
    void append(WordView tail) { letters_.insert(letters_.end(), tail.begin(), tail.end()); }

    WordView view() const { return {letters_.data(), letters_.size()}; }
    WordView view(std::size_t pos, std::size_t len) const { return view().subspan(pos, len); }

    Word subword(std::size_t pos, std::size_t len) const { return Word(view(pos, len)); }
    Word prefix(std::size_t len) const { return subword(0, len); }
    Word suffix(std::size_t len) const { return subword(size() - len, len); }

    bool operator==(const Word& other) const { return letters_ == other.letters_; }
    auto operator<=>(const Word& other) const { return letters_ <=> other.letters_; }

    std::string str() const;

private:
    std::vector<Letter> letters_;
};

Word operator+(const Word& a, const Word& b);
std::ostream& operator<<(std::ostream& os, const Word& w);

/// The two involutory antimorphisms over {0,1}: the reversal map R and the
/// exchange antimorphism E (reversal composed with letter complement).
enum class Antimorphism : std::uint8_t { R, E };

/// The paper-bar duality: R <-> E.
constexpr Antimorphism opposite(Antimorphism t) {
    return t == Antimorphism::R ? Antimorphism::E : Antimorphism::R;
}

char antimorphism_char(Antimorphism t);
Antimorphism antimorphism_from_char(char c);

/// Applies theta to w: R reverses, E reverses and complements every letter.
Word apply_antimorphism(Antimorphism theta, const Word& w);
Word apply_antimorphism(Antimorphism theta, WordView w);

/// True iff w equals its own theta-image.
bool is_theta_palindrome(Antimorphism theta, WordView w);
inline bool is_theta_palindrome(Antimorphism theta, const Word& w) {
    return is_theta_palindrome(theta, w.view());
}

/// Letterwise complement, i.e. the image under the morphism E∘R.
Word complement_word(const Word& w);

/// A morphism on binary words, given by its two letter images.
struct Morphism {
    Word image0;
    Word image1;

    Word apply(WordView w) const;
    Word apply(const Word& w) const { return apply(w.view()); }

    /// 0 -> 01, 1 -> 0 (fixed point: the Fibonacci word).
    static const Morphism& fibonacci();
    /// 0 -> 01, 1 -> 10 (fixed point from 0: the Thue-Morse word).
    static const Morphism& thue_morse();
};

/// Thrown by strip_prefix when the claimed prefix does not match.
struct NotAPrefix : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

bool is_prefix(WordView candidate, WordView whole);

/// Removes the leading |v| letters of y; y must start with v.
Word strip_prefix(const Word& v, const Word& y);
WordView strip_prefix(WordView v, WordView y);

}  // namespace gpw

#endif  // GPW_WORD_HPP
