#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace f2cf {

enum class Letter : unsigned char { A, B };

char to_char(Letter l) noexcept;

/// Finite word over {a, b}. Rendered and parsed as a string of 'a' and 'b'.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    /// Throws std::invalid_argument on characters other than 'a' and 'b'.
    static Word parse(std::string_view text);

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    /// W' : first letter removed (empty for |W| <= 1).
    Word drop_first() const;
    /// W'' : last letter removed (empty for |W| <= 1).
    Word drop_last() const;
    /// W*
    Word reversed() const;
    Word prefix(std::size_t n) const;

    Word& operator+=(const Word& other);
    Word& operator+=(Letter l);
    friend Word operator+(Word x, const Word& y) { return x += y; }
    friend Word operator+(Word x, Letter l) { return x += l; }

    friend bool operator==(const Word&, const Word&) = default;

    std::string to_string() const;

private:
    std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// Binary substitution a -> image_a, b -> image_b.
struct Morphism {
    Word image_a;
    Word image_b;

    /// Throws std::invalid_argument if an image is empty.
    Morphism(Word a, Word b);

    /// Accepts "a->ab,b->aa".
    static Morphism parse(std::string_view text);

    const Word& image(Letter l) const noexcept { return l == Letter::A ? image_a : image_b; }
    Word apply(const Word& w) const;
    /// a(m) begins with a and has length >= 2, so m^infinity(a) exists.
    bool is_prolongable() const noexcept;
    /// Prefix of length >= min_length of the fixed point beginning with a.
    /// Throws std::invalid_argument when the morphism is not prolongable on a.
    Word fixed_point_prefix(std::size_t min_length) const;

    std::string to_string() const;

    friend bool operator==(const Morphism&, const Morphism&) = default;
};

/// Period-doubling substitution a -> ab, b -> aa.
Morphism period_doubling();
/// Prouhet-Thue-Morse substitution a -> ab, b -> ba.
Morphism thue_morse();

/// The alternating letter: A for even n, B for odd n.
Letter epsilon(unsigned n) noexcept;

/// W_n = (sigma^n(a)) with its last letter removed, built by W_{n+1} = W_n eps_n W_n.
/// |W_n| = 2^n - 1 and W_n is a palindrome.
Word w_n(unsigned n);

}  // namespace f2cf
