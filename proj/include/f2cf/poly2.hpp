#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace f2cf {

using Word64 = std::uint64_t;
using Exponent = std::int64_t;

/// Raised by Poly2::parse; `position()` is the byte offset of the offending character.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Knobs for the multiplication kernel.
struct MulOptions {
    /// Operands with at least this many 64-bit words on the short side use Karatsuba.
    std::size_t karatsuba_threshold_words = 32;
};

/**
 * Polynomial over GF(2), bit-packed little-endian: bit i of the word vector is the
 * coefficient of t^i. The word vector never carries high zero words, so two values
 * are equal iff their words are equal.
 *
 * The zero polynomial has no degree: degree() throws on it, and callers are
 * expected to branch on is_zero() first.
 */
class Poly2 {
public:
    Poly2() = default;

    static Poly2 zero() { return {}; }
    static Poly2 one() { return monomial(0); }
    static Poly2 t() { return monomial(1); }
    static Poly2 monomial(Exponent k);
    static Poly2 from_words(std::vector<Word64> words);
    /// Repeated exponents cancel in pairs.
    static Poly2 from_exponents(std::initializer_list<Exponent> exps);
    static Poly2 from_exponents(std::span<const Exponent> exps);

    bool is_zero() const noexcept { return words_.empty(); }
    bool is_one() const noexcept { return words_.size() == 1 && words_[0] == 1; }

    /// Degree of a nonzero polynomial; throws std::domain_error on zero.
    Exponent degree() const;
    /// Degree, or `fallback` when zero.
    Exponent degree_or(Exponent fallback) const noexcept;

    bool coeff(Exponent i) const noexcept;
    std::span<const Word64> words() const noexcept { return words_; }
    std::size_t word_count() const noexcept { return words_.size(); }
    std::size_t popcount() const noexcept;
    /// Exponents of the nonzero terms, decreasing.
    std::vector<Exponent> exponents() const;

    Poly2 with_flipped(Exponent i) const;
    Poly2 shifted_up(Exponent k) const;    ///< p * t^k
    Poly2 shifted_down(Exponent k) const;  ///< floor(p / t^k)
    Poly2 low_part(Exponent k) const;      ///< p mod t^k
    /// Reversal within `width` bits: bit i moves to bit width-1-i; bits >= width are dropped.
    Poly2 reversed(Exponent width) const;
    /// Keeps bits whose exponent has the given parity (0 even, 1 odd).
    Poly2 parity_part(int parity) const;

    Poly2 square() const;
    Poly2 derivative() const;
    bool is_square() const noexcept;
    /// Throws std::domain_error unless is_square().
    Poly2 sqrt() const;

    Poly2& operator+=(const Poly2& q);
    friend Poly2 operator+(Poly2 p, const Poly2& q) { return p += q; }
    friend Poly2 operator-(Poly2 p, const Poly2& q) { return p += q; }
    friend Poly2 operator*(const Poly2& p, const Poly2& q) { return mul(p, q); }
    Poly2& operator*=(const Poly2& q) { return *this = mul(*this, q); }

    friend bool operator==(const Poly2&, const Poly2&) = default;
    /// Orders by value read as a binary integer (degree first, then bits downwards).
    friend std::strong_ordering operator<=>(const Poly2& p, const Poly2& q) noexcept;

    std::string to_string() const;
    /// Grammar: "0", or monomials "t^K", "t", "1" joined by '+'. Any order; repeats cancel.
    static Poly2 parse(std::string_view text);

    friend Poly2 mul(const Poly2& p, const Poly2& q, const MulOptions& opts);
    friend Poly2 mul(const Poly2& p, const Poly2& q) { return mul(p, q, MulOptions{}); }

private:
    explicit Poly2(std::vector<Word64> words) : words_(std::move(words)) { trim(); }
    void trim() noexcept;

    std::vector<Word64> words_;
};

Poly2 mul_schoolbook(const Poly2& p, const Poly2& q);
Poly2 pow(const Poly2& p, unsigned e);

struct DivMod {
    Poly2 quotient;
    Poly2 remainder;
};

/// Throws std::domain_error when q is zero.
DivMod divmod(const Poly2& p, const Poly2& q);
Poly2 gcd(Poly2 p, Poly2 q);

std::ostream& operator<<(std::ostream& os, const Poly2& p);

namespace detail {
/// 64x64 -> 128 carry-less product; uses PCLMULQDQ when the CPU has it.
std::pair<Word64, Word64> clmul64(Word64 a, Word64 b) noexcept;
std::pair<Word64, Word64> clmul64_portable(Word64 a, Word64 b) noexcept;
}  // namespace detail

}  // namespace f2cf
