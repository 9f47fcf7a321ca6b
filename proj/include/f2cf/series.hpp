#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "f2cf/poly2.hpp"

namespace f2cf {

/// A series operation needed coefficients that its inputs do not determine.
class PrecisionExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Element of GF(2)((1/t)) known to a finite, explicitly tracked precision.
 *
 * An inexact series is `known part + O(t^e)`: every coefficient of exponent
 * greater than e is certified, nothing below is. The known part is stored as a
 * mantissa whose bit i is the coefficient of t^(lo+i), with lo = e+1. When the
 * mantissa is zero the value is "zero to precision": |x| <= |t|^e.
 *
 * An exact series is a finite Laurent polynomial; lo is then normalized to the
 * lowest nonzero term.
 *
 * The absolute value |x| = |t|^hi is carried by the integer hi alone.
 */
class Series {
public:
    /// Exact zero.
    Series() = default;

    static Series from_poly(const Poly2& p);
    /// Exact Laurent monomial t^k.
    static Series monomial(Exponent k);
    /// Exact value mantissa * t^lo.
    static Series exact(const Poly2& mantissa, Exponent lo);
    /// Known part mantissa * t^lo, unknown below exponent lo.
    static Series truncated(const Poly2& mantissa, Exponent lo);
    /// num/den with its top `precision` coefficients certified. Throws std::domain_error on den == 0.
    static Series from_rational(const Poly2& num, const Poly2& den, Exponent precision);

    bool is_exact() const noexcept { return exact_; }
    bool is_exact_zero() const noexcept { return exact_ && mant_.is_zero(); }
    /// True when no known coefficient is nonzero (exact zero included).
    bool is_zero_to_precision() const noexcept { return mant_.is_zero(); }

    /// Exponent of the leading term; throws PrecisionExhausted when no nonzero coefficient is known.
    Exponent hi() const;
    std::optional<Exponent> leading_exponent() const noexcept;
    /// Lowest certified exponent; nullopt for exact series (certified everywhere).
    std::optional<Exponent> lo() const noexcept;
    /// First uncertified exponent (lo - 1); nullopt for exact series.
    std::optional<Exponent> error_exponent() const noexcept;
    /// hi - lo + 1 for inexact nonzero series; nullopt when exact.
    std::optional<Exponent> width() const;

    bool coeff(Exponent k) const;
    bool is_known(Exponent k) const noexcept;
    const Poly2& mantissa() const noexcept { return mant_; }
    Exponent mantissa_offset() const noexcept { return lo_; }

    /// Set P = {x : |x| < 1}: leading exponent negative, or zero to a negative precision.
    bool in_unit_disc() const noexcept;

    /// Drop certified coefficients so that nothing at exponent <= e is claimed.
    Series truncated_at(Exponent e) const;

    friend Series operator+(const Series& x, const Series& y);
    friend Series operator-(const Series& x, const Series& y) { return x + y; }
    friend Series operator*(const Series& x, const Series& y);

    Series square() const;
    Series derivative() const;
    /// Inverse preserving relative width. Exact non-monomial inputs need `width`.
    Series inverse(std::optional<Exponent> width = std::nullopt) const;
    /// Odd-exponent coefficients all vanish on the certified window.
    bool is_square() const;
    /// Throws std::domain_error when !is_square().
    Series sqrt() const;

    /// Terms of exponent >= 0. Throws PrecisionExhausted when some are uncertified.
    Poly2 polynomial_part() const;

    /// Bitwise identity of representation (exactness, window, and bits).
    friend bool operator==(const Series&, const Series&) = default;
    /// Agreement of the certified coefficients of x and y on their common window.
    friend bool agree_on_common_window(const Series& x, const Series& y);

    std::string to_string() const;

private:
    Series(Poly2 mant, Exponent lo, bool exact);
    void normalize_exact();

    Poly2 mant_;
    Exponent lo_ = 0;
    bool exact_ = true;
};

/// Result of valuation_of_zero_prefix.
struct ZeroPrefix {
    /// Every certified coefficient vanishes.
    bool all_known_zero = false;
    /// Exact zero: certified at every precision.
    bool exact_zero = false;
    /// lo when all_known_zero and inexact (|x| <= |t|^(lo-1)); otherwise the leading exponent.
    Exponent exponent = 0;
};

ZeroPrefix valuation_of_zero_prefix(const Series& x);

std::ostream& operator<<(std::ostream& os, const Series& x);

}  // namespace f2cf
