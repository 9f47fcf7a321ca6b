#include "f2cf/series.hpp"

#include <algorithm>
#include <ostream>

namespace f2cf {

namespace {

// Mantissa re-expressed with bit 0 at exponent `base`; bits below `base` are dropped.
Poly2 aligned(const Poly2& mant, Exponent lo, Exponent base) {
    return lo >= base ? mant.shifted_up(lo - base) : mant.shifted_down(base - lo);
}

std::string monomial_text(Exponent k) {
    if (k == 0) return "1";
    if (k == 1) return "t";
    return "t^" + std::to_string(k);
}

// Upper bound on the exponent of any term of x; nullopt for exact zero.
std::optional<Exponent> magnitude_bound(const Series& x) {
    if (auto h = x.leading_exponent()) return h;
    return x.error_exponent();
}

}  // namespace

Series::Series(Poly2 mant, Exponent lo, bool exact) : mant_(std::move(mant)), lo_(lo), exact_(exact) {
    if (exact_) normalize_exact();
}

void Series::normalize_exact() {
    if (mant_.is_zero()) {
        lo_ = 0;
        return;
    }
    Exponent tz = 0;
    while (!mant_.coeff(tz)) ++tz;
    if (tz) {
        mant_ = mant_.shifted_down(tz);
        lo_ += tz;
    }
}

Series Series::from_poly(const Poly2& p) { return Series(p, 0, true); }

Series Series::monomial(Exponent k) { return Series(Poly2::one(), k, true); }

Series Series::exact(const Poly2& mantissa, Exponent lo) { return Series(mantissa, lo, true); }

Series Series::truncated(const Poly2& mantissa, Exponent lo) { return Series(mantissa, lo, false); }

Series Series::from_rational(const Poly2& num, const Poly2& den, Exponent precision) {
    if (den.is_zero()) throw std::domain_error("from_rational: zero denominator");
    if (precision < 1) throw std::invalid_argument("from_rational: precision must be at least 1");
    if (num.is_zero()) return {};
    const Exponent hi = num.degree() - den.degree();
    const Exponent k = precision - 1 - hi;
    const DivMod dm = k >= 0 ? divmod(num.shifted_up(k), den) : divmod(num, den.shifted_up(-k));
    return Series(dm.quotient, -k, dm.remainder.is_zero());
}

Exponent Series::hi() const {
    if (mant_.is_zero()) {
        if (exact_) throw std::domain_error("Series::hi: exact zero has no leading term");
        throw PrecisionExhausted("Series::hi: no nonzero coefficient is certified");
    }
    return lo_ + mant_.degree();
}

std::optional<Exponent> Series::leading_exponent() const noexcept {
    if (mant_.is_zero()) return std::nullopt;
    return lo_ + mant_.degree();
}

std::optional<Exponent> Series::lo() const noexcept {
    if (exact_) return std::nullopt;
    return lo_;
}

std::optional<Exponent> Series::error_exponent() const noexcept {
    if (exact_) return std::nullopt;
    return lo_ - 1;
}

std::optional<Exponent> Series::width() const {
    if (exact_) return std::nullopt;
    if (mant_.is_zero()) return 0;
    return mant_.degree() + 1;
}

bool Series::is_known(Exponent k) const noexcept { return exact_ || k >= lo_; }

bool Series::coeff(Exponent k) const {
    if (!is_known(k)) throw PrecisionExhausted("Series::coeff: exponent " + std::to_string(k) + " is not certified");
    return mant_.coeff(k - lo_);
}

bool Series::in_unit_disc() const noexcept {
    if (auto h = magnitude_bound(*this)) return *h < 0;
    return true;
}

Series Series::truncated_at(Exponent e) const {
    if (!exact_ && lo_ - 1 >= e) return *this;
    return Series(aligned(mant_, lo_, e + 1), e + 1, false);
}

Series operator+(const Series& x, const Series& y) {
    if (x.exact_ && y.exact_) {
        const Exponent base = std::min(x.lo_, y.lo_);
        return Series(aligned(x.mant_, x.lo_, base) + aligned(y.mant_, y.lo_, base), base, true);
    }
    Exponent base = x.exact_ ? y.lo_ : x.lo_;
    if (!x.exact_ && !y.exact_) base = std::max(x.lo_, y.lo_);
    return Series(aligned(x.mant_, x.lo_, base) + aligned(y.mant_, y.lo_, base), base, false);
}

Series operator*(const Series& x, const Series& y) {
    if (x.is_exact_zero() || y.is_exact_zero()) return {};
    if (x.exact_ && y.exact_) return Series(x.mant_ * y.mant_, x.lo_ + y.lo_, true);

    const Exponent top_x = *magnitude_bound(x);
    const Exponent top_y = *magnitude_bound(y);
    // Highest exponent touched by an unknown coefficient of either factor.
    Exponent err = 0;
    bool have_err = false;
    if (!y.exact_) {
        err = top_x + (y.lo_ - 1);
        have_err = true;
    }
    if (!x.exact_) {
        const Exponent e = top_y + (x.lo_ - 1);
        err = have_err ? std::max(err, e) : e;
    }
    const Exponent base = err + 1;

    // Terms of one factor that land at or below `err` whatever the other contributes are skipped.
    const Exponent cut_x = std::max(x.lo_, base - top_y);
    const Exponent cut_y = std::max(y.lo_, base - top_x);
    const Poly2 mx = aligned(x.mant_, x.lo_, cut_x);
    const Poly2 my = aligned(y.mant_, y.lo_, cut_y);
    return Series(aligned(mx * my, cut_x + cut_y, base), base, false);
}

Series Series::square() const {
    if (exact_) return Series(mant_.square(), 2 * lo_, true);
    return Series(mant_.square().shifted_up(1), 2 * lo_ - 1, false);
}

Series Series::derivative() const {
    // Exponent lo+i survives iff it is odd.
    const int parity = (lo_ % 2 == 0) ? 1 : 0;
    return Series(mant_.parity_part(parity), lo_ - 1, exact_);
}

Series Series::inverse(std::optional<Exponent> width) const {
    if (is_exact_zero()) throw std::domain_error("Series::inverse: inverse of zero");
    if (mant_.is_zero()) throw PrecisionExhausted("Series::inverse: operand is zero to precision");
    const Exponent h = hi();
    if (exact_ && mant_.is_one()) return monomial(-h);

    Exponent w = 0;
    if (!exact_) {
        w = h - lo_ + 1;
    } else {
        if (!width || *width < 1)
            throw std::invalid_argument("Series::inverse: exact non-monomial input needs an output width");
        w = *width;
    }
    // Known top w coefficients as a polynomial in s = 1/t with constant term 1.
    const Poly2 top = aligned(mant_, lo_, h - w + 1);
    const Poly2 rev = top.reversed(w);

    Poly2 g = Poly2::one();
    for (Exponent k = 1; k < w;) {
        k = std::min(2 * k, w);
        g = (rev.low_part(k) * g.square()).low_part(k);
    }
    return Series(g.reversed(w), -h - w + 1, false);
}

bool Series::is_square() const {
    const int odd_parity = (lo_ % 2 == 0) ? 1 : 0;
    return mant_.parity_part(odd_parity).is_zero();
}

Series Series::sqrt() const {
    if (!is_square()) throw std::domain_error("Series::sqrt: series is not a square on its window");
    if (exact_) {
        if (mant_.is_zero()) return {};
        return Series(mant_.sqrt(), lo_ / 2, true);
    }
    if (lo_ % 2 == 0) return Series(mant_.sqrt(), lo_ / 2, false);
    return Series(mant_.shifted_down(1).sqrt(), (lo_ + 1) / 2, false);
}

Poly2 Series::polynomial_part() const {
    if (!exact_ && lo_ > 0)
        throw PrecisionExhausted("polynomial_part: coefficients down to t^0 are not certified (lowest known t^" +
                                 std::to_string(lo_) + ")");
    return lo_ >= 0 ? mant_.shifted_up(lo_) : mant_.shifted_down(-lo_);
}

bool agree_on_common_window(const Series& x, const Series& y) { return (x + y).is_zero_to_precision(); }

std::string Series::to_string() const {
    std::string out;
    for (Exponent e : mant_.exponents()) {
        if (!out.empty()) out += '+';
        out += monomial_text(e + lo_);
    }
    if (!exact_) {
        if (!out.empty()) out += '+';
        out += "O(" + monomial_text(lo_ - 1) + ")";
    }
    return out.empty() ? "0" : out;
}

ZeroPrefix valuation_of_zero_prefix(const Series& x) {
    if (x.is_exact_zero()) return {true, true, 0};
    if (x.is_zero_to_precision()) return {true, false, *x.lo()};
    return {false, false, x.hi()};
}

std::ostream& operator<<(std::ostream& os, const Series& x) { return os << x.to_string(); }

}  // namespace f2cf
