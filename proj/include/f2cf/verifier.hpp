#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "f2cf/contfrac.hpp"
#include "f2cf/poly2.hpp"
#include "f2cf/series.hpp"
#include "f2cf/words.hpp"

namespace f2cf {

/// P(x) = A x^4 + B x^3 + C x^2 + 1.
struct QuarticCoefficients {
    Poly2 A;
    Poly2 B;
    Poly2 C;

    /// Coefficients indexed by power of x, constant term first.
    std::vector<Poly2> as_vector() const;
    std::string to_string() const;

    friend bool operator==(const QuarticCoefficients&, const QuarticCoefficients&) = default;
};

/// A = ab + b^2 + 1, B = ab(a+b), C = ab.
QuarticCoefficients build_quartic(const LetterAssignment& assign);

/// X_n = A u^4 + B u^3 v + C u^2 v^2 + v^4, i.e. v^4 P(u/v).
Poly2 homogeneous_quartic(const QuarticCoefficients& q, const Poly2& u, const Poly2& v);

struct XnValue {
    unsigned n = 0;
    Poly2 value;
};

XnValue x_n(const LetterAssignment& assign, unsigned n);

/// X_{n+1} from X_n and u_n via
/// X_{n+1} + 1 = eps_n^4 u_n^4 (X_n + 1) + eps_n^3 u_n^4 (a+b)(1 + ab u_n^2).
Poly2 x_next_from_recurrence(const LetterAssignment& assign, unsigned n, const Poly2& u_n, const Poly2& x_n);

/// eps_{n-1} u_n^2 (a+b) + 1, the closed-form numerator of P(u_n/v_n).
Poly2 quotient_numerator(const LetterAssignment& assign, unsigned n, const Poly2& u_n);

/// One named check with its parameters and witness values (polynomial grammar).
struct CheckRecord {
    std::string check;
    std::vector<std::pair<std::string, std::string>> params;
    bool pass = false;
    std::vector<std::pair<std::string, std::string>> witness;
    std::string message;
};

struct CheckReport {
    std::vector<CheckRecord> records;

    bool passed() const noexcept;
    void append(const CheckReport& other);
};

std::string to_text(const CheckRecord& r);

/// Exact checks for n = 1..n_max: X_n + 1 = eps_{n-1} u_n^2 (a+b), the recurrence for
/// X_{n+1}, the quotient form of P(u_n/v_n), and strict growth of the valuation gap
/// g(n) = 4 deg v_n - deg(eps_{n-1} u_n^2 (a+b) + 1).
CheckReport check_theorem_exact(const LetterAssignment& assign, unsigned n_max);
/// Same, with the quartic supplied by the caller (used for mutation tests).
CheckReport check_theorem_exact(const LetterAssignment& assign, const QuarticCoefficients& q, unsigned n_max);

/// Valuation gap g(n) for the given convergent index.
Exponent valuation_gap(const LetterAssignment& assign, unsigned n, const Convergent& uv);

/// Truncated continued fraction value together with the convergent that produced it.
struct CfApproximation {
    Series value;
    Convergent convergent;
    /// Index n of W_n for the period-doubling construction, prefix length otherwise.
    std::size_t depth = 0;
};

/// Safety slack added to the precision when choosing the convergent index.
inline constexpr Exponent kConvergentSlack = 16;

/// alpha_p to `precision` coefficients from u_n / v_n, n the smallest index with g(n) > precision + 16.
CfApproximation alpha_pd(const LetterAssignment& assign, Exponent precision);
/// [m^infinity(a)] under the assignment, from a prefix whose convergent pins down `precision` coefficients.
CfApproximation alpha_morphic(const Morphism& m, const LetterAssignment& assign, Exponent precision);
CfApproximation alpha_ptm(const LetterAssignment& assign, Exponent precision);

struct SeriesCheck {
    bool pass = false;
    Exponent precision = 0;
    std::size_t n_used = 0;
    Series residual;
    /// Certified window of the residual is [window_lo, window_top].
    Exponent window_top = 0;
    Exponent window_lo = 0;
    /// Leading exponent of the residual when it is not zero on its window.
    std::optional<Exponent> first_nonzero;

    CheckRecord record(const LetterAssignment& assign) const;
};

/// Evaluates A a^4 + B a^3 + C a^2 + 1 at the truncated alpha_p. Throws std::invalid_argument if precision < 32.
SeriesCheck check_theorem_series(const LetterAssignment& assign, Exponent precision);
SeriesCheck check_theorem_series(const LetterAssignment& assign, const QuarticCoefficients& q, Exponent precision);

/// (ab(a+b) x)' + (ab)' (1 + x^2).
Series riccati_residual(const Series& x, const LetterAssignment& assign);
CheckRecord riccati_check(const Series& x, const LetterAssignment& assign, const std::string& label);

/// A' = C' (and = (ab)' when the assignment is given), the identities that turn the quartic into the Riccati equation.
CheckReport riccati_from_quartic(const QuarticCoefficients& q);
CheckReport riccati_from_quartic(const QuarticCoefficients& q, const LetterAssignment& assign);

/// Coefficient-wise comparison of the Riccati equation for (a,b) with (t(t+1) x)' = 1 + x^2.
CheckRecord riccati_reduces_to_r0(const LetterAssignment& assign);

/// x' predicted by differentiating the quartic: (B' x + A' x^2 + C') / B.
Series derivative_from_quartic(const QuarticCoefficients& q, const Series& x);

struct BaumSweetReport {
    Series residual;
    bool residual_ok = false;
    std::optional<Series> beta;
    bool beta_ok = false;
    /// Index of the first quotient that is certified and not of degree one.
    std::optional<std::size_t> first_bad_index;
    /// Number of quotients certified (index of the first uncertified one).
    std::size_t certified_quotients = 0;
    bool degree_one_ok = false;

    bool passed() const noexcept { return residual_ok && beta_ok && degree_one_ok; }
    CheckReport records(const std::string& label) const;
};

/// Throws std::invalid_argument unless |x| < 1.
BaumSweetReport baum_sweet_check(const Series& x);

/// x minus its polynomial part.
Series fractional_part(const Series& x);

}  // namespace f2cf
