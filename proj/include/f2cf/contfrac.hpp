#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "f2cf/poly2.hpp"
#include "f2cf/series.hpp"
#include "f2cf/words.hpp"

namespace f2cf {

/// Values substituted for the letters a and b. Both non-constant and distinct.
class LetterAssignment {
public:
    /// Throws std::invalid_argument naming the violated condition.
    LetterAssignment(Poly2 a, Poly2 b);

    const Poly2& a() const noexcept { return a_; }
    const Poly2& b() const noexcept { return b_; }
    const Poly2& value(Letter l) const noexcept { return l == Letter::A ? a_ : b_; }

    std::vector<Poly2> values(const Word& w) const;

    friend bool operator==(const LetterAssignment&, const LetterAssignment&) = default;

private:
    Poly2 a_;
    Poly2 b_;
};

/// u / v with u = <W>, v = <W'>.
struct Convergent {
    Poly2 u;
    Poly2 v;

    friend bool operator==(const Convergent&, const Convergent&) = default;
};

/// [leading; tail...], tail entries of degree >= 1.
struct PartialQuotients {
    Poly2 leading;
    std::vector<Poly2> tail;

    std::size_t size() const noexcept { return 1 + tail.size(); }
    std::string to_string() const;

    friend bool operator==(const PartialQuotients&, const PartialQuotients&) = default;
};

std::ostream& operator<<(std::ostream& os, const PartialQuotients& q);

/// <q_1, ..., q_n> and <q_2, ..., q_n>, computed right to left in one pass.
Convergent continuant_pair(std::span<const Poly2> quotients);
Poly2 continuant(std::span<const Poly2> quotients);

Poly2 continuant(const Word& w, const LetterAssignment& assign);
/// <X><Y> + <X''><Y'>.
Poly2 concat_continuant(const Word& x, const Word& y, const LetterAssignment& assign);
/// (<W>, <W'>). Throws std::invalid_argument on the empty word.
Convergent eval_cf(const Word& w, const LetterAssignment& assign);

/// (u_n, v_n) for n = 1..n_max from u_{n+1} = eps_n u_n^2, v_{n+1} = eps_n u_n v_n + 1, u_1 = a, v_1 = 1.
/// Element k-1 holds index k.
std::vector<Convergent> uv_sequence(const LetterAssignment& assign, unsigned n_max);

/// Euclidean expansion of num/den. Throws std::domain_error on den == 0.
PartialQuotients expand_rational(const Poly2& num, const Poly2& den);

struct SeriesExpansion {
    PartialQuotients quotients;
    /// The series was exact and rational; the expansion terminated.
    bool complete = false;
    /// Stopped because the remaining precision could not certify another quotient.
    bool precision_exhausted = false;
    /// Number of certified quotients, leading quotient included.
    std::size_t count = 0;
};

/// Expands x by repeated polynomial part / inverse. A quotient is emitted only when
/// every coefficient it depends on is certified. Stops at max_quotients quotients
/// (leading quotient included).
SeriesExpansion expand_series(const Series& x, std::size_t max_quotients);

/// Maps quotients back to letters; returns false at the first quotient matching neither letter.
bool spell_word(std::span<const Poly2> quotients, const LetterAssignment& assign, Word& out);

}  // namespace f2cf
