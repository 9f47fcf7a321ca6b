#include "f2cf/contfrac.hpp"

#include <ostream>
#include <stdexcept>

namespace f2cf {

LetterAssignment::LetterAssignment(Poly2 a, Poly2 b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.is_zero() || a_.degree() < 1)
        throw std::invalid_argument("letter values must be non-constant: a = " + a_.to_string());
    if (b_.is_zero() || b_.degree() < 1)
        throw std::invalid_argument("letter values must be non-constant: b = " + b_.to_string());
    if (a_ == b_) throw std::invalid_argument("letters must be distinct: a = b = " + a_.to_string());
}

std::vector<Poly2> LetterAssignment::values(const Word& w) const {
    std::vector<Poly2> out;
    out.reserve(w.size());
    for (Letter l : w) out.push_back(value(l));
    return out;
}

std::string PartialQuotients::to_string() const {
    std::string s = "[" + leading.to_string();
    for (std::size_t i = 0; i < tail.size(); ++i) s += (i == 0 ? "; " : ", ") + tail[i].to_string();
    return s + "]";
}

std::ostream& operator<<(std::ostream& os, const PartialQuotients& q) { return os << q.to_string(); }

Convergent continuant_pair(std::span<const Poly2> quotients) {
    // Invariant: cur = <q_k..q_n>, next = <q_{k+1}..q_n>.
    Poly2 cur = Poly2::one();
    Poly2 next;
    bool first = true;
    for (std::size_t k = quotients.size(); k-- > 0;) {
        Poly2 value = quotients[k] * cur;
        if (!first) value += next;
        first = false;
        next = std::move(cur);
        cur = std::move(value);
    }
    if (quotients.empty()) return {Poly2::one(), Poly2::zero()};
    return {cur, next};
}

Poly2 continuant(std::span<const Poly2> quotients) { return continuant_pair(quotients).u; }

Poly2 continuant(const Word& w, const LetterAssignment& assign) { return continuant(assign.values(w)); }

Poly2 concat_continuant(const Word& x, const Word& y, const LetterAssignment& assign) {
    Poly2 head = continuant(x, assign) * continuant(y, assign);
    if (x.empty() || y.empty()) return head;
    return head + continuant(x.drop_last(), assign) * continuant(y.drop_first(), assign);
}

Convergent eval_cf(const Word& w, const LetterAssignment& assign) {
    if (w.empty()) throw std::invalid_argument("eval_cf: empty word");
    return continuant_pair(assign.values(w));
}

std::vector<Convergent> uv_sequence(const LetterAssignment& assign, unsigned n_max) {
    if (n_max < 1) throw std::invalid_argument("uv_sequence: n_max must be at least 1");
    std::vector<Convergent> out;
    out.reserve(n_max);
    out.push_back({assign.a(), Poly2::one()});
    for (unsigned n = 1; n < n_max; ++n) {
        const Convergent& prev = out.back();
        const Poly2& eps = assign.value(epsilon(n));
        const Poly2 eps_u = eps * prev.u;
        out.push_back({eps_u * prev.u, eps_u * prev.v + Poly2::one()});
    }
    return out;
}

PartialQuotients expand_rational(const Poly2& num, const Poly2& den) {
    if (den.is_zero()) throw std::domain_error("expand_rational: zero denominator");
    PartialQuotients out;
    DivMod dm = divmod(num, den);
    out.leading = dm.quotient;
    Poly2 p = den;
    Poly2 q = dm.remainder;
    while (!q.is_zero()) {
        dm = divmod(p, q);
        out.tail.push_back(std::move(dm.quotient));
        p = std::move(q);
        q = std::move(dm.remainder);
    }
    return out;
}

SeriesExpansion expand_series(const Series& x, std::size_t max_quotients) {
    SeriesExpansion out;
    auto emit = [&](Poly2 q) {
        if (out.count == 0)
            out.quotients.leading = std::move(q);
        else
            out.quotients.tail.push_back(std::move(q));
        ++out.count;
    };

    Series cur = x;
    while (out.count < max_quotients) {
        if (cur.is_exact()) {
            // A Laurent polynomial is rational: finish with the Euclidean algorithm.
            const Exponent lo = cur.mantissa_offset();
            const Poly2 num = lo >= 0 ? cur.mantissa().shifted_up(lo) : cur.mantissa();
            const Poly2 den = lo >= 0 ? Poly2::one() : Poly2::monomial(-lo);
            const PartialQuotients rest = expand_rational(num, den);
            emit(rest.leading);
            for (const Poly2& q : rest.tail) {
                if (out.count == max_quotients) return out;
                emit(q);
            }
            out.complete = true;
            return out;
        }
        Poly2 q;
        try {
            q = cur.polynomial_part();
        } catch (const PrecisionExhausted&) {
            out.precision_exhausted = true;
            return out;
        }
        emit(q);
        const Series frac = cur + Series::from_poly(q);
        if (frac.is_zero_to_precision()) {
            if (out.count < max_quotients) out.precision_exhausted = true;
            return out;
        }
        cur = frac.inverse();
    }
    return out;
}

bool spell_word(std::span<const Poly2> quotients, const LetterAssignment& assign, Word& out) {
    out = Word{};
    for (const Poly2& q : quotients) {
        if (q == assign.a())
            out += Letter::A;
        else if (q == assign.b())
            out += Letter::B;
        else
            return false;
    }
    return true;
}

}  // namespace f2cf
