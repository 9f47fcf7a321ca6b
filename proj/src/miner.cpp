#include "f2cf/miner.hpp"

#include <algorithm>
#include <limits>

#include "f2cf/gf2_matrix.hpp"

namespace f2cf {

namespace {

struct Window {
    Exponent lo = 0;
    Exponent top = 0;
    Exponent rows() const { return std::max<Exponent>(top - lo + 1, 0); }
};

Exponent magnitude(const Series& s) {
    if (auto h = s.leading_exponent()) return *h;
    if (auto e = s.error_exponent()) return *e;
    return std::numeric_limits<Exponent>::min();
}

// Columns t^j x^i for i <= deg_x, j <= deg_c share one window of certified exponents.
Window common_window(const std::vector<Series>& powers, int deg_x, int deg_c, Exponent min_rows) {
    Window w;
    bool any_inexact = false;
    Exponent lo_inexact = std::numeric_limits<Exponent>::min();
    Exponent lo_exact = std::numeric_limits<Exponent>::max();
    w.top = std::numeric_limits<Exponent>::min();
    for (int i = 0; i <= deg_x; ++i) {
        const Series& p = powers[static_cast<std::size_t>(i)];
        if (p.is_exact_zero()) continue;
        w.top = std::max(w.top, magnitude(p) + deg_c);
        if (auto lo = p.lo()) {
            any_inexact = true;
            lo_inexact = std::max(lo_inexact, *lo + deg_c);
        } else {
            lo_exact = std::min(lo_exact, p.mantissa_offset());
        }
    }
    if (any_inexact) {
        w.lo = lo_inexact;
    } else {
        // Everything is exact: all coefficients are known, pad with known zero rows.
        w.lo = std::min(lo_exact, w.top - min_rows + 1);
    }
    return w;
}

BitMatrix build_system(const std::vector<Series>& powers, int deg_x, int deg_c, const Window& w) {
    const auto rows = static_cast<std::size_t>(w.rows());
    const auto cols = static_cast<std::size_t>((deg_x + 1) * (deg_c + 1));
    BitMatrix m(rows, cols);
    for (int i = 0; i <= deg_x; ++i) {
        const Series& p = powers[static_cast<std::size_t>(i)];
        // Bit r of `bits` is the coefficient of t^(w.lo + r) in x^i.
        const Exponent off = p.mantissa_offset();
        const Poly2 bits = off >= w.lo - deg_c ? p.mantissa().shifted_up(off - (w.lo - deg_c))
                                               : p.mantissa().shifted_down((w.lo - deg_c) - off);
        for (int j = 0; j <= deg_c; ++j) {
            const auto col = static_cast<std::size_t>(i * (deg_c + 1) + j);
            // Coefficient of t^k in t^j x^i is that of t^(k-j) in x^i.
            for (std::size_t r = 0; r < rows; ++r)
                if (bits.coeff(static_cast<Exponent>(r) + deg_c - j)) m.set(r, col);
        }
    }
    return m;
}

std::vector<Poly2> to_coefficients(const BitVector& v, int deg_x, int deg_c) {
    std::vector<Poly2> out;
    for (int i = 0; i <= deg_x; ++i) {
        std::vector<Exponent> exps;
        for (int j = 0; j <= deg_c; ++j)
            if (v.get(static_cast<std::size_t>(i * (deg_c + 1) + j))) exps.push_back(j);
        out.push_back(Poly2::from_exponents(exps));
    }
    return out;
}

// Key for the tie-break: highest power first, each coefficient read as a binary number.
bool lex_less(const std::vector<Poly2>& x, const std::vector<Poly2>& y) {
    for (std::size_t i = x.size(); i-- > 0;) {
        if (x[i] != y[i]) return x[i] < y[i];
    }
    return false;
}

std::vector<Poly2> pick_minimal(const std::vector<BitVector>& basis, int deg_x, int deg_c) {
    std::vector<Poly2> best;
    auto consider = [&](const BitVector& v) {
        auto c = to_coefficients(v, deg_x, deg_c);
        if (c.back().is_zero()) return;
        if (best.empty() || lex_less(c, best)) best = std::move(c);
    };
    if (basis.size() <= 12) {
        const std::size_t combos = std::size_t{1} << basis.size();
        for (std::size_t mask = 1; mask < combos; ++mask) {
            BitVector v(basis.front().size());
            for (std::size_t k = 0; k < basis.size(); ++k)
                if ((mask >> k) & 1U) v ^= basis[k];
            consider(v);
        }
    } else {
        for (const auto& v : basis) consider(v);
    }
    return best;
}

}  // namespace

std::string Relation::to_string() const {
    std::string s;
    for (int i = degree_x; i >= 0; --i) {
        const Poly2& c = coefficients[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + c.to_string() + ")";
        if (i >= 2)
            s += "*x^" + std::to_string(i);
        else if (i == 1)
            s += "*x";
    }
    return (s.empty() ? "0" : s) + " = 0";
}

std::vector<Poly2> normalize_content(std::vector<Poly2> coeffs) {
    Poly2 g;
    for (const auto& c : coeffs) g = gcd(g, c);
    if (g.is_zero() || g.is_one()) return coeffs;
    for (auto& c : coeffs) c = divmod(c, g).quotient;
    return coeffs;
}

Series evaluate_relation(std::span<const Poly2> coeffs, const Series& x) {
    Series acc;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + Series::from_poly(coeffs[i]);
    return acc;
}

std::optional<Relation> mine(const Series& x, const MinerConfig& cfg) {
    if (cfg.max_deg_x < 1 || cfg.max_deg_coeff < 0 || cfg.certification_margin < 0)
        throw std::invalid_argument("mine: need max_deg_x >= 1, max_deg_coeff >= 0, certification_margin >= 0");

    std::vector<Series> powers{Series::from_poly(Poly2::one())};
    for (int i = 1; i <= cfg.max_deg_x; ++i) powers.push_back(powers.back() * x);

    const Exponent required = cfg.unknowns() + cfg.certification_margin;
    const Window full = common_window(powers, cfg.max_deg_x, cfg.max_deg_coeff, required);
    if (full.rows() < required) throw WindowTooSmall(required, full.rows());

    auto solve = [&](int d, int e) {
        const Window w = common_window(powers, d, e, required);
        return build_system(powers, d, e, w).null_space();
    };

    for (int d = 1; d <= cfg.max_deg_x; ++d) {
        if (solve(d, cfg.max_deg_coeff).empty()) continue;
        for (int e = 0; e <= cfg.max_deg_coeff; ++e) {
            const auto basis = solve(d, e);
            if (basis.empty()) continue;
            auto coeffs = pick_minimal(basis, d, e);
            if (coeffs.empty()) continue;
            coeffs = normalize_content(std::move(coeffs));

            const Series residual = evaluate_relation(coeffs, x);
            const ZeroPrefix z = valuation_of_zero_prefix(residual);
            if (!z.all_known_zero) continue;
            Relation rel;
            rel.coefficients = std::move(coeffs);
            rel.degree_x = d;
            rel.residual_exact = z.exact_zero;
            rel.residual_valuation = z.exact_zero ? 0 : z.exponent;
            return rel;
        }
    }
    return std::nullopt;
}

std::optional<RationalRoot> rational_root_search(const Series& x, int max_deg, int margin) {
    const auto rel = mine(x, MinerConfig{1, max_deg, margin});
    if (!rel) return std::nullopt;
    return RationalRoot{rel->coefficients[0], rel->coefficients[1]};
}

}  // namespace f2cf
