#include "f2cf/verifier.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace f2cf {

namespace {

std::string str(Exponent v) { return std::to_string(v); }

std::vector<std::pair<std::string, std::string>> pair_params(const LetterAssignment& assign) {
    return {{"a", assign.a().to_string()}, {"b", assign.b().to_string()}};
}

const Poly2& eps_value(const LetterAssignment& assign, unsigned n) { return assign.value(epsilon(n)); }

Exponent top_of(const Series& s) {
    if (auto h = s.leading_exponent()) return *h;
    if (auto e = s.error_exponent()) return *e;
    return 0;
}

}  // namespace

std::vector<Poly2> QuarticCoefficients::as_vector() const { return {Poly2::one(), Poly2::zero(), C, B, A}; }

std::string QuarticCoefficients::to_string() const {
    return "(" + A.to_string() + ")*x^4 + (" + B.to_string() + ")*x^3 + (" + C.to_string() + ")*x^2 + 1";
}

QuarticCoefficients build_quartic(const LetterAssignment& assign) {
    const Poly2& a = assign.a();
    const Poly2& b = assign.b();
    const Poly2 ab = a * b;
    return {ab + b.square() + Poly2::one(), ab * (a + b), ab};
}

Poly2 homogeneous_quartic(const QuarticCoefficients& q, const Poly2& u, const Poly2& v) {
    const Poly2 u2 = u.square();
    const Poly2 v2 = v.square();
    return q.A * u2.square() + q.B * (u2 * u) * v + q.C * u2 * v2 + v2.square();
}

XnValue x_n(const LetterAssignment& assign, unsigned n) {
    if (n < 1) throw std::invalid_argument("x_n: n must be at least 1");
    const auto uv = uv_sequence(assign, n);
    return {n, homogeneous_quartic(build_quartic(assign), uv.back().u, uv.back().v)};
}

Poly2 x_next_from_recurrence(const LetterAssignment& assign, unsigned n, const Poly2& u_n, const Poly2& x_n) {
    const Poly2& eps = eps_value(assign, n);
    const Poly2 eps2 = eps.square();
    const Poly2 u4 = u_n.square().square();
    const Poly2 ab = assign.a() * assign.b();
    const Poly2 lhs = eps2.square() * u4 * (x_n + Poly2::one()) +
                      eps2 * eps * u4 * (assign.a() + assign.b()) * (Poly2::one() + ab * u_n.square());
    return lhs + Poly2::one();
}

Poly2 quotient_numerator(const LetterAssignment& assign, unsigned n, const Poly2& u_n) {
    return eps_value(assign, n - 1) * u_n.square() * (assign.a() + assign.b()) + Poly2::one();
}

Exponent valuation_gap(const LetterAssignment& assign, unsigned n, const Convergent& uv) {
    return 4 * uv.v.degree() - quotient_numerator(assign, n, uv.u).degree();
}

bool CheckReport::passed() const noexcept {
    return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
}

void CheckReport::append(const CheckReport& other) {
    records.insert(records.end(), other.records.begin(), other.records.end());
}

std::string to_text(const CheckRecord& r) {
    std::ostringstream os;
    os << (r.pass ? "PASS " : "FAIL ") << r.check;
    if (!r.params.empty()) {
        os << " [";
        for (std::size_t i = 0; i < r.params.size(); ++i)
            os << (i ? ", " : "") << r.params[i].first << "=" << r.params[i].second;
        os << "]";
    }
    if (!r.message.empty()) os << ": " << r.message;
    for (const auto& [k, v] : r.witness) os << "\n    " << k << " = " << v;
    return os.str();
}

CheckReport check_theorem_exact(const LetterAssignment& assign, unsigned n_max) {
    return check_theorem_exact(assign, build_quartic(assign), n_max);
}

CheckReport check_theorem_exact(const LetterAssignment& assign, const QuarticCoefficients& q, unsigned n_max) {
    if (n_max < 1) throw std::invalid_argument("check_theorem_exact: n_max must be at least 1");
    const auto uv = uv_sequence(assign, n_max);
    auto params = pair_params(assign);
    params.emplace_back("n_max", std::to_string(n_max));

    CheckRecord x2{"x_plus_one_closed_form", params, true, {}, ""};
    CheckRecord xrec{"x_recurrence", params, true, {}, ""};
    CheckRecord quot{"quotient_form", params, true, {}, ""};
    CheckRecord gap{"valuation_gap_increasing", params, true, {}, ""};

    std::vector<Poly2> xs;
    std::vector<Exponent> gaps;
    for (unsigned n = 1; n <= n_max; ++n) {
        const Poly2& u = uv[n - 1].u;
        const Poly2& v = uv[n - 1].v;
        const Poly2 closed = quotient_numerator(assign, n, u);

        const Poly2 xn = homogeneous_quartic(q, u, v);
        xs.push_back(xn);
        if (x2.pass && xn != closed) {
            x2.pass = false;
            x2.message = "X_n + 1 differs from eps_{n-1} u_n^2 (a+b) at n = " + std::to_string(n);
            x2.witness = {{"n", std::to_string(n)}, {"X_n+1", (xn + Poly2::one()).to_string()},
                          {"eps*u^2*(a+b)", (closed + Poly2::one()).to_string()}};
        }
        if (n >= 2 && xrec.pass) {
            const Poly2 predicted = x_next_from_recurrence(assign, n - 1, uv[n - 2].u, xs[n - 2]);
            if (predicted != xn) {
                xrec.pass = false;
                xrec.message = "recurrence for X_{n+1} fails at n+1 = " + std::to_string(n);
                xrec.witness = {{"n+1", std::to_string(n)}, {"direct", xn.to_string()},
                                {"recurrence", predicted.to_string()}};
            }
        }

        // P(u/v) by Horner on fractions: N/D <- (N/D)(u/v) + c.
        Poly2 num = q.A, den = Poly2::one();
        for (const Poly2& c : {q.B, q.C, Poly2::zero(), Poly2::one()}) {
            den = den * v;
            num = num * u + c * den;
        }
        const Poly2 v4 = v.square().square();
        if (quot.pass && num * v4 != den * closed) {
            quot.pass = false;
            quot.message = "P(u_n/v_n) != (eps_{n-1} u_n^2 (a+b) + 1)/v_n^4 at n = " + std::to_string(n);
            quot.witness = {{"n", std::to_string(n)}, {"P_numerator", num.to_string()},
                            {"P_denominator", den.to_string()}, {"closed_numerator", closed.to_string()}};
        }
        gaps.push_back(valuation_gap(assign, n, uv[n - 1]));
    }

    std::string gap_text;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        gap_text += (i ? "," : "") + str(gaps[i]);
        if (i > 0 && gaps[i] <= gaps[i - 1] && gap.pass) {
            gap.pass = false;
            gap.message = "g(n) does not increase at n = " + std::to_string(i + 1);
        }
    }
    gap.witness = {{"g", gap_text}};
    if (x2.pass) x2.witness = {{"X_1+1", (xs.front() + Poly2::one()).to_string()}};
    return {{x2, xrec, quot, gap}};
}

CfApproximation alpha_pd(const LetterAssignment& assign, Exponent precision) {
    if (precision < 1) throw std::invalid_argument("alpha_pd: precision must be at least 1");
    Convergent cur{assign.a(), Poly2::one()};
    unsigned n = 1;
    while (valuation_gap(assign, n, cur) <= precision + kConvergentSlack) {
        const Poly2 eps_u = eps_value(assign, n) * cur.u;
        cur = {eps_u * cur.u, eps_u * cur.v + Poly2::one()};
        ++n;
    }
    return {Series::from_rational(cur.u, cur.v, precision), cur, n};
}

CfApproximation alpha_morphic(const Morphism& m, const LetterAssignment& assign, Exponent precision) {
    if (precision < 1) throw std::invalid_argument("alpha_morphic: precision must be at least 1");
    std::size_t len = 16;
    while (true) {
        const Word prefix = m.fixed_point_prefix(len).prefix(len);
        const Convergent c = eval_cf(prefix, assign);
        // |alpha - u/v| <= |t|^-(2 deg v + 1); the window bottom is deg(a_0) - precision + 1.
        if (2 * c.v.degree_or(0) >= precision + kConvergentSlack)
            return {Series::from_rational(c.u, c.v, precision), c, len};
        len *= 2;
    }
}

CfApproximation alpha_ptm(const LetterAssignment& assign, Exponent precision) {
    return alpha_morphic(thue_morse(), assign, precision);
}

CheckRecord SeriesCheck::record(const LetterAssignment& assign) const {
    auto params = pair_params(assign);
    params.emplace_back("precision", str(precision));
    CheckRecord r{"quartic_vanishes_on_series", params, pass, {}, ""};
    r.witness = {{"convergent_index", std::to_string(n_used)},
                 {"window", "[" + str(window_lo) + ", " + str(window_top) + "]"},
                 {"residual", residual.to_string()}};
    if (!pass) {
        r.message = first_nonzero ? "nonzero coefficient at t^" + str(*first_nonzero) : "empty certified window";
    }
    return r;
}

SeriesCheck check_theorem_series(const LetterAssignment& assign, Exponent precision) {
    return check_theorem_series(assign, build_quartic(assign), precision);
}

SeriesCheck check_theorem_series(const LetterAssignment& assign, const QuarticCoefficients& q, Exponent precision) {
    if (precision < 32) throw std::invalid_argument("check_theorem_series: precision must be at least 32");
    const CfApproximation alpha = alpha_pd(assign, precision);
    const Series& x = alpha.value;
    const Series x2 = x.square();
    const Series x3 = x2 * x;
    const Series x4 = x2.square();
    const Series terms[] = {Series::from_poly(q.A) * x4, Series::from_poly(q.B) * x3, Series::from_poly(q.C) * x2,
                            Series::from_poly(Poly2::one())};

    SeriesCheck out;
    out.precision = precision;
    out.n_used = alpha.depth;
    out.residual = terms[0] + terms[1] + terms[2] + terms[3];
    out.window_top = top_of(terms[0]);
    for (const auto& s : terms) out.window_top = std::max(out.window_top, top_of(s));
    out.window_lo = out.residual.lo().value_or(out.window_top);
    const ZeroPrefix z = valuation_of_zero_prefix(out.residual);
    if (!z.all_known_zero) out.first_nonzero = z.exponent;
    out.pass = z.all_known_zero && out.window_lo <= out.window_top;
    return out;
}

Series riccati_residual(const Series& x, const LetterAssignment& assign) {
    const Poly2 ab = assign.a() * assign.b();
    const Series lhs = (Series::from_poly(ab * (assign.a() + assign.b())) * x).derivative();
    const Series rhs = Series::from_poly(ab.derivative()) * (Series::from_poly(Poly2::one()) + x.square());
    return lhs + rhs;
}

CheckRecord riccati_check(const Series& x, const LetterAssignment& assign, const std::string& label) {
    const Series res = riccati_residual(x, assign);
    const ZeroPrefix z = valuation_of_zero_prefix(res);
    auto params = pair_params(assign);
    params.emplace_back("series", label);
    CheckRecord r{"riccati_residual_vanishes", params, z.all_known_zero, {{"residual", res.to_string()}}, ""};
    if (!z.all_known_zero) r.message = "nonzero coefficient at t^" + str(z.exponent);
    return r;
}

CheckReport riccati_from_quartic(const QuarticCoefficients& q) {
    const Poly2 da = q.A.derivative();
    const Poly2 dc = q.C.derivative();
    CheckRecord r{"quartic_derivatives_agree", {}, da == dc, {{"A'", da.to_string()}, {"C'", dc.to_string()}}, ""};
    if (!r.pass) r.message = "A' != C'";
    return {{r}};
}

CheckReport riccati_from_quartic(const QuarticCoefficients& q, const LetterAssignment& assign) {
    CheckReport rep = riccati_from_quartic(q);
    rep.records.front().params = pair_params(assign);
    const Poly2 ab = assign.a() * assign.b();
    const Poly2 dab = ab.derivative();
    CheckRecord r{"quartic_derivatives_equal_ab_prime",
                  pair_params(assign),
                  q.A.derivative() == dab && q.C.derivative() == dab && q.B == ab * (assign.a() + assign.b()),
                  {{"(ab)'", dab.to_string()}, {"B", q.B.to_string()}},
                  ""};
    if (!r.pass) r.message = "A' = C' = (ab)' or B = ab(a+b) fails";
    rep.records.push_back(r);
    return rep;
}

CheckRecord riccati_reduces_to_r0(const LetterAssignment& assign) {
    const Poly2 ab = assign.a() * assign.b();
    const Poly2 lead = ab * (assign.a() + assign.b());
    const Poly2 t_t1 = Poly2::parse("t^2+t");
    const Poly2 dab = ab.derivative();
    CheckRecord r{"riccati_reduces_to_r0", pair_params(assign), lead == t_t1 && dab.is_one(),
                  {{"ab(a+b)", lead.to_string()}, {"(ab)'", dab.to_string()}}, ""};
    if (!r.pass) r.message = "coefficients differ from t(t+1) and 1";
    return r;
}

Series derivative_from_quartic(const QuarticCoefficients& q, const Series& x) {
    const Series num = Series::from_poly(q.B.derivative()) * x + Series::from_poly(q.A.derivative()) * x.square() +
                       Series::from_poly(q.C.derivative());
    const Series b = Series::from_poly(q.B);
    const Exponent w = num.width().value_or(1);
    return num * b.inverse(std::max<Exponent>(w, 1));
}

Series fractional_part(const Series& x) { return x + Series::from_poly(x.polynomial_part()); }

BaumSweetReport baum_sweet_check(const Series& x) {
    if (!x.in_unit_disc()) throw std::invalid_argument("baum_sweet_check: |x| < 1 required");
    BaumSweetReport rep;
    const Series one = Series::from_poly(Poly2::one());
    const Series tt1 = Series::from_poly(Poly2::parse("t^2+t"));
    const Series x2 = x.square();

    rep.residual = (x * tt1).derivative() + x2 + one;
    rep.residual_ok = rep.residual.is_zero_to_precision();

    const Series y = x2 + Series::from_poly(Poly2::t()) * x + one;
    const Exponent w = std::max<Exponent>(y.width().value_or(1), 1);
    const Series z = y * Series::from_poly(Poly2::parse("t+1")).inverse(w);
    if (z.is_square()) {
        rep.beta = z.sqrt();
        rep.beta_ok = rep.beta->in_unit_disc();
    }

    const SeriesExpansion exp = expand_series(x, static_cast<std::size_t>(-1));
    rep.certified_quotients = exp.count;
    if (exp.count >= 1 && !exp.quotients.leading.is_zero()) rep.first_bad_index = 0;
    for (std::size_t i = 0; i < exp.quotients.tail.size() && !rep.first_bad_index; ++i)
        if (exp.quotients.tail[i].degree() != 1) rep.first_bad_index = i + 1;
    rep.degree_one_ok = !rep.first_bad_index && exp.count >= 2;
    return rep;
}

CheckReport BaumSweetReport::records(const std::string& label) const {
    const std::vector<std::pair<std::string, std::string>> params = {{"series", label}};
    CheckRecord res{"baum_sweet_residual", params, residual_ok, {{"residual", residual.to_string()}}, ""};
    CheckRecord wit{"baum_sweet_beta_witness", params, beta_ok, {}, ""};
    if (beta) wit.witness.emplace_back("beta", beta->to_string());
    if (!beta_ok) wit.message = beta ? "beta not in the unit disc" : "(x^2+tx+1)/(1+t) is not a square";
    CheckRecord deg{"baum_sweet_degree_one_quotients", params, degree_one_ok,
                    {{"certified_quotients", std::to_string(certified_quotients)}}, ""};
    if (first_bad_index) deg.message = "quotient " + std::to_string(*first_bad_index) + " does not have degree one";
    if (!res.pass) res.message = "residual has a nonzero certified coefficient";
    return {{res, wit, deg}};
}

}  // namespace f2cf
