// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "f2cf/contfrac.hpp"
#include "f2cf/miner.hpp"
#include "f2cf/verifier.hpp"
#include "f2cf/words.hpp"

using namespace f2cf;

namespace {

Poly2 P(const char* s) { return Poly2::parse(s); }

Poly2 random_poly_of_degree(std::mt19937_64& rng, Exponent deg) {
    std::vector<Exponent> exps{deg};
    for (Exponent i = 0; i < deg; ++i)
        if (rng() & 1U) exps.push_back(i);
    return Poly2::from_exponents(exps);
}

LetterAssignment random_pair(std::mt19937_64& rng, Exponent max_deg) {
    std::uniform_int_distribution<Exponent> d(1, max_deg);
    while (true) {
        Poly2 a = random_poly_of_degree(rng, d(rng)), b = random_poly_of_degree(rng, d(rng));
        if (a != b) return LetterAssignment(a, b);
    }
}

Word random_word(std::mt19937_64& rng, std::size_t len) {
    std::vector<Letter> l;
    for (std::size_t i = 0; i < len; ++i) l.push_back((rng() & 1U) ? Letter::B : Letter::A);
    return Word(std::move(l));
}

Poly2 recursive_continuant(const std::vector<Poly2>& w, std::size_t from = 0) {
    const std::size_t n = w.size() - from;
    if (n == 0) return Poly2::one();
    if (n == 1) return w[from];
    return w[from] * recursive_continuant(w, from + 1) + recursive_continuant(w, from + 2);
}

std::vector<LetterAssignment> pairs_up_to(int total) {
    std::vector<LetterAssignment> out;
    for (int da = 1; da < total; ++da)
        for (int db = 1; da + db <= total; ++db)
            for (Word64 ma = 0; ma < (Word64{1} << da); ++ma)
                for (Word64 mb = 0; mb < (Word64{1} << db); ++mb) {
                    const Poly2 a = Poly2::from_words({ma | (Word64{1} << da)});
                    const Poly2 b = Poly2::from_words({mb | (Word64{1} << db)});
                    if (a != b) out.emplace_back(a, b);
                }
    return out;
}

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

int failures = 0;

void criterion(int id, const char* name, double limit_ms, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && ms >= limit_ms) o.fail("runtime over limit");
    if (!o.ok) ++failures;
    std::printf("[%s] %d %s (%.3f ms, limit %.0f ms)%s%s\n", o.ok ? "PASS" : "FAIL", id, name, ms, limit_ms,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
}

const LetterAssignment kWorked(P("t^3"), P("t^2+t+1"));
const LetterAssignment kSmall(P("t"), P("t+1"));

}  // namespace

int main() {
    criterion(1, "worked-pair quartic coefficients", 1, [] {
        Outcome o;
        const QuarticCoefficients q = build_quartic(kWorked);
        if (q.A != P("t^5+t^3+t^2")) o.fail("A = " + q.A.to_string());
        if (q.B != P("t^8+t^6+t^5+t^3")) o.fail("B = " + q.B.to_string());
        if (q.C != P("t^5+t^4+t^3")) o.fail("C = " + q.C.to_string());
        return o;
    });

    criterion(2, "exact identities for 20 random pairs, n <= 8", 5000, [] {
        Outcome o;
        std::mt19937_64 rng(2024);
        for (int i = 0; i < 20; ++i) {
            const LetterAssignment s = random_pair(rng, 6);
            const CheckReport r = check_theorem_exact(s, 8);
            for (const auto& rec : r.records)
                if (!rec.pass) o.fail(rec.check + " fails for a=" + s.a().to_string() + ", b=" + s.b().to_string());
        }
        return o;
    });

    criterion(3, "quartic vanishes on the certified window at precision 256", 2000, [] {
        Outcome o;
        for (const auto* s : {&kWorked, &kSmall}) {
            const SeriesCheck c = check_theorem_series(*s, 256);
            if (!c.pass) o.fail("residual nonzero for a=" + s->a().to_string());
            if (c.window_top - c.window_lo + 1 < 256) o.fail("window narrower than 256");
        }
        return o;
    });

    criterion(4, "continuant identities (determinant, mirror, concatenation)", 5000, [] {
        Outcome o;
        std::mt19937_64 rng(4);
        auto check_word = [&](const Word& w, const LetterAssignment& s, bool with_oracle) {
            const Poly2 full = continuant(w, s);
            if (with_oracle && full != recursive_continuant(s.values(w))) o.fail("recursion oracle on " + w.to_string());
            if (full != continuant(w.reversed(), s)) o.fail("mirror on " + w.to_string());
            if (w.size() >= 2) {
                const Poly2 det = full * continuant(w.drop_first().drop_last(), s) +
                                  continuant(w.drop_last(), s) * continuant(w.drop_first(), s);
                if (!det.is_one()) o.fail("determinant on " + w.to_string());
            }
            for (std::size_t cut = 0; cut <= w.size(); ++cut) {
                Word x = w.prefix(cut), y;
                for (std::size_t i = cut; i < w.size(); ++i) y += w[i];
                if (concat_continuant(x, y, s) != full) o.fail("concatenation on " + w.to_string());
            }
        };
        for (int k = 0; k < 5; ++k) {
            const LetterAssignment s = random_pair(rng, 6);
            for (std::size_t len = 1; len <= 8; ++len)
                for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
                    std::vector<Letter> l;
                    for (std::size_t i = 0; i < len; ++i) l.push_back(((mask >> i) & 1U) ? Letter::B : Letter::A);
                    check_word(Word(std::move(l)), s, true);
                }
            for (int i = 0; i < 200; ++i) check_word(random_word(rng, 9 + rng() % 56), s, false);
        }
        return o;
    });

    criterion(5, "W_n by concatenation and the (u_n, v_n) recursion", 5000, [] {
        Outcome o;
        const Morphism sigma = period_doubling();
        Word iterate = Word::parse("a");
        for (unsigned n = 0; n <= 12; ++n) {
            if (w_n(n) != iterate.drop_last()) o.fail("W_" + std::to_string(n));
            iterate = sigma.apply(iterate);
        }
        std::mt19937_64 rng(5);
        for (int k = 0; k < 10; ++k) {
            const LetterAssignment s = k == 0 ? kWorked : random_pair(rng, 6);
            const auto uv = uv_sequence(s, 8);
            for (unsigned n = 1; n <= 8; ++n)
                if (uv[n - 1] != eval_cf(w_n(n), s)) o.fail("uv mismatch at n=" + std::to_string(n));
        }
        return o;
    });

    criterion(6, "Riccati equation for alpha_p and alpha_t, reduction for (t, t+1)", 5000, [] {
        Outcome o;
        std::mt19937_64 rng(6);
        for (int k = 0; k < 10; ++k) {
            const LetterAssignment s = random_pair(rng, 6);
            const std::string tag = " for a=" + s.a().to_string() + ", b=" + s.b().to_string();
            if (!riccati_check(alpha_pd(s, 256).value, s, "pd").pass) o.fail("alpha_p residual" + tag);
            if (!riccati_check(alpha_ptm(s, 256).value, s, "ptm").pass) o.fail("alpha_t residual" + tag);
        }
        if (!riccati_reduces_to_r0(kSmall).pass) o.fail("reduction for (t, t+1)");
        if (!riccati_from_quartic(build_quartic(kSmall), kSmall).passed()) o.fail("A' = C' = (ab)' for (t, t+1)");
        return o;
    });

    criterion(7, "Baum-Sweet criteria for (t, t+1) and a counterexample", 2000, [] {
        Outcome o;
        for (const auto& [name, x] : {std::pair{"alpha_p", alpha_pd(kSmall, 256).value},
                                      std::pair{"alpha_t", alpha_ptm(kSmall, 256).value}}) {
            const BaumSweetReport r = baum_sweet_check(fractional_part(x));
            if (!r.residual_ok) o.fail(std::string(name) + " residual");
            if (!r.beta_ok) o.fail(std::string(name) + " beta witness");
            if (!r.degree_one_ok) o.fail(std::string(name) + " degree-one quotients");
        }
        const BaumSweetReport bad = baum_sweet_check(fractional_part(alpha_pd(kWorked, 256).value));
        if (bad.degree_one_ok) o.fail("counterexample passes the degree-one check");
        return o;
    });

    criterion(8, "miner recovers the quartic for all 1270 pairs with deg a + deg b <= 7", 60000, [] {
        Outcome o;
        const auto pairs = pairs_up_to(7);
        if (pairs.size() != 1270) o.fail("enumerated " + std::to_string(pairs.size()) + " pairs");
        for (const auto& s : pairs) {
            const auto rel = mine(alpha_pd(s, 256).value, MinerConfig{4, 13, 64});
            if (!rel || rel->coefficients != build_quartic(s).as_vector())
                o.fail("no exact recovery for a=" + s.a().to_string() + ", b=" + s.b().to_string());
        }
        std::mt19937_64 rng(8);
        for (int k = 0; k < 5; ++k) {
            const LetterAssignment s = k == 0 ? kWorked : random_pair(rng, 3);
            if (mine(alpha_pd(s, 256).value, MinerConfig{2, 13, 64})) o.fail("quadratic relation found");
        }
        int false_positives = 0;
        for (int k = 0; k < 100; ++k) {
            const Series x = Series::truncated(random_poly_of_degree(rng, 255), -256);
            if (mine(x, MinerConfig{4, 8, 64})) ++false_positives;
        }
        if (false_positives > 1) o.fail(std::to_string(false_positives) + " relations on random series");
        return o;
    });

    criterion(9, "ten single-bit mutations of (A, B, C) are detected", 5000, [] {
        Outcome o;
        struct Mutation {
            char which;
            Exponent bit;
        };
        const Mutation muts[] = {{'A', 0}, {'A', 2}, {'A', 5}, {'A', 9}, {'B', 0},
                                 {'B', 4}, {'B', 8}, {'C', 1}, {'C', 3}, {'C', 6}};
        for (const auto& m : muts) {
            QuarticCoefficients q = build_quartic(kWorked);
            Poly2& target = m.which == 'A' ? q.A : m.which == 'B' ? q.B : q.C;
            target = target.with_flipped(m.bit);
            const bool exact_fails = !check_theorem_exact(kWorked, q, 8).passed();
            const bool series_fails = !check_theorem_series(kWorked, q, 256).pass;
            if (!exact_fails && !series_fails)
                o.fail(std::string("flip of bit ") + std::to_string(m.bit) + " in " + m.which + " undetected");
        }
        return o;
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
