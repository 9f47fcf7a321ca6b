#include <doctest.h>

#include <random>

#include "f2cf/contfrac.hpp"
#include "test_support.hpp"

using namespace f2cf;
using f2cf::testing::P;

namespace {

Word W(const char* s) { return Word::parse(s); }

const LetterAssignment kWorked(P("t^3"), P("t^2+t+1"));
const LetterAssignment kSmall(P("t"), P("t+1"));

}  // namespace

TEST_CASE("letter assignment validation") {
    CHECK_THROWS_AS(LetterAssignment(P("1"), P("t")), std::invalid_argument);
    CHECK_THROWS_AS(LetterAssignment(P("t"), P("0")), std::invalid_argument);
    CHECK_THROWS_AS(LetterAssignment(P("t^2"), P("t^2")), std::invalid_argument);
    CHECK(kWorked.values(W("ab")) == std::vector<Poly2>{P("t^3"), P("t^2+t+1")});
}

TEST_CASE("continuants of small words") {
    CHECK(continuant(W("aba"), kWorked) == P("t^8+t^7+t^6"));
    CHECK(continuant(W("aba"), kWorked) == testing::recursive_continuant(kWorked.values(W("aba"))));
    CHECK(continuant(Word(), kWorked) == Poly2::one());
    CHECK(continuant(W("b"), kWorked) == kWorked.b());

    CHECK(eval_cf(W("aaa"), kSmall) == Convergent{P("t^3"), P("t^2+1")});
    const Poly2 a = kWorked.a(), b = kWorked.b();
    CHECK(eval_cf(W("aba"), kWorked) == Convergent{a * a * b, a * b + Poly2::one()});
    CHECK_THROWS_AS(eval_cf(Word(), kWorked), std::invalid_argument);
}

TEST_CASE("uv sequence") {
    const auto uv = uv_sequence(kWorked, 3);
    REQUIRE(uv.size() == 3);
    CHECK(uv[0] == Convergent{P("t^3"), P("1")});
    CHECK(uv[1] == Convergent{P("t^8+t^7+t^6"), P("t^5+t^4+t^3+1")});
    const auto q = expand_rational(uv[2].u, uv[2].v);
    std::vector<Poly2> all{q.leading};
    all.insert(all.end(), q.tail.begin(), q.tail.end());
    Word spelled;
    REQUIRE(spell_word(all, kWorked, spelled));
    CHECK(spelled == W("abaaaba"));
}

TEST_CASE("uv sequence matches continuants of W_n") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const LetterAssignment assign = trial == 0 ? kWorked : testing::random_assignment(rng, 4);
        const auto uv = uv_sequence(assign, 8);
        for (unsigned n = 1; n <= 8; ++n) CHECK(uv[n - 1] == eval_cf(w_n(n), assign));
    }
}

TEST_CASE("expand_rational") {
    const auto q = expand_rational(P("t^3"), P("t^2+1"));
    CHECK(q.leading == P("t"));
    CHECK(q.tail == std::vector<Poly2>{P("t"), P("t")});
    CHECK(q.to_string() == "[t; t, t]");
    CHECK(expand_rational(P("1"), P("t")).to_string() == "[0; t]");
    CHECK(expand_rational(P("t^2"), P("1")).to_string() == "[t^2]");
    CHECK_THROWS_AS(expand_rational(P("t"), Poly2::zero()), std::domain_error);
}

TEST_CASE("expanding a certified series of u_8/v_8 spells W_8") {
    const auto uv = uv_sequence(kWorked, 8);
    const Series x = Series::from_rational(uv[7].u, uv[7].v, 2400);
    const SeriesExpansion e = expand_series(x, 255);
    REQUIRE(e.count == 255);
    std::vector<Poly2> all{e.quotients.leading};
    all.insert(all.end(), e.quotients.tail.begin(), e.quotients.tail.end());
    Word spelled;
    REQUIRE(spell_word(all, kWorked, spelled));
    CHECK(spelled == w_n(8));
}

TEST_CASE("expand_series stops when precision runs out") {
    const Series x = Series::from_rational(P("1"), P("t^3+t+1"), 10);
    const SeriesExpansion e = expand_series(x, 100);
    CHECK(e.precision_exhausted);
    CHECK_FALSE(e.complete);
    CHECK(e.count < 100);

    const SeriesExpansion exact = expand_series(Series::from_poly(P("t^2+1")), 10);
    CHECK(exact.complete);
    CHECK(exact.count == 1);
}

TEST_CASE("determinant and mirror identities on every word up to length 8") {
    for (std::size_t len = 1; len <= 8; ++len) {
        for (const Word& w : testing::all_words(len)) {
            for (const auto* assign : {&kWorked, &kSmall}) {
                const Poly2 full = continuant(w, *assign);
                CHECK(full == testing::recursive_continuant(assign->values(w)));
                CHECK(full == continuant(w.reversed(), *assign));
                if (len >= 2) {
                    const Poly2 det = full * continuant(w.drop_first().drop_last(), *assign) +
                                      continuant(w.drop_last(), *assign) * continuant(w.drop_first(), *assign);
                    CHECK(det.is_one());
                }
            }
        }
    }
}

TEST_CASE("identities on random words and assignments") {
    std::mt19937_64 rng(32);
    for (int iter = 0; iter < 300; ++iter) {
        const LetterAssignment assign = testing::random_assignment(rng, 6);
        const Word w = testing::random_word(rng, 2 + rng() % 11);
        const Poly2 full = continuant(w, assign);
        CHECK(full == testing::recursive_continuant(assign.values(w)));
        CHECK(full == continuant(w.reversed(), assign));
        const Poly2 det = full * continuant(w.drop_first().drop_last(), assign) +
                          continuant(w.drop_last(), assign) * continuant(w.drop_first(), assign);
        CHECK(det.is_one());

        // Concatenation at a random split point.
        const std::size_t cut = rng() % (w.size() + 1);
        Word x = w.prefix(cut), y;
        for (std::size_t i = cut; i < w.size(); ++i) y += w[i];
        CHECK(concat_continuant(x, y, assign) == full);

        // Rational round trip: the expansion of <W>/<W'> is W itself.
        const Convergent c = eval_cf(w, assign);
        const auto q = expand_rational(c.u, c.v);
        std::vector<Poly2> all{q.leading};
        all.insert(all.end(), q.tail.begin(), q.tail.end());
        CHECK(all == assign.values(w));
    }
}

TEST_CASE("continuant_pair handles raw quotient lists") {
    const std::vector<Poly2> q{P("t"), P("t^2"), P("t+1")};
    const Convergent c = continuant_pair(q);
    CHECK(c.u == testing::recursive_continuant(q));
    CHECK(c.v == testing::recursive_continuant(q, 1));
    CHECK(continuant_pair({}) == Convergent{Poly2::one(), Poly2::zero()});
}
