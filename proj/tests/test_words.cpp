#include <doctest.h>

#include <stdexcept>

#include "f2cf/words.hpp"

using namespace f2cf;

namespace {

Word W(const char* s) { return Word::parse(s); }

}  // namespace

TEST_CASE("substitutions on small words") {
    const Morphism sigma = period_doubling();
    CHECK(sigma.apply(W("a")) == W("ab"));
    CHECK(sigma.apply(W("ab")) == W("abaa"));
    CHECK(sigma.apply(W("abaa")) == W("abaaabab"));
    const Morphism tau = thue_morse();
    CHECK(tau.apply(W("ab")) == W("abba"));
    CHECK(tau.apply(W("abba")) == W("abbabaab"));
    CHECK(sigma.apply(Word()).empty());
}

TEST_CASE("fixed points") {
    CHECK(period_doubling().fixed_point_prefix(16).prefix(16) == W("abaaabababaaabaa"));
    CHECK(thue_morse().fixed_point_prefix(12).prefix(12) == W("abbabaabbaab"));
    CHECK(period_doubling().fixed_point_prefix(1000).size() >= 1000);

    const Morphism not_prolongable(W("ba"), W("a"));
    CHECK_FALSE(not_prolongable.is_prolongable());
    CHECK_THROWS_AS(not_prolongable.fixed_point_prefix(4), std::invalid_argument);
    CHECK_FALSE(Morphism(W("a"), W("ab")).is_prolongable());
}

TEST_CASE("W_n for small n") {
    CHECK(w_n(0).empty());
    CHECK(w_n(1) == W("a"));
    CHECK(w_n(2) == W("aba"));
    CHECK(w_n(3) == W("abaaaba"));
}

TEST_CASE("epsilon alternates") {
    CHECK(epsilon(0) == Letter::A);
    CHECK(epsilon(1) == Letter::B);
    CHECK(epsilon(2) == Letter::A);
    CHECK(epsilon(101) == Letter::B);
}

TEST_CASE("W_n from concatenation equals sigma^n(a) minus its last letter") {
    const Morphism sigma = period_doubling();
    Word iterate = W("a");
    for (unsigned n = 0; n <= 14; ++n) {
        CAPTURE(n);
        const Word w = w_n(n);
        CHECK(w == iterate.drop_last());
        CHECK(w.size() == (std::size_t{1} << n) - 1);
        CHECK(w.reversed() == w);
        // W_n is a prefix of the fixed point.
        CHECK(sigma.fixed_point_prefix(w.size() + 1).prefix(w.size()) == w);
        if (n >= 1) CHECK(w_n(n - 1) == w.prefix(w.size() / 2));
        iterate = sigma.apply(iterate);
    }
}

TEST_CASE("word operations") {
    const Word w = W("aabab");
    CHECK(w.drop_first() == W("abab"));
    CHECK(w.drop_last() == W("aaba"));
    CHECK(w.reversed() == W("babaa"));
    CHECK(W("a").drop_first().empty());
    CHECK(Word().drop_last().empty());
    CHECK(W("ab") + W("ba") == W("abba"));
    CHECK(W("ab") + Letter::A == W("aba"));
    CHECK(w.to_string() == "aabab");
    CHECK_THROWS_AS(W("abc"), std::invalid_argument);
}

TEST_CASE("morphism parsing") {
    CHECK(Morphism::parse("a->ab,b->aa") == period_doubling());
    CHECK(Morphism::parse(" a -> ab , b -> ba ") == thue_morse());
    CHECK(period_doubling().to_string() == "a->ab,b->aa");
    CHECK(Morphism::parse(period_doubling().to_string()) == period_doubling());
    CHECK_THROWS_AS(Morphism::parse("a->ab"), std::invalid_argument);
    CHECK_THROWS_AS(Morphism::parse("a->,b->a"), std::invalid_argument);
    CHECK_THROWS_AS(Morphism::parse("a->ac,b->a"), std::invalid_argument);
    CHECK_THROWS_AS(Morphism(Word(), W("a")), std::invalid_argument);
}
