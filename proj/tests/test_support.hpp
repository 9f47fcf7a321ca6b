#pragma once

#include <random>
#include <vector>

#include "f2cf/contfrac.hpp"
#include "f2cf/poly2.hpp"
#include "f2cf/words.hpp"

namespace f2cf::testing {

inline Poly2 P(const char* text) { return Poly2::parse(text); }

/// Uniform polynomial of degree exactly `deg` (deg < 0 gives zero).
inline Poly2 random_poly_of_degree(std::mt19937_64& rng, Exponent deg) {
    if (deg < 0) return {};
    std::vector<Exponent> exps{deg};
    std::bernoulli_distribution coin(0.5);
    for (Exponent i = 0; i < deg; ++i)
        if (coin(rng)) exps.push_back(i);
    return Poly2::from_exponents(exps);
}

/// Random polynomial with degree uniform in [-1, max_deg] (-1 meaning zero).
inline Poly2 random_poly(std::mt19937_64& rng, Exponent max_deg) {
    std::uniform_int_distribution<Exponent> d(-1, max_deg);
    return random_poly_of_degree(rng, d(rng));
}

inline Poly2 random_nonzero_poly(std::mt19937_64& rng, Exponent max_deg) {
    std::uniform_int_distribution<Exponent> d(0, max_deg);
    return random_poly_of_degree(rng, d(rng));
}

/// Distinct non-constant pair with degrees in [1, max_deg].
inline LetterAssignment random_assignment(std::mt19937_64& rng, Exponent max_deg) {
    std::uniform_int_distribution<Exponent> d(1, max_deg);
    while (true) {
        Poly2 a = random_poly_of_degree(rng, d(rng));
        Poly2 b = random_poly_of_degree(rng, d(rng));
        if (a != b) return LetterAssignment(a, b);
    }
}

inline Word random_word(std::mt19937_64& rng, std::size_t len) {
    std::vector<Letter> letters;
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 0; i < len; ++i) letters.push_back(coin(rng) ? Letter::B : Letter::A);
    return Word(std::move(letters));
}

/// All words of length `len` (2^len of them), in binary counting order.
inline std::vector<Word> all_words(std::size_t len) {
    std::vector<Word> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
        std::vector<Letter> letters;
        for (std::size_t i = 0; i < len; ++i) letters.push_back(((mask >> i) & 1U) ? Letter::B : Letter::A);
        out.emplace_back(std::move(letters));
    }
    return out;
}

/// Bit-by-bit carry-less product, independent of the word kernels.
inline Poly2 naive_mul(const Poly2& p, const Poly2& q) {
    std::vector<Exponent> exps;
    for (Exponent i : p.exponents())
        for (Exponent j : q.exponents()) exps.push_back(i + j);
    return Poly2::from_exponents(exps);
}

/// <w_1..w_n> = w_1 <W'> + <(W')'> straight from the recursive definition.
inline Poly2 recursive_continuant(const std::vector<Poly2>& w, std::size_t from = 0) {
    const std::size_t n = w.size() - from;
    if (n == 0) return Poly2::one();
    if (n == 1) return w[from];
    return w[from] * recursive_continuant(w, from + 1) + recursive_continuant(w, from + 2);
}

}  // namespace f2cf::testing
