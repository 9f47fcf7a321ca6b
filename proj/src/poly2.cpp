#include "f2cf/poly2.hpp"

#include <algorithm>
#include <bit>
#include <ostream>

#if defined(__x86_64__)
#include <immintrin.h>
#define F2CF_HAVE_X86_CLMUL 1
#endif

namespace f2cf {

namespace {

constexpr Word64 kEvenBits = 0x5555555555555555ULL;
constexpr Word64 kOddBits = 0xAAAAAAAAAAAAAAAAULL;

Word64 spread32(std::uint32_t x) {
    Word64 v = x;
    v = (v | (v << 16)) & 0x0000FFFF0000FFFFULL;
    v = (v | (v << 8)) & 0x00FF00FF00FF00FFULL;
    v = (v | (v << 4)) & 0x0F0F0F0F0F0F0F0FULL;
    v = (v | (v << 2)) & 0x3333333333333333ULL;
    v = (v | (v << 1)) & kEvenBits;
    return v;
}

std::uint32_t compress_even(Word64 v) {
    v &= kEvenBits;
    v = (v | (v >> 1)) & 0x3333333333333333ULL;
    v = (v | (v >> 2)) & 0x0F0F0F0F0F0F0F0FULL;
    v = (v | (v >> 4)) & 0x00FF00FF00FF00FFULL;
    v = (v | (v >> 8)) & 0x0000FFFF0000FFFFULL;
    v = (v | (v >> 16)) & 0x00000000FFFFFFFFULL;
    return static_cast<std::uint32_t>(v);
}

// dst ^= src * t^shift, growing dst as needed.
void xor_shifted(std::vector<Word64>& dst, std::span<const Word64> src, std::size_t shift) {
    if (src.empty()) return;
    const std::size_t word_off = shift / 64;
    const unsigned bit_off = shift % 64;
    const std::size_t need = word_off + src.size() + (bit_off ? 1 : 0);
    if (dst.size() < need) dst.resize(need, 0);
    if (bit_off == 0) {
        for (std::size_t i = 0; i < src.size(); ++i) dst[word_off + i] ^= src[i];
        return;
    }
    Word64 carry = 0;
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[word_off + i] ^= (src[i] << bit_off) | carry;
        carry = src[i] >> (64 - bit_off);
    }
    dst[word_off + src.size()] ^= carry;
}

void schoolbook_portable(std::span<const Word64> a, std::span<const Word64> b, Word64* out) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            auto [lo, hi] = detail::clmul64_portable(a[i], b[j]);
            out[i + j] ^= lo;
            out[i + j + 1] ^= hi;
        }
    }
}

#ifdef F2CF_HAVE_X86_CLMUL
__attribute__((target("pclmul,sse4.1"))) void schoolbook_clmul(std::span<const Word64> a,
                                                               std::span<const Word64> b,
                                                               Word64* out) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        const __m128i ai = _mm_cvtsi64_si128(static_cast<long long>(a[i]));
        for (std::size_t j = 0; j < b.size(); ++j) {
            const __m128i r =
                _mm_clmulepi64_si128(ai, _mm_cvtsi64_si128(static_cast<long long>(b[j])), 0);
            out[i + j] ^= static_cast<Word64>(_mm_cvtsi128_si64(r));
            out[i + j + 1] ^= static_cast<Word64>(_mm_extract_epi64(r, 1));
        }
    }
}

bool cpu_has_clmul() {
    static const bool has = __builtin_cpu_supports("pclmul");
    return has;
}
#endif

void schoolbook(std::span<const Word64> a, std::span<const Word64> b, Word64* out) {
#ifdef F2CF_HAVE_X86_CLMUL
    if (cpu_has_clmul()) {
        schoolbook_clmul(a, b, out);
        return;
    }
#endif
    schoolbook_portable(a, b, out);
}

// out must hold a.size() + b.size() zeroed words.
void mul_words(std::span<const Word64> a, std::span<const Word64> b, Word64* out,
               std::size_t threshold) {
    if (a.empty() || b.empty()) return;
    if (a.size() < b.size()) std::swap(a, b);
    if (b.size() < threshold || b.size() < 2) {
        schoolbook(a, b, out);
        return;
    }
    const std::size_t m = (a.size() + 1) / 2;
    if (b.size() <= m) {
        // Unbalanced: split the long operand only.
        std::vector<Word64> hi(a.size() - m + b.size(), 0);
        mul_words(a.first(m), b, out, threshold);
        mul_words(a.subspan(m), b, hi.data(), threshold);
        for (std::size_t i = 0; i < hi.size(); ++i) out[m + i] ^= hi[i];
        return;
    }
    const auto a0 = a.first(m), a1 = a.subspan(m);
    const auto b0 = b.first(m), b1 = b.subspan(m);

    std::vector<Word64> z0(2 * m, 0), z2(a1.size() + b1.size(), 0), z1(2 * m, 0);
    mul_words(a0, b0, z0.data(), threshold);
    mul_words(a1, b1, z2.data(), threshold);

    std::vector<Word64> as(a0.begin(), a0.end()), bs(b0.begin(), b0.end());
    for (std::size_t i = 0; i < a1.size(); ++i) as[i] ^= a1[i];
    for (std::size_t i = 0; i < b1.size(); ++i) bs[i] ^= b1[i];
    mul_words(as, bs, z1.data(), threshold);
    for (std::size_t i = 0; i < z0.size(); ++i) z1[i] ^= z0[i];
    for (std::size_t i = 0; i < z2.size(); ++i) z1[i] ^= z2[i];

    for (std::size_t i = 0; i < z0.size(); ++i) out[i] ^= z0[i];
    for (std::size_t i = 0; i < z1.size(); ++i) out[m + i] ^= z1[i];
    for (std::size_t i = 0; i < z2.size(); ++i) out[2 * m + i] ^= z2[i];
}

}  // namespace

namespace detail {

std::pair<Word64, Word64> clmul64_portable(Word64 a, Word64 b) noexcept {
    Word64 lo = 0, hi = 0;
    while (b) {
        const int i = std::countr_zero(b);
        lo ^= a << i;
        if (i) hi ^= a >> (64 - i);
        b &= b - 1;
    }
    return {lo, hi};
}

std::pair<Word64, Word64> clmul64(Word64 a, Word64 b) noexcept {
    Word64 out[2] = {0, 0};
    const Word64 aa[1] = {a}, bb[1] = {b};
    schoolbook(aa, bb, out);
    return {out[0], out[1]};
}

}  // namespace detail

void Poly2::trim() noexcept {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Poly2 Poly2::monomial(Exponent k) {
    if (k < 0) throw std::domain_error("Poly2::monomial: negative exponent");
    std::vector<Word64> w(static_cast<std::size_t>(k / 64) + 1, 0);
    w.back() = Word64{1} << (k % 64);
    return Poly2(std::move(w));
}

Poly2 Poly2::from_words(std::vector<Word64> words) { return Poly2(std::move(words)); }

Poly2 Poly2::from_exponents(std::initializer_list<Exponent> exps) {
    return from_exponents(std::span<const Exponent>(exps.begin(), exps.size()));
}

Poly2 Poly2::from_exponents(std::span<const Exponent> exps) {
    std::vector<Word64> w;
    for (Exponent e : exps) {
        if (e < 0) throw std::domain_error("Poly2::from_exponents: negative exponent");
        const auto idx = static_cast<std::size_t>(e / 64);
        if (w.size() <= idx) w.resize(idx + 1, 0);
        w[idx] ^= Word64{1} << (e % 64);
    }
    return Poly2(std::move(w));
}

Exponent Poly2::degree() const {
    if (is_zero()) throw std::domain_error("Poly2::degree: zero polynomial has no degree");
    return static_cast<Exponent>(64 * (words_.size() - 1)) + 63 - std::countl_zero(words_.back());
}

Exponent Poly2::degree_or(Exponent fallback) const noexcept {
    return is_zero() ? fallback : degree();
}

bool Poly2::coeff(Exponent i) const noexcept {
    if (i < 0) return false;
    const auto idx = static_cast<std::size_t>(i / 64);
    if (idx >= words_.size()) return false;
    return (words_[idx] >> (i % 64)) & 1U;
}

std::size_t Poly2::popcount() const noexcept {
    std::size_t n = 0;
    for (Word64 w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::vector<Exponent> Poly2::exponents() const {
    std::vector<Exponent> out;
    for (std::size_t i = words_.size(); i-- > 0;) {
        Word64 w = words_[i];
        while (w) {
            const int b = 63 - std::countl_zero(w);
            out.push_back(static_cast<Exponent>(64 * i) + b);
            w &= ~(Word64{1} << b);
        }
    }
    return out;
}

Poly2 Poly2::with_flipped(Exponent i) const {
    if (i < 0) throw std::domain_error("Poly2::with_flipped: negative exponent");
    std::vector<Word64> w = words_;
    const auto idx = static_cast<std::size_t>(i / 64);
    if (w.size() <= idx) w.resize(idx + 1, 0);
    w[idx] ^= Word64{1} << (i % 64);
    return Poly2(std::move(w));
}

Poly2 Poly2::shifted_up(Exponent k) const {
    if (k < 0) return shifted_down(-k);
    if (is_zero() || k == 0) return *this;
    std::vector<Word64> w;
    xor_shifted(w, words_, static_cast<std::size_t>(k));
    return Poly2(std::move(w));
}

Poly2 Poly2::shifted_down(Exponent k) const {
    if (k < 0) return shifted_up(-k);
    if (is_zero() || k == 0) return *this;
    const auto word_off = static_cast<std::size_t>(k / 64);
    const unsigned bit_off = k % 64;
    if (word_off >= words_.size()) return {};
    std::vector<Word64> w(words_.size() - word_off, 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        Word64 v = words_[i + word_off] >> bit_off;
        if (bit_off && i + word_off + 1 < words_.size())
            v |= words_[i + word_off + 1] << (64 - bit_off);
        w[i] = v;
    }
    return Poly2(std::move(w));
}

Poly2 Poly2::low_part(Exponent k) const {
    if (k <= 0) return {};
    const auto full = static_cast<std::size_t>(k / 64);
    if (full >= words_.size()) return *this;
    std::vector<Word64> w(words_.begin(), words_.begin() + static_cast<std::ptrdiff_t>(full));
    if (const unsigned rem = k % 64; rem) w.push_back(words_[full] & ((Word64{1} << rem) - 1));
    return Poly2(std::move(w));
}

Poly2 Poly2::reversed(Exponent width) const {
    if (width <= 0 || is_zero()) return {};
    const Poly2 low = low_part(width);
    // Reverse whole words, then shift the padding away.
    const std::size_t nw = static_cast<std::size_t>((width + 63) / 64);
    std::vector<Word64> w(nw, 0);
    const auto& src = low.words_;
    for (std::size_t i = 0; i < src.size(); ++i) {
        Word64 v = src[i];
        Word64 r = 0;
        for (int b = 0; b < 64; ++b) {
            r = (r << 1) | (v & 1U);
            v >>= 1;
        }
        w[nw - 1 - i] = r;
    }
    return Poly2(std::move(w)).shifted_down(static_cast<Exponent>(64 * nw) - width);
}

Poly2 Poly2::parity_part(int parity) const {
    std::vector<Word64> w = words_;
    const Word64 mask = parity ? kOddBits : kEvenBits;
    for (auto& v : w) v &= mask;
    return Poly2(std::move(w));
}

Poly2 Poly2::square() const {
    std::vector<Word64> w(2 * words_.size(), 0);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        w[2 * i] = spread32(static_cast<std::uint32_t>(words_[i]));
        w[2 * i + 1] = spread32(static_cast<std::uint32_t>(words_[i] >> 32));
    }
    return Poly2(std::move(w));
}

Poly2 Poly2::derivative() const { return parity_part(1).shifted_down(1); }

bool Poly2::is_square() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word64 v) { return (v & kOddBits) == 0; });
}

Poly2 Poly2::sqrt() const {
    if (!is_square()) throw std::domain_error("Poly2::sqrt: polynomial is not a square");
    std::vector<Word64> w((words_.size() + 1) / 2, 0);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        const Word64 half = compress_even(words_[i]);
        w[i / 2] |= (i % 2) ? (half << 32) : half;
    }
    return Poly2(std::move(w));
}

Poly2& Poly2::operator+=(const Poly2& q) {
    if (q.words_.size() > words_.size()) words_.resize(q.words_.size(), 0);
    for (std::size_t i = 0; i < q.words_.size(); ++i) words_[i] ^= q.words_[i];
    trim();
    return *this;
}

std::strong_ordering operator<=>(const Poly2& p, const Poly2& q) noexcept {
    if (p.words_.size() != q.words_.size()) return p.words_.size() <=> q.words_.size();
    for (std::size_t i = p.words_.size(); i-- > 0;) {
        if (p.words_[i] != q.words_[i]) return p.words_[i] <=> q.words_[i];
    }
    return std::strong_ordering::equal;
}

Poly2 mul(const Poly2& p, const Poly2& q, const MulOptions& opts) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Word64> out(p.words_.size() + q.words_.size(), 0);
    mul_words(p.words_, q.words_, out.data(), std::max<std::size_t>(opts.karatsuba_threshold_words, 2));
    return Poly2(std::move(out));
}

Poly2 mul_schoolbook(const Poly2& p, const Poly2& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Word64> out(p.word_count() + q.word_count(), 0);
    schoolbook(p.words(), q.words(), out.data());
    return Poly2::from_words(std::move(out));
}

Poly2 pow(const Poly2& p, unsigned e) {
    Poly2 result = Poly2::one();
    Poly2 base = p;
    while (e) {
        if (e & 1U) result = result * base;
        e >>= 1;
        if (e) base = base.square();
    }
    return result;
}

DivMod divmod(const Poly2& p, const Poly2& q) {
    if (q.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
    if (p.is_zero() || p.degree() < q.degree()) return {Poly2{}, p};
    const Exponent dq = q.degree();
    std::vector<Word64> rem(p.words().begin(), p.words().end());
    std::vector<Word64> quot(static_cast<std::size_t>((p.degree() - dq) / 64) + 1, 0);
    for (Exponent d = p.degree(); d >= dq; --d) {
        const auto idx = static_cast<std::size_t>(d / 64);
        if (((rem[idx] >> (d % 64)) & 1U) == 0) continue;
        const Exponent shift = d - dq;
        quot[static_cast<std::size_t>(shift / 64)] |= Word64{1} << (shift % 64);
        xor_shifted(rem, q.words(), static_cast<std::size_t>(shift));
    }
    return {Poly2::from_words(std::move(quot)), Poly2::from_words(std::move(rem))};
}

Poly2 gcd(Poly2 p, Poly2 q) {
    while (!q.is_zero()) {
        Poly2 r = divmod(p, q).remainder;
        p = std::move(q);
        q = std::move(r);
    }
    return p;
}

std::string Poly2::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (Exponent e : exponents()) {
        if (!out.empty()) out += '+';
        if (e == 0)
            out += '1';
        else if (e == 1)
            out += 't';
        else
            out += "t^" + std::to_string(e);
    }
    return out;
}

Poly2 Poly2::parse(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    skip_ws();
    if (pos == text.size()) throw ParseError("empty polynomial", pos);
    {
        std::size_t probe = pos + 1;
        while (probe < text.size() && (text[probe] == ' ' || text[probe] == '\t')) ++probe;
        if (text[pos] == '0' && probe == text.size()) return {};
    }

    std::vector<Exponent> exps;
    while (true) {
        skip_ws();
        if (pos >= text.size()) throw ParseError("expected monomial", pos);
        const char c = text[pos];
        if (c == '1') {
            exps.push_back(0);
            ++pos;
        } else if (c == 't') {
            ++pos;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                const std::size_t start = pos;
                Exponent k = 0;
                while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
                    k = k * 10 + (text[pos] - '0');
                    if (k > (Exponent{1} << 40)) throw ParseError("exponent too large", start);
                    ++pos;
                }
                if (pos == start) throw ParseError("expected exponent digits after '^'", pos);
                exps.push_back(k);
            } else {
                exps.push_back(1);
            }
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", pos);
        }
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != '+') throw ParseError(std::string("expected '+' but found '") + text[pos] + "'", pos);
        ++pos;
    }
    return from_exponents(exps);
}

std::ostream& operator<<(std::ostream& os, const Poly2& p) { return os << p.to_string(); }

}  // namespace f2cf
