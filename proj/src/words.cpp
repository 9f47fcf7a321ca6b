#include "f2cf/words.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace f2cf {

char to_char(Letter l) noexcept { return l == Letter::A ? 'a' : 'b'; }

Word Word::parse(std::string_view text) {
    std::vector<Letter> out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case 'a': out.push_back(Letter::A); break;
            case 'b': out.push_back(Letter::B); break;
            default:
                throw std::invalid_argument("word: unexpected character '" + std::string(1, text[i]) +
                                            "' at position " + std::to_string(i));
        }
    }
    return Word(std::move(out));
}

Word Word::drop_first() const {
    if (letters_.size() <= 1) return {};
    return Word({letters_.begin() + 1, letters_.end()});
}

Word Word::drop_last() const {
    if (letters_.size() <= 1) return {};
    return Word({letters_.begin(), letters_.end() - 1});
}

Word Word::reversed() const { return Word({letters_.rbegin(), letters_.rend()}); }

Word Word::prefix(std::size_t n) const {
    n = std::min(n, letters_.size());
    return Word({letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(n)});
}

Word& Word::operator+=(const Word& other) {
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
    return *this;
}

Word& Word::operator+=(Letter l) {
    letters_.push_back(l);
    return *this;
}

std::string Word::to_string() const {
    std::string s;
    s.reserve(letters_.size());
    for (Letter l : letters_) s.push_back(to_char(l));
    return s;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.to_string(); }

Morphism::Morphism(Word a, Word b) : image_a(std::move(a)), image_b(std::move(b)) {
    if (image_a.empty() || image_b.empty()) throw std::invalid_argument("morphism: images must be nonempty");
}

Morphism Morphism::parse(std::string_view raw) {
    std::string compact;
    for (char c : raw)
        if (c != ' ' && c != '\t') compact += c;
    const std::string_view text = compact;
    auto fail = [&](const std::string& why) -> Morphism {
        throw std::invalid_argument("morphism \"" + std::string(raw) + "\": " + why +
                                    " (expected form a->ab,b->aa)");
    };
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) return fail("missing ','");
    Word img[2];
    bool seen[2] = {false, false};
    for (std::string_view part : {text.substr(0, comma), text.substr(comma + 1)}) {
        if (part.size() < 4 || part.substr(1, 2) != "->") return fail("malformed rule '" + std::string(part) + "'");
        int idx = part[0] == 'a' ? 0 : part[0] == 'b' ? 1 : -1;
        if (idx < 0) return fail("rule must start with a or b");
        if (seen[idx]) return fail("letter given twice");
        seen[idx] = true;
        img[idx] = Word::parse(part.substr(3));
    }
    return Morphism(img[0], img[1]);
}

Word Morphism::apply(const Word& w) const {
    Word out;
    for (Letter l : w) out += image(l);
    return out;
}

bool Morphism::is_prolongable() const noexcept { return image_a.size() >= 2 && image_a[0] == Letter::A; }

Word Morphism::fixed_point_prefix(std::size_t min_length) const {
    if (!is_prolongable())
        throw std::invalid_argument("morphism " + to_string() + " is not prolongable on a");
    Word w = Word::parse("a");
    while (w.size() < min_length) w = apply(w);
    return w;
}

std::string Morphism::to_string() const { return "a->" + image_a.to_string() + ",b->" + image_b.to_string(); }

Morphism period_doubling() { return Morphism(Word::parse("ab"), Word::parse("aa")); }

Morphism thue_morse() { return Morphism(Word::parse("ab"), Word::parse("ba")); }

Letter epsilon(unsigned n) noexcept { return n % 2 == 0 ? Letter::A : Letter::B; }

Word w_n(unsigned n) {
    Word w;
    for (unsigned k = 0; k < n; ++k) {
        Word next = w;
        next += epsilon(k);
        next += w;
        w = std::move(next);
    }
    return w;
}

}  // namespace f2cf
