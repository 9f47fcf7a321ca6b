#include "f2cf/gf2_matrix.hpp"

#include <bit>
#include <utility>

namespace f2cf {

bool BitVector::none() const noexcept {
    for (auto w : words_)
        if (w) return false;
    return true;
}

std::size_t BitVector::count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

BitVector BitMatrix::apply(const BitVector& x) const {
    BitVector out(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        bool acc = false;
        for (std::size_t c = 0; c < cols_; ++c) acc ^= rows_[r].get(c) && x.get(c);
        out.set(r, acc);
    }
    return out;
}

namespace {

struct Echelon {
    std::vector<BitVector> rows;           // reduced rows, one per pivot
    std::vector<std::size_t> pivot_cols;   // pivot column of rows[i]
};

Echelon reduce(std::vector<BitVector> rows, std::size_t cols) {
    Echelon e;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && !rows[p].get(c)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[rank], rows[p]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r].get(c)) rows[r] ^= rows[rank];
        e.pivot_cols.push_back(c);
        ++rank;
    }
    rows.resize(rank);
    e.rows = std::move(rows);
    return e;
}

}  // namespace

std::size_t BitMatrix::rank() const { return reduce(rows_, cols_).pivot_cols.size(); }

std::vector<BitVector> BitMatrix::null_space() const {
    const Echelon e = reduce(rows_, cols_);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;

    std::vector<BitVector> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        BitVector v(cols_);
        v.set(free);
        for (std::size_t i = 0; i < e.rows.size(); ++i)
            if (e.rows[i].get(free)) v.set(e.pivot_cols[i]);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace f2cf
