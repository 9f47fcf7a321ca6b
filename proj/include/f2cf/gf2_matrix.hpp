#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace f2cf {

/// Dense bit vector, used for matrix rows and null-space vectors.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const noexcept { return size_; }
    bool get(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1U; }
    void set(std::size_t i, bool v = true) noexcept {
        const std::uint64_t m = std::uint64_t{1} << (i % 64);
        if (v)
            words_[i / 64] |= m;
        else
            words_[i / 64] &= ~m;
    }
    void flip(std::size_t i) noexcept { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
    BitVector& operator^=(const BitVector& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    bool none() const noexcept;
    std::size_t count() const noexcept;

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Row-major dense matrix over GF(2).
class BitMatrix {
public:
    BitMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    bool get(std::size_t r, std::size_t c) const noexcept { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v = true) noexcept { rows_[r].set(c, v); }
    const BitVector& row(std::size_t r) const noexcept { return rows_[r]; }

    /// M * x over GF(2).
    BitVector apply(const BitVector& x) const;

    /// Basis of {x : M x = 0}, one vector per free column of the reduced echelon form.
    std::vector<BitVector> null_space() const;
    std::size_t rank() const;

private:
    std::size_t cols_;
    std::vector<BitVector> rows_;
};

}  // namespace f2cf
