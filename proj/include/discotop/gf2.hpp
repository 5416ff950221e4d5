#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace disco {

// Dense bit-packed matrix over the two-element field. Rows are arrays of
// 64-bit words; elimination works word-at-a-time.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void set(std::size_t i, std::size_t j, bool v = true) {
        const std::uint64_t mask = 1ULL << (j & 63);
        if (v)
            bits_[i * words_ + (j >> 6)] |= mask;
        else
            bits_[i * words_ + (j >> 6)] &= ~mask;
    }

    bool get(std::size_t i, std::size_t j) const {
        return (bits_[i * words_ + (j >> 6)] >> (j & 63)) & 1ULL;
    }

    void xor_row(std::size_t dst, std::size_t src) {
        std::uint64_t* d = bits_.data() + dst * words_;
        const std::uint64_t* s = bits_.data() + src * words_;
        for (std::size_t w = 0; w < words_; ++w) d[w] ^= s[w];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        std::uint64_t* pa = bits_.data() + a * words_;
        std::uint64_t* pb = bits_.data() + b * words_;
        for (std::size_t w = 0; w < words_; ++w) std::swap(pa[w], pb[w]);
    }

    bool row_empty(std::size_t i) const {
        const std::uint64_t* p = bits_.data() + i * words_;
        for (std::size_t w = 0; w < words_; ++w)
            if (p[w]) return false;
        return true;
    }

    bool is_zero() const {
        for (std::uint64_t w : bits_)
            if (w) return false;
        return true;
    }

    // Rank by row echelon on a scratch copy.
    std::size_t rank() const;

    // Product over the two-element field (for ∂∘∂ = 0 checks).
    static BitMatrix multiply(const BitMatrix& a, const BitMatrix& b);

    bool operator==(const BitMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<std::uint64_t> bits_;
};

} // namespace disco
