#include "discotop/gf2.hpp"

namespace disco {

std::size_t BitMatrix::rank() const {
    BitMatrix m = *this;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols_ && r < m.rows_; ++col) {
        std::size_t pivot = r;
        while (pivot < m.rows_ && !m.get(pivot, col)) ++pivot;
        if (pivot == m.rows_) continue;
        m.swap_rows(r, pivot);
        for (std::size_t i = pivot + 1; i < m.rows_; ++i)
            if (m.get(i, col)) m.xor_row(i, r);
        ++r;
    }
    return r;
}

BitMatrix BitMatrix::multiply(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (!a.get(i, k)) continue;
            std::uint64_t* d = c.bits_.data() + i * c.words_;
            const std::uint64_t* s = b.bits_.data() + k * b.words_;
            for (std::size_t w = 0; w < c.words_; ++w) d[w] ^= s[w];
        }
    }
    return c;
}

} // namespace disco
