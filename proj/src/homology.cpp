#include "discotop/homology.hpp"

#include <stdexcept>

#include "discotop/errors.hpp"

namespace disco {

BettiVector betti_numbers(const ChainComplex& C) {
    const int top = C.dim();
    BettiVector betti(static_cast<std::size_t>(top < 0 ? 0 : top + 1), 0);
    if (top < 0) return betti;
    if (C.boundaries.size() != C.cell_counts.size())
        throw MalformedComplex("betti_numbers: boundary count mismatch");

    std::vector<std::size_t> rank(static_cast<std::size_t>(top) + 2, 0);
    for (int k = 1; k <= top; ++k) {
        const auto& b = C.boundaries[static_cast<std::size_t>(k)];
        if (b.rows() != C.cell_counts[static_cast<std::size_t>(k - 1)] ||
            b.cols() != C.cell_counts[static_cast<std::size_t>(k)])
            throw MalformedComplex("betti_numbers: boundary shape mismatch");
        rank[static_cast<std::size_t>(k)] = b.rank();
    }
    for (int k = 0; k <= top; ++k) {
        const long n_k = static_cast<long>(C.cell_counts[static_cast<std::size_t>(k)]);
        const long ker = n_k - static_cast<long>(rank[static_cast<std::size_t>(k)]);
        betti[static_cast<std::size_t>(k)] =
            ker - static_cast<long>(rank[static_cast<std::size_t>(k + 1)]);
    }
    return betti;
}

bool is_homology_n_sphere(const BettiVector& b, int n) {
    if (n < 0) throw std::invalid_argument("is_homology_n_sphere: n < 0");
    const int top = static_cast<int>(b.size()) - 1;
    const int hi = top > n ? top : n;
    for (int k = 0; k <= hi; ++k) {
        const long got = k <= top ? b[static_cast<std::size_t>(k)] : 0;
        long want = 0;
        if (k == 0) want = (n == 0) ? 2 : 1;
        if (k == n && n > 0) want = 1;
        if (got != want) return false;
    }
    return true;
}

bool is_homology_n_sphere(const ChainComplex& C, int n) {
    return is_homology_n_sphere(betti_numbers(C), n);
}

} // namespace disco
