#include "discotop/chain_complex.hpp"

#include "discotop/errors.hpp"

namespace disco {

long long ChainComplex::euler_characteristic() const {
    long long chi = 0;
    for (std::size_t d = 0; d < cell_counts.size(); ++d)
        chi += (d % 2 == 0 ? 1LL : -1LL) * static_cast<long long>(cell_counts[d]);
    return chi;
}

void ChainComplex::validate() const {
    if (boundaries.size() != cell_counts.size())
        throw MalformedComplex("chain complex: boundary count mismatch");
    for (int k = 1; k <= dim(); ++k) {
        const auto& b = boundaries[static_cast<std::size_t>(k)];
        if (b.rows() != cell_counts[static_cast<std::size_t>(k - 1)] ||
            b.cols() != cell_counts[static_cast<std::size_t>(k)])
            throw MalformedComplex("chain complex: boundary shape mismatch");
        if (k >= 2) {
            const auto prod =
                BitMatrix::multiply(boundaries[static_cast<std::size_t>(k - 1)], b);
            if (!prod.is_zero())
                throw MalformedComplex("chain complex: boundary of boundary nonzero");
        }
    }
}

ChainComplex chain_complex(const SimplicialComplex& K) {
    ChainComplex C;
    const int top = K.dim();
    if (top < 0) return C;
    C.cell_counts.resize(static_cast<std::size_t>(top) + 1);
    C.boundaries.resize(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d)
        C.cell_counts[static_cast<std::size_t>(d)] = K.face_count(d);
    for (int d = 1; d <= top; ++d) {
        BitMatrix b(K.face_count(d - 1), K.face_count(d));
        const auto& block = K.faces(d);
        for (std::size_t c = 0; c < block.size(); ++c) {
            const Face& f = block[c];
            for (std::size_t k = 0; k < f.size(); ++k) {
                Face sub;
                sub.reserve(f.size() - 1);
                for (std::size_t i = 0; i < f.size(); ++i)
                    if (i != k) sub.push_back(f[i]);
                if (!K.has_face(sub))
                    throw MalformedComplex("chain_complex: input not downward closed");
                b.set(K.face_index(sub), c);
            }
        }
        C.boundaries[static_cast<std::size_t>(d)] = std::move(b);
    }
    return C;
}

ChainComplex chain_complex(const CellComplex& X) {
    X.validate();
    ChainComplex C;
    const int top = X.dim();
    if (top < 0) return C;
    C.cell_counts.resize(static_cast<std::size_t>(top) + 1);
    C.boundaries.resize(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d)
        C.cell_counts[static_cast<std::size_t>(d)] = X.cell_count(d);
    for (int d = 1; d <= top; ++d) {
        BitMatrix b(X.cell_count(d - 1), X.cell_count(d));
        const auto& bnds = X.boundary_by_dim[static_cast<std::size_t>(d)];
        for (std::size_t c = 0; c < bnds.size(); ++c) {
            // A facet repeated an even number of times cancels over GF(2).
            std::size_t i = 0;
            while (i < bnds[c].size()) {
                std::size_t j = i;
                while (j < bnds[c].size() && bnds[c][j] == bnds[c][i]) ++j;
                if ((j - i) % 2 == 1)
                    b.set(static_cast<std::size_t>(bnds[c][i]), c);
                i = j;
            }
        }
        C.boundaries[static_cast<std::size_t>(d)] = std::move(b);
    }
    return C;
}

} // namespace disco
