#pragma once

#include <vector>

#include "discotop/cell_complex.hpp"
#include "discotop/gf2.hpp"
#include "discotop/simplicial_complex.hpp"

namespace disco {

// Chain complex over the two-element field. boundaries[k] maps k-chains to
// (k-1)-chains (rows = cells of dim k-1, cols = cells of dim k); the dim-0
// slot is an empty placeholder.
struct ChainComplex {
    std::vector<std::size_t> cell_counts; // per dimension 0..top
    std::vector<BitMatrix> boundaries;    // boundaries[0] unused

    int dim() const { return static_cast<int>(cell_counts.size()) - 1; }
    long long euler_characteristic() const;

    // Consecutive boundary matrices compose to zero and shapes agree.
    void validate() const;
};

ChainComplex chain_complex(const SimplicialComplex& K);
ChainComplex chain_complex(const CellComplex& X);

} // namespace disco
