#pragma once

#include <cstdint>
#include <vector>

#include "discotop/simplicial_complex.hpp"

namespace disco {

// Product-of-simplices cell complex, as produced by r-fold deleted products.
// A cell is an ordered r-tuple of base faces (stored as indices into
// `base_faces`); its dimension is the sum of the factor dimensions. Boundary
// incidence is cellular (factorwise facets; signs are irrelevant over the
// two-element field). Immutable after construction.
struct CellComplex {
    int arity = 0; // r
    std::vector<Face> base_faces; // id -> face of the base complex
    // cells_by_dim[d][c] = factor tuple (base face ids)
    std::vector<std::vector<std::vector<int>>> cells_by_dim;
    // boundary_by_dim[d][c] = ids of incident (d-1)-cells
    std::vector<std::vector<std::vector<int>>> boundary_by_dim;
    bool vacuous = false; // fewer than r vertices in the base complex

    int dim() const { return static_cast<int>(cells_by_dim.size()) - 1; }
    std::size_t cell_count(int d) const {
        if (d < 0 || d > dim()) return 0;
        return cells_by_dim[static_cast<std::size_t>(d)].size();
    }
    std::size_t cell_count() const;

    // Structural checks: factor disjointness, dimension bookkeeping,
    // boundary shapes. Throws MalformedComplex.
    void validate() const;

    // Coordinate-permutation action: returns, per dimension, the cell index
    // map induced by `perm` (perm[i] = where coordinate i goes).
    std::vector<std::vector<int>> permutation_action(const std::vector<int>& perm) const;
};

// r-fold deleted product: cells are ordered r-tuples of nonempty pairwise
// vertex-disjoint faces of K. A base complex with fewer than r vertices
// yields an empty complex with `vacuous` set.
CellComplex deleted_product(const SimplicialComplex& K, int r);

} // namespace disco
