#pragma once

#include <vector>

#include "discotop/chain_complex.hpp"

namespace disco {

// Per-dimension homology ranks over the two-element field;
// length = top dimension + 1.
using BettiVector = std::vector<long>;

// b_k = dim ker d_k - rank d_{k+1}, by bit-matrix elimination.
// Throws MalformedComplex on inconsistent boundary shapes.
BettiVector betti_numbers(const ChainComplex& C);

// True iff the Betti vector matches that of S^n over the two-element field
// (S^0 has b_0 = 2); trailing dimensions beyond the complex count as zero.
bool is_homology_n_sphere(const ChainComplex& C, int n);
bool is_homology_n_sphere(const BettiVector& b, int n);

} // namespace disco
