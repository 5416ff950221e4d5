#pragma once

#include "discotop/metric_sample.hpp"
#include "discotop/simplicial_complex.hpp"

namespace disco {

// Diameter threshold with the convention carried alongside: weak keeps faces
// with diam <= value, strict with diam < value. Comparisons are made on the
// stored table doubles exactly.
struct VRThreshold {
    enum class Convention { weak, strict };
    double value = 0.0;
    Convention convention = Convention::weak;
};

// Clique complex of the threshold graph, truncated at max_dim: faces are the
// vertex subsets of size <= max_dim + 1 whose pairwise distances all pass
// the threshold.
SimplicialComplex vr_complex(const FiniteMetricSample& M, VRThreshold t, int max_dim);

} // namespace disco
