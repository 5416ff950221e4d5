#pragma once

#include <cstdint>
#include <vector>

#include "discotop/domain_sample.hpp"

namespace disco {

// Finite evaluation table of a (possibly discontinuous) function into R^d,
// with resolution metadata and discontinuity hot-spot hints exported by
// witness constructions.
struct SampledFunction {
    DomainSample domain;
    std::vector<std::vector<double>> values; // one vector in R^d per domain point
    double rho_dom = 0.0;                    // covering-radius estimate of the sample
    std::vector<std::size_t> hot_spots;      // flagged discontinuity loci (indices)

    std::size_t size() const { return values.size(); }
    std::size_t codomain_dim() const { return values.empty() ? 0 : values[0].size(); }

    // values length equals domain size, rho_dom > 0.
    void validate() const;
};

// Element of W_r^{(+)d}: r vectors in R^d summing to zero (within 1e-12 per
// component by construction).
struct CenteredTuple {
    std::vector<std::vector<double>> parts;
    double norm() const;
    std::vector<double> flattened() const;
};

// Finite sample of configurations: r-tuples of domain indices with distinct
// entries (plain Conf_2) or entries in pairwise disjoint faces (deleted
// products; `disjoint_certified`). The pair metric on tuples is the max over
// coordinates of domain distances. `groups`, when present, list tuple ids
// gathered by the hot-spot sampler; each group's first entry is its anchor
// and every member lies within pair distance `group_rho` of it.
struct ConfigSample {
    int r = 2;
    std::vector<std::vector<std::size_t>> tuples;
    double separation = 0.0;
    bool disjoint_certified = false;
    std::vector<std::vector<std::size_t>> groups;
    double group_rho = 0.0;

    double pair_distance(const DomainSample& dom, std::size_t a, std::size_t b) const;
    void validate(const DomainSample& dom) const;
    void write_csv(const std::string& path) const;
};

// Knobs for the deterministic hot-spot configuration sampler.
struct SamplerBudget {
    std::size_t max_anchors = 256;
    std::size_t max_cluster = 32;
    std::size_t partners_per_anchor = 48;
};

} // namespace disco
