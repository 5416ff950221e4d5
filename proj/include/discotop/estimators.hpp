#pragma once

#include <string>
#include <utility>
#include <vector>

#include "discotop/sampled_function.hpp"

namespace disco {

enum class CodomainMetric { euclidean, sphere_geodesic };

// A discretized modulus value together with the refinement ladder that
// produced it. `value` is the estimate at the requested rho (ladder front);
// the ladder is nondecreasing in rho for a fixed sample. `method` records
// whether neighborhoods were scanned exhaustively or through sampler groups.
struct ModulusEstimate {
    double value = 0.0;
    double rho = 0.0;
    double separation = 0.0;
    std::vector<std::pair<double, double>> ladder; // (rho, value), decreasing rho
    std::string method;
};

// Discretized modulus of discontinuity: max over sample points x of
// diam(g(B_rho(x))). Throws std::invalid_argument on an empty sample.
ModulusEstimate delta_hat(const SampledFunction& g, double rho, CodomainMetric metric,
                          int ladder_steps = 4);

// Normalized difference map on sampled pairs (r must be 2):
// (f(x)-f(y)) / ||f(x)-f(y)||. Throws NotInjective naming the pair when
// f identifies its endpoints.
std::vector<std::vector<double>> phi_f(const SampledFunction& f, const ConfigSample& pairs);

// Exhaustive Conf_2 sample: all ordered pairs at domain distance >= sep.
// Throws std::invalid_argument when the count would exceed `cap`.
ConfigSample conf2_sample_exhaustive(const SampledFunction& f, double sep,
                                     std::size_t cap = 250000);

// Deterministic hot-spot sampler for Conf_2: clusters around flagged loci
// paired with image-nearest far partners. Every group sits inside a
// pair-metric rho-ball, so group diameters are valid local estimates.
ConfigSample conf2_sample_hotspots(const SampledFunction& f, double rho, double sep,
                                   const SamplerBudget& budget = {});

// Scale-invariant modulus estimate: delta-hat of phi_f over a Conf_2 sample,
// geodesic metric on the unit sphere of the codomain. Requires sep >= 2*rho.
// Passing a ConfigSample overrides the automatic choice between the
// exhaustive and hot-spot samplers.
ModulusEstimate alpha_hat(const SampledFunction& f, double rho, double sep,
                          const ConfigSample* configs = nullptr, int ladder_steps = 4);

// Centered evaluation tuple (f(x_i) - mean_j f(x_j))_i. Requires a simplicial
// domain and pairwise disjoint carrier faces (InvalidConfiguration otherwise).
CenteredTuple conf_r_map(const SampledFunction& f, const std::vector<std::size_t>& tuple);

// Exhaustive deleted-product sample: all ordered r-tuples with pairwise
// disjoint carriers. Throws std::invalid_argument above `cap`.
ConfigSample conf_r_sample_exhaustive(const SampledFunction& f, int r,
                                      std::size_t cap = 250000);

// Hot-spot sampler for deleted products; partners are chosen image-nearest
// among disjoint-carrier points.
ConfigSample conf_r_sample_hotspots(const SampledFunction& f, int r, double rho,
                                    const SamplerBudget& budget = {});

// r-fold scale-invariant modulus estimate: delta-hat of the normalized
// centered-tuple map over a deleted-product sample, geodesic metric on the
// unit sphere of W_r. Throws NotAlmostRInjective when a sampled tuple is
// collapsed below 1e-12.
ModulusEstimate alpha_r_hat(const SampledFunction& f, int r, double rho,
                            const ConfigSample* configs = nullptr, int ladder_steps = 4);

// min over configurations of (1/r) * sqrt(sum_{i,j} ||f(x_i)-f(x_j)||^2).
double kappa_r(const SampledFunction& f, int r, const ConfigSample& configs);

// min over the sample of ||g(x)||.
double kappa_inf(const SampledFunction& g);

// Geodesic distance between unit vectors (arccos of the clamped inner
// product); one-dimensional codomains degenerate to the two-point sphere
// where distinct signs are at distance pi exactly.
double sphere_geodesic_distance(const std::vector<double>& u, const std::vector<double>& v);

} // namespace disco
