#pragma once

#include <cstdint>

#include "discotop/bound_oracle.hpp"
#include "discotop/estimators.hpp"
#include "discotop/report.hpp"
#include "discotop/witnesses.hpp"

namespace disco {

// Default estimator parameters per witness kind; the same measurement the
// CLI, the tests, and the acceptance suite run. When `configs_out` is given
// and the measurement samples configurations, the sample used is copied out
// (for CSV export and inspection).
ModulusEstimate measure_witness_modulus(const WitnessResult& w,
                                        ConfigSample* configs_out = nullptr);

// Random almost-2-injective test function on the 2-simplex: a seeded affine
// map into R^2 plus a per-region jump (regions = nearest of a few seeded
// sites). Used by the lemma suite.
SampledFunction random_patch_function(int q, std::uint64_t seed);

Report vkf_experiment(int d, int grid = 400, double offset = 0.01);
Report tverberg_experiment(int r, int d, int grid = 40);
Report sphere_homology_experiment(int d);
Report lemma_suite_experiment(std::uint64_t seed, int count = 100, int q = 6,
                              std::size_t random_pairs = 100000);
Report constants_table_report(int n, int k_max);
Report bound_report(const Scenario& s);

} // namespace disco
