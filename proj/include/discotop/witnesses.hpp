#pragma once

#include <cstdint>
#include <string>

#include "discotop/sampled_function.hpp"

namespace disco {

enum class WitnessKind {
    digit_interleave,
    k5_jump,
    tverberg_one_point,
    equatorial_odd,
    monotone_step,
    nonmonotone_step
};

struct WitnessSpec {
    WitnessKind kind = WitnessKind::digit_interleave;
    int bits = 8;          // digit_interleave
    int grid = 256;        // samples per edge / grid side
    double offset = 0.01;  // k5 jump displacement
    int k = 2, n = 1;      // equatorial_odd sphere dims
    std::uint64_t seed = 7;
};

// A verified witness: the construction ran its own verification scan before
// returning. For almost-injective kinds, `min_disjoint_image_distance` is the
// measured margin over all sampled disjoint-carrier pairs.
struct WitnessResult {
    SampledFunction fn;
    WitnessSpec spec;
    bool verified = false;
    double min_disjoint_image_distance = 0.0;
    std::string expected_bound_citation;
};

// Digit-interleaved injection of the dyadic grid on [0,1)^2 into [0,1);
// discontinuous at every point at scale 2^-bits. Requires grid == 2^bits.
SampledFunction digit_interleave(int bits, int grid);

// Straight-line drawing of the complete graph on five vertices (5th roots of
// unity) with each pentagram crossing resolved by displacing one diagonal
// perpendicularly by `offset` over a half-open parameter interval around the
// crossing preimage. Verifies almost-injectivity on the sample; hot spots are
// the ten jump parameters. Requires 0 < offset < 0.05.
SampledFunction k5_jump_drawing(double offset, int grid);

// Affine vertex map 0,1,2 on the 2-simplex with the midpoint of the {0,2}
// edge re-assigned from 1 to 0.95 (one-point jump keeping values off f(v1)).
// Verifies almost-2-injectivity on the sample. Requires grid >= 10.
SampledFunction tverberg_one_point(int grid);

// Odd function S^k -> S^n (n < k): normalize the first n+1 coordinates where
// nonzero; a fixed odd assignment on the singular subsphere. Oddness is exact
// on the sample (points come in exact antipodal pairs).
SampledFunction equatorial_odd(int k, int n, int grid, std::uint64_t seed);

// Injective step functions on [0,1]: monotone keeps branch order
// (x -> x + [x >= 1/2]), nonmonotone swaps the branch levels
// (x -> x + 1.5*[x < 1/2]).
SampledFunction step_witness(bool monotone, int grid);

WitnessResult build_witness(const WitnessSpec& spec);

// CSV evaluation table (domain coordinates -> value coordinates) plus a JSON
// sidecar with hot spots and verification status.
void export_witness(const WitnessResult& w, const std::string& csv_path,
                    const std::string& sidecar_path);

} // namespace disco
