#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace disco {

// Known value/bounds for one constant, with one provenance tag per
// contributing fact. No upper bounds are invented: `upper` stays empty
// unless an exact value pins it.
struct ConstantValue {
    std::optional<double> exact;
    double lower = 0.0;
    std::optional<double> upper;
    std::vector<std::string> provenance;
};

// arccos(-1 / (n+1)): geodesic diameter of the vertex set of a regular
// (n+1)-simplex inscribed in S^n.
double r_constant(int n);

// The odd-map scale constants c_{n,k} (infimal r admitting an odd map from
// S^k to the Vietoris-Rips complex of S^n at scale r). Exact on the known
// families (k = n, k = n+1, k = n+2, and all k for the circle); otherwise a
// lower bound combining monotonicity in k with the covering-radius bound
// pi - 2*cov(n,k). Requires k >= n.
ConstantValue c_constant(int n, int k);

// Upper bound on the k-point covering radius of RP^n (quotient metric).
// n = 1 is the analytic optimum pi/(2k) of evenly spaced points on the
// circle of circumference pi; n >= 2 runs deterministic farthest-point
// seeding plus bounded local relaxation over a seeded projective sample and
// reports the best covering radius found (running minimum over <= k centers,
// measured on the sample). Any upper bound here yields a valid, possibly
// weaker, lower bound pi - 2*cov for c_{n,k}.
double cov_upper(int n, int k, int budget = 2000, std::uint64_t seed = 17);

// pi - 2 * cov_upper(n, k).
double covering_lower_bound(int n, int k, int budget = 2000, std::uint64_t seed = 17);

// True iff r = p^a for a prime p. Requires r >= 2.
bool is_prime_power(int r);

} // namespace disco
