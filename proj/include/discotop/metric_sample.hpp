#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace disco {

enum class MetricKind { sphere_geodesic, projective_quotient, euclidean, abstract_table };

// Finite point set with a stored symmetric pairwise-distance table (radians
// for the geodesic kinds). Coordinates are unit vectors for spheres and
// representatives for projective points; abstract samples may omit them.
struct FiniteMetricSample {
    MetricKind kind = MetricKind::abstract_table;
    std::vector<std::vector<double>> points;
    std::vector<double> dist; // row-major n x n

    std::size_t size() const { return points.empty() ? implied_size() : points.size(); }
    double operator()(std::size_t i, std::size_t j) const { return dist[i * size() + j]; }

    // d(x,x) = 0, symmetry, triangle inequality (tolerance 1e-9), and the
    // kind-specific diameter caps (pi for spheres, pi/2 for projective).
    void validate(double tol = 1e-9) const;

    void write_csv(const std::string& points_path, const std::string& dist_path) const;

private:
    std::size_t implied_size() const;
};

// Builds the distance table for explicit points under the given kind
// (arccos<x,y> for spheres, arccos|<x,y>| for projective, Euclidean
// otherwise).
FiniteMetricSample metric_sample_from_points(MetricKind kind,
                                             std::vector<std::vector<double>> points);

// n equally spaced points on the circle, geodesic distances 2*pi*k/n.
FiniteMetricSample ngon_sample(int n);

// `count` points on S^n from normalized Gaussian draws; distances
// arccos<x,y>. Deterministic per seed. Requires count >= n+2.
FiniteMetricSample sphere_sample(int n, int count, std::uint64_t seed);

// Projective quotient of sphere_sample: d = min over sign flips, i.e.
// arccos(|<x,y>|); diameter <= pi/2.
FiniteMetricSample projective_sample(int n, int count, std::uint64_t seed);

} // namespace disco
