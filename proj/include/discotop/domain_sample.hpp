#pragma once

#include <cstdint>
#include <vector>

#include "discotop/metric_sample.hpp"
#include "discotop/simplicial_complex.hpp"

namespace disco {

enum class DomainKind {
    euclidean,      // points are Euclidean coordinates
    sphere_geodesic, // points are unit vectors, distance arccos<x,y>
    barycentric,    // points are barycentric vectors over a complex's vertices
    table           // stored distance table (small samples only)
};

// Finite sample of a metric domain. Distances are derived from coordinates
// (so large grids need no quadratic table); simplicial domains carry the
// minimal face of each point so disjointness certificates never depend on
// floating-point coordinates.
struct DomainSample {
    DomainKind kind = DomainKind::euclidean;
    std::vector<std::vector<double>> points;
    std::vector<Face> carrier; // per-point minimal face; empty unless simplicial
    std::vector<double> table; // kind == table only

    std::size_t size() const { return points.empty() ? carrier.size() : points.size(); }
    double distance(std::size_t i, std::size_t j) const;
    bool simplicial() const { return !carrier.empty(); }
    bool carriers_disjoint(std::size_t i, std::size_t j) const;

    static DomainSample from_metric_sample(const FiniteMetricSample& m);

    // Max over points of the nearest-neighbor distance; the resolution
    // estimate used for rho_dom. Quadratic scan, so capped.
    double resolution(std::size_t cap = 20000) const;
};

// Barycentric grid of denominator q over every face of K: for each face, the
// lattice points strictly interior to it (all coordinates positive) plus the
// vertices. Carriers are the supporting faces.
DomainSample barycentric_grid(const SimplicialComplex& K, int q);

// Uniform grid on [0,1] (euclidean, 1-D), n+1 points.
DomainSample interval_grid(int n);

} // namespace disco
