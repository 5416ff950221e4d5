#include "discotop/metric_sample.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "discotop/errors.hpp"
#include "discotop/rng.hpp"

namespace disco {

namespace {

double clamped_acos(double x) {
    if (x >= 1.0) return 0.0;
    if (x <= -1.0) return std::numbers::pi;
    return std::acos(x);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace

std::size_t FiniteMetricSample::implied_size() const {
    std::size_t n = 0;
    while (n * n < dist.size()) ++n;
    return n;
}

void FiniteMetricSample::validate(double tol) const {
    const std::size_t n = size();
    if (dist.size() != n * n) throw std::invalid_argument("metric sample: table size mismatch");
    const double cap = kind == MetricKind::sphere_geodesic     ? std::numbers::pi
                       : kind == MetricKind::projective_quotient ? std::numbers::pi / 2
                                                                 : -1.0;
    for (std::size_t i = 0; i < n; ++i) {
        if ((*this)(i, i) != 0.0)
            throw std::invalid_argument("metric sample: nonzero self-distance");
        for (std::size_t j = 0; j < n; ++j) {
            const double d = (*this)(i, j);
            if (d < 0.0) throw std::invalid_argument("metric sample: negative distance");
            if (d != (*this)(j, i)) throw std::invalid_argument("metric sample: asymmetric");
            if (cap > 0.0 && d > cap + tol)
                throw std::invalid_argument("metric sample: distance above kind cap");
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if ((*this)(i, j) > (*this)(i, k) + (*this)(k, j) + tol)
                    throw std::invalid_argument("metric sample: triangle inequality fails");
}

void FiniteMetricSample::write_csv(const std::string& points_path,
                                   const std::string& dist_path) const {
    std::ofstream ps(points_path);
    if (!ps) throw std::runtime_error("cannot write " + points_path);
    ps << "index";
    const std::size_t dim = points.empty() ? 0 : points[0].size();
    for (std::size_t c = 0; c < dim; ++c) ps << ",x" << c;
    ps << "\n";
    ps.precision(17);
    for (std::size_t i = 0; i < points.size(); ++i) {
        ps << i;
        for (double v : points[i]) ps << "," << v;
        ps << "\n";
    }
    std::ofstream ds(dist_path);
    if (!ds) throw std::runtime_error("cannot write " + dist_path);
    ds.precision(17);
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) ds << (j ? "," : "") << (*this)(i, j);
        ds << "\n";
    }
}

FiniteMetricSample metric_sample_from_points(MetricKind kind,
                                             std::vector<std::vector<double>> points) {
    FiniteMetricSample s;
    s.kind = kind;
    s.points = std::move(points);
    const std::size_t m = s.points.size();
    s.dist.assign(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            double d = 0.0;
            switch (kind) {
            case MetricKind::sphere_geodesic:
                d = clamped_acos(dot(s.points[i], s.points[j]));
                break;
            case MetricKind::projective_quotient:
                d = clamped_acos(std::fabs(dot(s.points[i], s.points[j])));
                break;
            default: {
                double acc = 0.0;
                for (std::size_t c = 0; c < s.points[i].size(); ++c) {
                    const double t = s.points[i][c] - s.points[j][c];
                    acc += t * t;
                }
                d = std::sqrt(acc);
                break;
            }
            }
            s.dist[i * m + j] = d;
            s.dist[j * m + i] = d;
        }
    return s;
}

FiniteMetricSample ngon_sample(int n) {
    if (n < 3) throw std::invalid_argument("ngon_sample: n < 3");
    FiniteMetricSample s;
    s.kind = MetricKind::sphere_geodesic;
    const std::size_t m = static_cast<std::size_t>(n);
    s.points.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double a = (2.0 * std::numbers::pi * static_cast<double>(i)) / n;
        s.points[i] = {std::cos(a), std::sin(a)};
    }
    s.dist.assign(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            std::size_t k = i > j ? i - j : j - i;
            if (k > m - k) k = m - k;
            s.dist[i * m + j] = (2.0 * std::numbers::pi * static_cast<double>(k)) / n;
        }
    return s;
}

FiniteMetricSample sphere_sample(int n, int count, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("sphere_sample: n < 0");
    if (count < n + 2) throw std::invalid_argument("sphere_sample: count < n + 2");
    CounterRng rng(seed);
    const std::size_t m = static_cast<std::size_t>(count);
    const std::size_t dim = static_cast<std::size_t>(n) + 1;
    std::vector<std::vector<double>> pts(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<double> v(dim);
        double norm2 = 0.0;
        do {
            norm2 = 0.0;
            for (auto& c : v) {
                c = rng.gaussian();
                norm2 += c * c;
            }
        } while (norm2 < 1e-12);
        const double inv = 1.0 / std::sqrt(norm2);
        for (auto& c : v) c *= inv;
        pts[i] = std::move(v);
    }
    return metric_sample_from_points(MetricKind::sphere_geodesic, std::move(pts));
}

FiniteMetricSample projective_sample(int n, int count, std::uint64_t seed) {
    FiniteMetricSample s = sphere_sample(n, count, seed);
    return metric_sample_from_points(MetricKind::projective_quotient, std::move(s.points));
}

} // namespace disco
