#include "discotop/domain_sample.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

namespace disco {

double DomainSample::distance(std::size_t i, std::size_t j) const {
    switch (kind) {
    case DomainKind::table:
        return table[i * size() + j];
    case DomainKind::sphere_geodesic: {
        double s = 0.0;
        const auto& a = points[i];
        const auto& b = points[j];
        for (std::size_t c = 0; c < a.size(); ++c) s += a[c] * b[c];
        if (s >= 1.0) return 0.0;
        if (s <= -1.0) return std::numbers::pi;
        return std::acos(s);
    }
    case DomainKind::euclidean:
    case DomainKind::barycentric: {
        double s = 0.0;
        const auto& a = points[i];
        const auto& b = points[j];
        for (std::size_t c = 0; c < a.size(); ++c) {
            const double d = a[c] - b[c];
            s += d * d;
        }
        return std::sqrt(s);
    }
    }
    return 0.0;
}

bool DomainSample::carriers_disjoint(std::size_t i, std::size_t j) const {
    const Face& a = carrier[i];
    const Face& b = carrier[j];
    std::size_t p = 0, q = 0;
    while (p < a.size() && q < b.size()) {
        if (a[p] < b[q])
            ++p;
        else if (b[q] < a[p])
            ++q;
        else
            return false;
    }
    return true;
}

DomainSample DomainSample::from_metric_sample(const FiniteMetricSample& m) {
    DomainSample d;
    if (m.kind == MetricKind::sphere_geodesic && !m.points.empty()) {
        d.kind = DomainKind::sphere_geodesic;
        d.points = m.points;
    } else if (m.kind == MetricKind::euclidean && !m.points.empty()) {
        d.kind = DomainKind::euclidean;
        d.points = m.points;
    } else {
        d.kind = DomainKind::table;
        d.points = m.points;
        d.table = m.dist;
        if (d.points.empty() && !d.table.empty()) {
            // carrierless abstract sample: recover n for size()
            std::size_t n = 0;
            while (n * n < d.table.size()) ++n;
            d.points.resize(n);
        }
    }
    return d;
}

double DomainSample::resolution(std::size_t cap) const {
    const std::size_t n = size();
    if (n < 2) throw std::invalid_argument("resolution: need at least two points");
    if (n > cap) throw std::invalid_argument("resolution: sample too large, set rho_dom explicitly");
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) best = std::min(best, distance(i, j));
        worst = std::max(worst, best);
    }
    return worst;
}

DomainSample barycentric_grid(const SimplicialComplex& K, int q) {
    if (q < 1) throw std::invalid_argument("barycentric_grid: q < 1");
    const int nv = K.vertices().empty() ? 0 : K.vertices().back() + 1;
    DomainSample d;
    d.kind = DomainKind::barycentric;

    std::map<std::vector<int>, std::size_t> seen; // integer lattice point -> index
    auto add_point = [&](const std::vector<int>& lattice, const Face& face) {
        if (seen.count(lattice)) return;
        seen[lattice] = d.points.size();
        std::vector<double> coords(static_cast<std::size_t>(nv), 0.0);
        for (int v = 0; v < nv; ++v)
            coords[static_cast<std::size_t>(v)] =
                static_cast<double>(lattice[static_cast<std::size_t>(v)]) / q;
        d.points.push_back(std::move(coords));
        d.carrier.push_back(face);
    };

    for (int dd = 0; dd <= K.dim(); ++dd) {
        for (const auto& f : K.faces(dd)) {
            // compositions of q into |f| strictly positive parts
            const std::size_t m = f.size();
            std::vector<int> parts(m, 1);
            int rest = q - static_cast<int>(m);
            if (rest < 0) continue;
            std::vector<int> comp(m, 0);
            auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
                if (pos + 1 == m) {
                    comp[pos] = remaining + 1;
                    std::vector<int> lattice(static_cast<std::size_t>(nv), 0);
                    for (std::size_t t = 0; t < m; ++t)
                        lattice[static_cast<std::size_t>(f[t])] = comp[t];
                    add_point(lattice, f);
                    return;
                }
                for (int take = 0; take <= remaining; ++take) {
                    comp[pos] = take + 1;
                    self(self, pos + 1, remaining - take);
                }
            };
            rec(rec, 0, rest);
        }
    }
    return d;
}

DomainSample interval_grid(int n) {
    if (n < 1) throw std::invalid_argument("interval_grid: n < 1");
    DomainSample d;
    d.kind = DomainKind::euclidean;
    d.points.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        d.points.push_back({static_cast<double>(i) / n});
    return d;
}

} // namespace disco
