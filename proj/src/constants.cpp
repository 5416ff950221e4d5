#include "discotop/constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "discotop/metric_sample.hpp"

namespace disco {

double r_constant(int n) {
    if (n < 0) throw std::invalid_argument("r_constant: n < 0");
    return std::acos(-1.0 / (static_cast<double>(n) + 1.0));
}

namespace {

// Covering radius of the chosen centers measured over the sample.
double covering_radius(const FiniteMetricSample& s, const std::vector<std::size_t>& centers) {
    const std::size_t n = s.size();
    double worst = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t c : centers) best = std::min(best, s(p, c));
        worst = std::max(worst, best);
    }
    return worst;
}

} // namespace

double cov_upper(int n, int k, int budget, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("cov_upper: n < 0");
    if (k < 1) throw std::invalid_argument("cov_upper: k < 1");
    if (n == 0) return 0.0; // RP^0 is a point
    if (n == 1) return std::numbers::pi / (2.0 * static_cast<double>(k));

    const int count = std::max(64, budget);
    const FiniteMetricSample sample = projective_sample(n, count, seed);
    const std::size_t m = sample.size();

    // Farthest-point greedy sequence; its prefixes give monotone covers.
    std::vector<std::size_t> greedy{0};
    std::vector<double> dist_to_set(m);
    for (std::size_t p = 0; p < m; ++p) dist_to_set[p] = sample(p, 0);
    while (static_cast<int>(greedy.size()) < k) {
        std::size_t far = 0;
        for (std::size_t p = 1; p < m; ++p)
            if (dist_to_set[p] > dist_to_set[far]) far = p;
        greedy.push_back(far);
        for (std::size_t p = 0; p < m; ++p)
            dist_to_set[p] = std::min(dist_to_set[p], sample(p, far));
    }

    double best = std::numeric_limits<double>::infinity();
    for (int kk = 1; kk <= k; ++kk) {
        std::vector<std::size_t> centers(greedy.begin(), greedy.begin() + kk);
        best = std::min(best, covering_radius(sample, centers));

        // Bounded Lloyd-style relaxation: reassign, then move each center to
        // the cell member minimizing the max distance within its cell.
        const int rounds = std::max(1, budget / (50 * k));
        for (int round = 0; round < rounds; ++round) {
            std::vector<std::vector<std::size_t>> cells(centers.size());
            for (std::size_t p = 0; p < m; ++p) {
                std::size_t owner = 0;
                for (std::size_t c = 1; c < centers.size(); ++c)
                    if (sample(p, centers[c]) < sample(p, centers[owner])) owner = c;
                cells[owner].push_back(p);
            }
            bool moved = false;
            for (std::size_t c = 0; c < centers.size(); ++c) {
                if (cells[c].empty()) continue;
                std::size_t arg = centers[c];
                double arg_val = std::numeric_limits<double>::infinity();
                for (std::size_t cand : cells[c]) {
                    double worst = 0.0;
                    for (std::size_t p : cells[c]) worst = std::max(worst, sample(cand, p));
                    if (worst < arg_val) {
                        arg_val = worst;
                        arg = cand;
                    }
                }
                if (arg != centers[c]) {
                    centers[c] = arg;
                    moved = true;
                }
            }
            best = std::min(best, covering_radius(sample, centers));
            if (!moved) break;
        }
    }
    return best;
}

double covering_lower_bound(int n, int k, int budget, std::uint64_t seed) {
    return std::numbers::pi - 2.0 * cov_upper(n, k, budget, seed);
}

bool is_prime_power(int r) {
    if (r < 2) throw std::invalid_argument("is_prime_power: r < 2");
    int p = 2;
    while (p * p <= r && r % p != 0) ++p;
    if (p * p > r) return true; // r itself prime
    while (r % p == 0) r /= p;
    return r == 1;
}

ConstantValue c_constant(int n, int k) {
    if (n < 0) throw std::invalid_argument("c_constant: n < 0");
    if (k < n) throw std::invalid_argument("c_constant: k < n");
    ConstantValue out;
    if (k == n) {
        out.exact = 0.0;
        out.lower = 0.0;
        out.provenance = {"identity-scale: c(n,n) = 0"};
        return out;
    }
    if (n == 1) {
        const int m = k / 2;
        const double v =
            (2.0 * std::numbers::pi * static_cast<double>(m)) / (2.0 * m + 1.0);
        out.exact = v;
        out.lower = v;
        out.upper = v;
        out.provenance = {"circle-odd-map-values: c(1,2m) = c(1,2m+1) = 2*pi*m/(2m+1)"};
        return out;
    }
    if (k == n + 1 || k == n + 2) {
        const double v = r_constant(n);
        out.exact = v;
        out.lower = v;
        out.upper = v;
        out.provenance = {"simplex-diameter-values: c(n,n+1) = c(n,n+2) = r_n"};
        return out;
    }
    // Unknown exact value: best known lower bound.
    const double mono = r_constant(n);
    const double cover = covering_lower_bound(n, k);
    if (cover > mono) {
        out.lower = cover;
        out.provenance = {"projective-covering-bound: c(n,k) >= pi - 2*cov(n,k)"};
    } else {
        out.lower = mono;
        out.provenance = {"monotone-in-k: c(n,k) >= c(n,n+1) = r_n"};
    }
    return out;
}

} // namespace disco
