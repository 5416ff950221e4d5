#include "discotop/witnesses.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "discotop/errors.hpp"
#include "discotop/metric_sample.hpp"
#include "discotop/rng.hpp"
#include "discotop/simplicial_complex.hpp"

#include "json.hpp"

namespace disco {

namespace {

// Exhaustive image-distance scan over disjoint-carrier pairs; the value a
// witness certifies as positive.
double min_disjoint_image_distance(const SampledFunction& f) {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = f.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!f.domain.carriers_disjoint(i, j)) continue;
            double s = 0.0;
            for (std::size_t c = 0; c < f.values[i].size(); ++c) {
                const double d = f.values[i][c] - f.values[j][c];
                s += d * d;
            }
            best = std::min(best, std::sqrt(s));
        }
    return best;
}

void check_distinct_values_1d(const SampledFunction& f, const char* who) {
    std::vector<double> vals;
    vals.reserve(f.size());
    for (const auto& v : f.values) vals.push_back(v[0]);
    std::sort(vals.begin(), vals.end());
    for (std::size_t i = 1; i < vals.size(); ++i)
        if (vals[i] == vals[i - 1])
            throw ConstructionFailed(std::string(who) + ": sampled values collide");
}

// Geometric ladder eps, eps/2, ... down to `floor` (at least one entry).
std::vector<double> geometric_ladder(double eps, double floor_at = 1e-6) {
    std::vector<double> out;
    double e = eps;
    while (e >= floor_at && out.size() < 64) {
        out.push_back(e);
        e *= 0.5;
    }
    if (out.empty()) out.push_back(eps);
    return out;
}

} // namespace

SampledFunction digit_interleave(int bits, int grid) {
    if (bits < 1 || bits > 12) throw std::invalid_argument("digit_interleave: bits out of range");
    if (grid != (1 << bits))
        throw std::invalid_argument("digit_interleave: grid must equal 2^bits");
    SampledFunction f;
    f.domain.kind = DomainKind::euclidean;
    const std::size_t g = static_cast<std::size_t>(grid);
    f.domain.points.reserve(g * g);
    f.values.reserve(g * g);
    const double scale = std::ldexp(1.0, -2 * bits); // 4^-bits
    for (std::size_t i = 0; i < g; ++i) {
        for (std::size_t j = 0; j < g; ++j) {
            f.domain.points.push_back(
                {static_cast<double>(i) / grid, static_cast<double>(j) / grid});
            // Interleave with y's digits leading: f = 0.y1 x1 y2 x2 ...
            std::uint64_t code = 0;
            for (int b = 0; b < bits; ++b) {
                const std::uint64_t yb = (j >> (bits - 1 - b)) & 1ULL;
                const std::uint64_t xb = (i >> (bits - 1 - b)) & 1ULL;
                code |= yb << (2 * (bits - b) - 1);
                code |= xb << (2 * (bits - b) - 2);
            }
            f.values.push_back({static_cast<double>(code) * scale});
        }
    }
    f.rho_dom = 1.0 / grid;
    f.hot_spots.resize(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) f.hot_spots[i] = i;
    check_distinct_values_1d(f, "digit_interleave");
    return f;
}

SampledFunction k5_jump_drawing(double offset, int grid) {
    if (!(offset > 0.0 && offset < 0.05))
        throw std::invalid_argument("k5_jump_drawing: offset must lie in (0, 0.05)");
    if (grid < 20) throw std::invalid_argument("k5_jump_drawing: grid too coarse");

    // Vertices at 5th roots of unity (one at the top).
    std::vector<std::array<double, 2>> V(5);
    for (int k = 0; k < 5; ++k) {
        const double a = 2.0 * std::numbers::pi * k / 5.0 + std::numbers::pi / 2.0;
        V[static_cast<std::size_t>(k)] = {std::cos(a), std::sin(a)};
    }
    std::vector<Face> edges;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) edges.push_back({a, b});

    auto edge_point = [&](const Face& e, double t) {
        const auto& A = V[static_cast<std::size_t>(e[0])];
        const auto& B = V[static_cast<std::size_t>(e[1])];
        return std::array<double, 2>{A[0] + t * (B[0] - A[0]), A[1] + t * (B[1] - A[1])};
    };

    // Pentagram crossings: pairs of vertex-disjoint diagonals. For each, the
    // lexicographically smaller diagonal is displaced near its crossing
    // parameter; the half-open interval keeps f single-valued.
    struct JumpInterval {
        Face edge;
        double t_lo, t_hi; // displaced on [t_lo, t_hi)
        double nx, ny;     // displacement direction (unit, away from center)
    };
    std::vector<JumpInterval> jumps;
    std::vector<std::pair<Face, double>> crossing_params; // partner-side clusters
    for (int k = 0; k < 5; ++k) {
        Face d1{k % 5, (k + 2) % 5};
        Face d2{(k + 1) % 5, (k + 3) % 5};
        std::sort(d1.begin(), d1.end());
        std::sort(d2.begin(), d2.end());
        Face disp = std::min(d1, d2);
        Face part = std::max(d1, d2);
        // Solve A + t(B-A) = C + s(D-C).
        const auto& A = V[static_cast<std::size_t>(disp[0])];
        const auto& B = V[static_cast<std::size_t>(disp[1])];
        const auto& C = V[static_cast<std::size_t>(part[0])];
        const auto& D = V[static_cast<std::size_t>(part[1])];
        const double ex = B[0] - A[0], ey = B[1] - A[1];
        const double fx = D[0] - C[0], fy = D[1] - C[1];
        const double det = ex * (-fy) - ey * (-fx);
        const double rx = C[0] - A[0], ry = C[1] - A[1];
        const double t_c = (rx * (-fy) - ry * (-fx)) / det;
        const double s_c = (ex * ry - ey * rx) / det;
        const double len = std::hypot(ex, ey);
        const double ux = ex / len, uy = ey / len;
        double nx = -uy, ny = ux;
        const auto P = edge_point(disp, t_c);
        if (nx * P[0] + ny * P[1] < 0.0) {
            nx = -nx;
            ny = -ny;
        }
        // Arc distance at which the displaced line re-meets the partner; the
        // interval stays strictly inside so the displaced piece clears it.
        const double vx = fx / std::hypot(fx, fy), vy = fy / std::hypot(fx, fy);
        const double tau_star = std::fabs(offset * (vx * ux + vy * uy) / (vx * nx + vy * ny));
        const double w = std::min({0.45 * tau_star / len, 2.0 / grid, 0.01});
        jumps.push_back({disp, t_c - w, t_c + w, offset * nx, offset * ny});
        crossing_params.emplace_back(part, s_c);
        crossing_params.emplace_back(disp, t_c);
    }

    // Parameter sets per edge: uniform grid plus geometric clusters at the
    // jump endpoints and both crossing preimages.
    std::map<Face, std::set<double>> params;
    for (const auto& e : edges) {
        auto& ps = params[e];
        for (int j = 1; j < grid; ++j) ps.insert(static_cast<double>(j) / grid);
    }
    auto add_cluster = [&](const Face& e, double center, double eps0) {
        auto& ps = params[e];
        if (center > 0.0 && center < 1.0) ps.insert(center);
        for (double eps : geometric_ladder(eps0)) {
            for (double s : {-1.0, 1.0}) {
                const double t = center + s * eps;
                if (t > 0.0 && t < 1.0) ps.insert(t);
            }
        }
    };
    std::vector<std::pair<Face, double>> jump_params;
    for (const auto& jmp : jumps) {
        const double w = (jmp.t_hi - jmp.t_lo) / 2.0;
        for (double u : {jmp.t_lo, jmp.t_hi}) {
            add_cluster(jmp.edge, u, 2.0 * w);
            jump_params.emplace_back(jmp.edge, u);
        }
    }
    for (const auto& [e, s] : crossing_params) add_cluster(e, s, 4.0 / grid);

    SampledFunction f;
    f.domain.kind = DomainKind::barycentric;
    auto push = [&](const std::vector<double>& bary, const Face& carrier,
                    const std::array<double, 2>& val) {
        f.domain.points.push_back(bary);
        f.domain.carrier.push_back(carrier);
        f.values.push_back({val[0], val[1]});
        return f.size() - 1;
    };
    for (int v = 0; v < 5; ++v) {
        std::vector<double> bary(5, 0.0);
        bary[static_cast<std::size_t>(v)] = 1.0;
        push(bary, {v}, V[static_cast<std::size_t>(v)]);
    }
    std::map<std::pair<Face, double>, std::size_t> index_of;
    for (const auto& e : edges) {
        for (double t : params[e]) {
            std::vector<double> bary(5, 0.0);
            bary[static_cast<std::size_t>(e[0])] = 1.0 - t;
            bary[static_cast<std::size_t>(e[1])] = t;
            auto val = edge_point(e, t);
            for (const auto& jmp : jumps)
                if (jmp.edge == e && t >= jmp.t_lo && t < jmp.t_hi) {
                    val[0] += jmp.nx;
                    val[1] += jmp.ny;
                    break;
                }
            index_of[{e, t}] = push(bary, e, val);
        }
    }
    for (const auto& key : jump_params) f.hot_spots.push_back(index_of.at(key));
    std::sort(f.hot_spots.begin(), f.hot_spots.end());
    f.rho_dom = std::numbers::sqrt2 / grid;

    const double margin = min_disjoint_image_distance(f);
    if (!(margin > 0.0)) {
        std::size_t bi = 0, bj = 0;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j) {
                if (!f.domain.carriers_disjoint(i, j)) continue;
                const double d = std::hypot(f.values[i][0] - f.values[j][0],
                                            f.values[i][1] - f.values[j][1]);
                if (d < best) {
                    best = d;
                    bi = i;
                    bj = j;
                }
            }
        std::ostringstream msg;
        msg << "k5_jump_drawing: almost-injectivity failed at sample pair (" << bi << ", "
            << bj << ")";
        throw ConstructionFailed(msg.str());
    }
    return f;
}

SampledFunction tverberg_one_point(int grid) {
    if (grid < 10) throw std::invalid_argument("tverberg_one_point: grid < 10");
    const SimplicialComplex simplex2 = simplex_skeleton(2, 2);
    SampledFunction f;
    f.domain = barycentric_grid(simplex2, grid);

    auto affine = [](const std::vector<double>& b) { return b[1] + 2.0 * b[2]; };

    // Extra cluster around the edge midpoint (the one-point jump locus).
    const Face edge02{0, 2};
    std::set<double> extra;
    extra.insert(0.5);
    for (double eps : geometric_ladder(1.0 / grid))
        for (double s : {-1.0, 1.0}) extra.insert(0.5 + s * eps);
    for (double t : extra) {
        const std::vector<double> bary{1.0 - t, 0.0, t};
        bool present = false;
        for (std::size_t i = 0; i < f.domain.points.size() && !present; ++i)
            present = f.domain.points[i] == bary;
        if (!present) {
            f.domain.points.push_back(bary);
            f.domain.carrier.push_back(edge02);
        }
    }

    std::size_t mid_index = f.size();
    f.values.reserve(f.domain.size());
    for (std::size_t i = 0; i < f.domain.size(); ++i) {
        const auto& b = f.domain.points[i];
        if (b[0] == 0.5 && b[1] == 0.0 && b[2] == 0.5) {
            mid_index = i;
            f.values.push_back({0.95}); // jump: avoid the value f(v1) = 1
        } else {
            f.values.push_back({affine(b)});
        }
    }
    if (mid_index >= f.size())
        throw ConstructionFailed("tverberg_one_point: midpoint sample missing");
    f.hot_spots = {mid_index};
    f.rho_dom = std::numbers::sqrt2 / grid;

    if (!(min_disjoint_image_distance(f) > 0.0))
        throw ConstructionFailed("tverberg_one_point: almost-2-injectivity failed on sample");
    return f;
}

SampledFunction equatorial_odd(int k, int n, int grid, std::uint64_t seed) {
    if (n < 0 || k <= n) throw std::invalid_argument("equatorial_odd: need 0 <= n < k");
    if (grid < 4) throw std::invalid_argument("equatorial_odd: grid < 4");
    const std::size_t dim = static_cast<std::size_t>(k) + 1;
    const std::size_t block = static_cast<std::size_t>(n) + 1; // normalized coordinates
    const std::size_t rest = dim - block;

    // Directions in the first block (S^n) and in the singular block
    // (S^{k-n-1}); both closed under exact negation by construction below.
    std::vector<std::vector<double>> U;
    if (n == 1) {
        const int m = std::max(8, grid - grid % 2);
        for (int j = 0; j < m; ++j) {
            const double a = 2.0 * std::numbers::pi * j / m;
            U.push_back({std::cos(a), std::sin(a)});
        }
    } else if (n == 0) {
        U = {{1.0}, {-1.0}};
    } else {
        const auto s = sphere_sample(n, std::max(2 * (n + 2), grid), seed);
        U = s.points;
    }
    std::vector<std::vector<double>> W;
    if (rest == 1) {
        W = {{1.0}, {-1.0}};
    } else {
        const auto s = sphere_sample(static_cast<int>(rest) - 1,
                                     std::max(2 * static_cast<int>(rest) + 2, grid / 2),
                                     seed + 1);
        W = s.points;
    }

    // Polar angles: coarse sweep plus a geometric approach to the singular
    // set (phi -> pi/2).
    std::vector<double> phis;
    for (int j = 0; j <= 5; ++j) phis.push_back(j * (std::numbers::pi / 2.0) / 6.0);
    for (double d : geometric_ladder(std::numbers::pi / 8.0, 1e-5))
        phis.push_back(std::numbers::pi / 2.0 - d);

    SampledFunction f;
    f.domain.kind = DomainKind::sphere_geodesic;
    std::map<std::vector<double>, std::size_t> seen;
    auto push = [&](const std::vector<double>& x) {
        if (seen.count(x)) return;
        seen[x] = f.domain.points.size();
        f.domain.points.push_back(x);
    };
    for (double phi : phis) {
        const double a = std::cos(phi), b = std::sin(phi);
        for (const auto& u : U) {
            for (const auto& w : W) {
                std::vector<double> x(dim, 0.0);
                for (std::size_t c = 0; c < block; ++c) x[c] = a * u[c];
                for (std::size_t c = 0; c < rest; ++c) x[block + c] = b * w[c];
                push(x);
            }
        }
    }
    for (const auto& w : W) { // exactly singular points
        std::vector<double> x(dim, 0.0);
        for (std::size_t c = 0; c < rest; ++c) x[block + c] = w[c];
        push(x);
    }
    { // exact antipodal closure
        std::vector<std::vector<double>> snapshot = f.domain.points;
        for (const auto& x : snapshot) {
            std::vector<double> neg(x.size());
            for (std::size_t c = 0; c < x.size(); ++c) neg[c] = -x[c];
            push(neg);
        }
    }

    f.values.reserve(f.domain.size());
    for (const auto& x : f.domain.points) {
        double norm2 = 0.0;
        for (std::size_t c = 0; c < block; ++c) norm2 += x[c] * x[c];
        std::vector<double> g(block, 0.0);
        if (norm2 == 0.0) {
            // Fixed odd assignment on the singular subsphere: sign of the
            // first nonzero singular coordinate picks +e1 or -e1.
            double s = 1.0;
            for (std::size_t c = block; c < dim; ++c)
                if (x[c] != 0.0) {
                    s = x[c] > 0.0 ? 1.0 : -1.0;
                    break;
                }
            g[0] = s;
        } else {
            const double inv = 1.0 / std::sqrt(norm2);
            for (std::size_t c = 0; c < block; ++c) g[c] = x[c] * inv;
        }
        f.values.push_back(std::move(g));
    }

    // Hot spots: samples near the singular subsphere.
    for (std::size_t i = 0; i < f.domain.points.size(); ++i) {
        double norm2 = 0.0;
        for (std::size_t c = 0; c < block; ++c)
            norm2 += f.domain.points[i][c] * f.domain.points[i][c];
        if (norm2 < 1e-4) f.hot_spots.push_back(i);
    }
    f.rho_dom = f.domain.resolution();

    // Verification: exact oddness on every sampled antipodal pair.
    for (std::size_t i = 0; i < f.domain.points.size(); ++i) {
        std::vector<double> neg(dim);
        for (std::size_t c = 0; c < dim; ++c) neg[c] = -f.domain.points[i][c];
        const auto it = seen.find(neg);
        if (it == seen.end())
            throw ConstructionFailed("equatorial_odd: antipode missing from sample");
        for (std::size_t c = 0; c < block; ++c)
            if (f.values[i][c] != -f.values[it->second][c])
                throw ConstructionFailed("equatorial_odd: oddness violated on sample");
    }
    return f;
}

SampledFunction step_witness(bool monotone, int grid) {
    if (grid < 4) throw std::invalid_argument("step_witness: grid < 4");
    SampledFunction f;
    f.domain = interval_grid(grid);
    std::set<double> extra;
    for (double eps : geometric_ladder(0.5 / grid))
        for (double s : {-1.0, 1.0}) extra.insert(0.5 + s * eps);
    for (double x : extra)
        if (x > 0.0 && x < 1.0) f.domain.points.push_back({x});

    std::size_t jump_index = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < f.domain.points.size(); ++i) {
        const double x = f.domain.points[i][0];
        const double y = monotone ? (x >= 0.5 ? x + 1.0 : x) : (x < 0.5 ? x + 1.5 : x);
        f.values.push_back({y});
        if (std::fabs(x - 0.5) < best) {
            best = std::fabs(x - 0.5);
            jump_index = i;
        }
    }
    f.hot_spots = {jump_index};
    f.rho_dom = 1.0 / grid;
    check_distinct_values_1d(f, "step_witness");
    return f;
}

WitnessResult build_witness(const WitnessSpec& spec) {
    WitnessResult out;
    out.spec = spec;
    switch (spec.kind) {
    case WitnessKind::digit_interleave:
        out.fn = digit_interleave(spec.bits, spec.grid);
        out.expected_bound_citation = "euclidean-injection-coindex-bound";
        break;
    case WitnessKind::k5_jump:
        out.fn = k5_jump_drawing(spec.offset, spec.grid);
        out.expected_bound_citation = "quantified-van-kampen-flores";
        break;
    case WitnessKind::tverberg_one_point:
        out.fn = tverberg_one_point(spec.grid);
        out.expected_bound_citation = "quantified-topological-tverberg";
        break;
    case WitnessKind::equatorial_odd:
        out.fn = equatorial_odd(spec.k, spec.n, spec.grid, spec.seed);
        out.expected_bound_citation = "odd-map-modulus-bound";
        break;
    case WitnessKind::monotone_step:
        out.fn = step_witness(true, spec.grid);
        out.expected_bound_citation = "monotone-line-characterization";
        break;
    case WitnessKind::nonmonotone_step:
        out.fn = step_witness(false, spec.grid);
        out.expected_bound_citation = "monotone-line-characterization";
        break;
    }
    out.verified = true; // constructors throw on verification failure
    if (out.fn.domain.simplicial())
        out.min_disjoint_image_distance = min_disjoint_image_distance(out.fn);
    else
        out.min_disjoint_image_distance = std::numeric_limits<double>::infinity();
    return out;
}

void export_witness(const WitnessResult& w, const std::string& csv_path,
                    const std::string& sidecar_path) {
    std::ofstream cs(csv_path);
    if (!cs) throw std::runtime_error("cannot write " + csv_path);
    cs.precision(17);
    const std::size_t dd = w.fn.domain.points.empty() ? 0 : w.fn.domain.points[0].size();
    const std::size_t vd = w.fn.codomain_dim();
    for (std::size_t c = 0; c < dd; ++c) cs << (c ? "," : "") << "x" << c;
    for (std::size_t c = 0; c < vd; ++c) cs << ",f" << c;
    cs << "\n";
    for (std::size_t i = 0; i < w.fn.size(); ++i) {
        for (std::size_t c = 0; c < dd; ++c) cs << (c ? "," : "") << w.fn.domain.points[i][c];
        for (std::size_t c = 0; c < vd; ++c) cs << "," << w.fn.values[i][c];
        cs << "\n";
    }

    nlohmann::ordered_json side;
    side["schema"] = "discotop-witness-v1";
    side["verified"] = w.verified;
    side["sample_size"] = w.fn.size();
    side["rho_dom"] = w.fn.rho_dom;
    side["hot_spots"] = w.fn.hot_spots;
    side["expected_bound_citation"] = w.expected_bound_citation;
    if (std::isfinite(w.min_disjoint_image_distance))
        side["min_disjoint_image_distance"] = w.min_disjoint_image_distance;
    std::ofstream js(sidecar_path);
    if (!js) throw std::runtime_error("cannot write " + sidecar_path);
    js << side.dump(2) << "\n";
}

} // namespace disco
