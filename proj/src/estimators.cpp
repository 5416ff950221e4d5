#include "discotop/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "discotop/errors.hpp"
#include "discotop/parallel.hpp"

namespace disco {

namespace {

constexpr double kZeroTupleTol = 1e-12;
constexpr std::size_t kExactBallCap = 4000; // tuples; exact ball scans are quadratic

double euclidean_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

double value_distance(const std::vector<double>& a, const std::vector<double>& b,
                      CodomainMetric metric) {
    return metric == CodomainMetric::euclidean ? euclidean_distance(a, b)
                                               : sphere_geodesic_distance(a, b);
}

double diam_of(const std::vector<std::size_t>& ids,
               const std::vector<std::vector<double>>& values, CodomainMetric metric) {
    double m = 0.0;
    for (std::size_t a = 0; a < ids.size(); ++a)
        for (std::size_t b = a + 1; b < ids.size(); ++b) {
            const double d = value_distance(values[ids[a]], values[ids[b]], metric);
            if (d > m) m = d;
        }
    return m;
}

std::vector<double> ladder_rhos(double rho, double rho_dom, int steps) {
    std::vector<double> rhos{rho};
    for (int i = 1; i < steps; ++i) {
        const double r = rho / static_cast<double>(1 << i);
        if (r < rho_dom) break;
        rhos.push_back(r);
    }
    return rhos;
}

// Max over anchors of diam(values over the rho-ball of the anchor), where
// balls are scanned exhaustively against `candidates`.
template <class DistFn>
double max_local_diam_exact(const std::vector<std::size_t>& anchors,
                            const std::vector<std::size_t>& candidates, DistFn&& dist,
                            double rho, const std::vector<std::vector<double>>& values,
                            CodomainMetric metric) {
    std::vector<double> slot(anchors.size(), 0.0);
    parallel_for(0, anchors.size(), [&](std::size_t ai) {
        const std::size_t a = anchors[ai];
        std::vector<std::size_t> ball;
        for (std::size_t c : candidates)
            if (dist(a, c) <= rho) ball.push_back(c);
        slot[ai] = diam_of(ball, values, metric);
    });
    double m = 0.0;
    for (double v : slot) m = std::max(m, v);
    return m;
}

std::vector<std::size_t> iota_ids(std::size_t n) {
    std::vector<std::size_t> ids(n);
    std::iota(ids.begin(), ids.end(), std::size_t{0});
    return ids;
}

// Strided deterministic subset of at most `cap` entries.
std::vector<std::size_t> strided(const std::vector<std::size_t>& ids, std::size_t cap) {
    if (ids.size() <= cap) return ids;
    std::vector<std::size_t> out;
    out.reserve(cap);
    const double step = static_cast<double>(ids.size()) / static_cast<double>(cap);
    for (std::size_t k = 0; k < cap; ++k)
        out.push_back(ids[static_cast<std::size_t>(static_cast<double>(k) * step)]);
    return out;
}

std::vector<std::size_t> anchor_points(const SampledFunction& f, std::size_t cap) {
    std::vector<std::size_t> base =
        f.hot_spots.empty() ? iota_ids(f.size()) : f.hot_spots;
    return strided(base, cap);
}

// Points within rho of `center`, closest first, capped. The center itself
// leads when it qualifies.
std::vector<std::size_t> cluster_around(const DomainSample& dom, std::size_t center,
                                        double rho, std::size_t cap) {
    std::vector<std::pair<double, std::size_t>> near;
    for (std::size_t i = 0; i < dom.size(); ++i) {
        const double d = dom.distance(center, i);
        if (d <= rho) near.emplace_back(d, i);
    }
    std::sort(near.begin(), near.end());
    std::vector<std::size_t> out;
    out.reserve(std::min(cap, near.size()));
    for (const auto& [d, i] : near) {
        out.push_back(i);
        if (out.size() == cap) break;
    }
    return out;
}

// K partners minimizing image distance to f(anchor) among admissible points.
template <class AdmitFn>
std::vector<std::size_t> image_near_partners(const SampledFunction& f, std::size_t anchor,
                                             std::size_t k, AdmitFn&& admit) {
    std::vector<std::pair<double, std::size_t>> cand;
    for (std::size_t q = 0; q < f.size(); ++q) {
        if (!admit(q)) continue;
        cand.emplace_back(euclidean_distance(f.values[anchor], f.values[q]), q);
    }
    if (cand.size() > k) {
        std::nth_element(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(k),
                         cand.end());
        cand.resize(k);
    }
    std::sort(cand.begin(), cand.end());
    std::vector<std::size_t> out;
    out.reserve(cand.size());
    for (const auto& [d, q] : cand) out.push_back(q);
    return out;
}

struct TupleValueTable {
    std::vector<std::vector<double>> values; // normalized codomain points per tuple
    CodomainMetric metric = CodomainMetric::sphere_geodesic;
};

// Values of phi_f per pair tuple. One-dimensional codomains live on the
// two-point sphere, stored as a signed scalar so antipodality is exact.
TupleValueTable phi_table(const SampledFunction& f, const ConfigSample& cs) {
    const std::size_t d = f.codomain_dim();
    TupleValueTable t;
    t.values.resize(cs.tuples.size());
    for (std::size_t i = 0; i < cs.tuples.size(); ++i) {
        const auto& tup = cs.tuples[i];
        const auto& fx = f.values[tup[0]];
        const auto& fy = f.values[tup[1]];
        std::vector<double> diff(d);
        double norm2 = 0.0;
        for (std::size_t c = 0; c < d; ++c) {
            diff[c] = fx[c] - fy[c];
            norm2 += diff[c] * diff[c];
        }
        if (norm2 == 0.0)
            throw NotInjective(tup[0], tup[1], "phi_f: f identifies a sampled pair");
        if (d == 1) {
            t.values[i] = {diff[0] > 0.0 ? 1.0 : -1.0};
        } else {
            const double inv = 1.0 / std::sqrt(norm2);
            for (auto& c : diff) c *= inv;
            t.values[i] = std::move(diff);
        }
    }
    return t;
}

// Values of nu ∘ Conf_r(f) per tuple (flattened). Collapsed tuples are
// almost-r-injectivity violations.
TupleValueTable nu_conf_table(const SampledFunction& f, const ConfigSample& cs) {
    TupleValueTable t;
    t.values.resize(cs.tuples.size());
    const std::size_t d = f.codomain_dim();
    const bool s0 = d * (static_cast<std::size_t>(cs.r) - 1) == 1;
    for (std::size_t i = 0; i < cs.tuples.size(); ++i) {
        CenteredTuple ct = conf_r_map(f, cs.tuples[i]);
        const double n = ct.norm();
        if (n <= kZeroTupleTol)
            throw NotAlmostRInjective(cs.tuples[i],
                                      "alpha_r_hat: collapsed configuration (not almost "
                                      "r-injective on the sample)");
        if (s0) {
            t.values[i] = {ct.parts[0][0] > 0.0 ? 1.0 : -1.0};
        } else {
            std::vector<double> flat = ct.flattened();
            const double inv = 1.0 / n;
            for (auto& c : flat) c *= inv;
            t.values[i] = std::move(flat);
        }
    }
    return t;
}

// Shared delta-hat core over a configuration sample. Uses the sampler's
// groups when present, otherwise exhaustive pair-metric ball scans.
ModulusEstimate estimate_over_configs(const SampledFunction& f, const ConfigSample& cs,
                                      const TupleValueTable& table, double rho,
                                      int ladder_steps) {
    ModulusEstimate est;
    est.rho = rho;
    est.separation = cs.separation;
    if (cs.tuples.empty()) {
        est.method = "vacuous";
        est.ladder = {{rho, 0.0}};
        return est;
    }
    auto pair_dist = [&](std::size_t a, std::size_t b) {
        return cs.pair_distance(f.domain, a, b);
    };
    const auto rhos = ladder_rhos(rho, f.rho_dom, ladder_steps);
    if (!cs.groups.empty()) {
        est.method = "hotspot-groups";
        for (double r : rhos) {
            std::vector<double> slot(cs.groups.size(), 0.0);
            parallel_for(0, cs.groups.size(), [&](std::size_t g) {
                const auto& grp = cs.groups[g];
                std::vector<std::size_t> kept;
                kept.reserve(grp.size());
                for (std::size_t id : grp)
                    if (pair_dist(grp[0], id) <= r) kept.push_back(id);
                slot[g] = diam_of(kept, table.values, table.metric);
            });
            double m = 0.0;
            for (double v : slot) m = std::max(m, v);
            est.ladder.emplace_back(r, m);
        }
    } else {
        if (cs.tuples.size() > kExactBallCap)
            throw std::invalid_argument(
                "configuration sample too large for exact ball scans; use the hot-spot "
                "sampler");
        est.method = "exact-ball-scan";
        const auto ids = iota_ids(cs.tuples.size());
        for (double r : rhos)
            est.ladder.emplace_back(
                r, max_local_diam_exact(ids, ids, pair_dist, r, table.values, table.metric));
    }
    est.value = est.ladder.front().second;
    return est;
}

} // namespace

double sphere_geodesic_distance(const std::vector<double>& u, const std::vector<double>& v) {
    if (u.size() == 1) return u[0] == v[0] ? 0.0 : std::numbers::pi;
    double s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    if (s >= 1.0) return 0.0;
    if (s <= -1.0) return std::numbers::pi;
    return std::acos(s);
}

ModulusEstimate delta_hat(const SampledFunction& g, double rho, CodomainMetric metric,
                          int ladder_steps) {
    g.validate();
    if (g.size() == 0) throw std::invalid_argument("delta_hat: empty sample");
    ModulusEstimate est;
    est.rho = rho;
    const auto all = iota_ids(g.size());
    std::vector<std::size_t> anchors;
    if (g.size() <= kExactBallCap * 5) {
        anchors = all;
        est.method = "exact-ball-scan";
    } else {
        anchors = anchor_points(g, 2048);
        const auto extra = strided(all, 2048);
        anchors.insert(anchors.end(), extra.begin(), extra.end());
        est.method = "anchored-ball-scan";
    }
    auto dom_dist = [&](std::size_t a, std::size_t b) { return g.domain.distance(a, b); };
    for (double r : ladder_rhos(rho, g.rho_dom, ladder_steps))
        est.ladder.emplace_back(
            r, max_local_diam_exact(anchors, all, dom_dist, r, g.values, metric));
    est.value = est.ladder.front().second;
    return est;
}

std::vector<std::vector<double>> phi_f(const SampledFunction& f, const ConfigSample& pairs) {
    if (pairs.r != 2) throw std::invalid_argument("phi_f: pair sample required");
    f.validate();
    return phi_table(f, pairs).values;
}

ConfigSample conf2_sample_exhaustive(const SampledFunction& f, double sep, std::size_t cap) {
    f.validate();
    ConfigSample cs;
    cs.r = 2;
    cs.separation = std::numeric_limits<double>::infinity();
    const std::size_t n = f.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double d = f.domain.distance(i, j);
            if (d < sep) continue;
            if (cs.tuples.size() == cap)
                throw std::invalid_argument("conf2_sample_exhaustive: cap exceeded");
            cs.tuples.push_back({i, j});
            cs.separation = std::min(cs.separation, d);
        }
    if (cs.tuples.empty()) cs.separation = 0.0;
    return cs;
}

ConfigSample conf2_sample_hotspots(const SampledFunction& f, double rho, double sep,
                                   const SamplerBudget& budget) {
    f.validate();
    ConfigSample cs;
    cs.r = 2;
    cs.separation = sep;
    cs.group_rho = rho;
    const auto anchors = anchor_points(f, budget.max_anchors);
    for (std::size_t a : anchors) {
        const auto cluster = cluster_around(f.domain, a, rho, budget.max_cluster);
        if (cluster.empty()) continue;
        // Partners far enough that every cluster member keeps distance >= sep.
        const auto partners = image_near_partners(
            f, a, budget.partners_per_anchor,
            [&](std::size_t q) { return f.domain.distance(a, q) >= sep + rho; });
        for (std::size_t q : partners) {
            std::vector<std::size_t> group;
            group.reserve(cluster.size());
            for (std::size_t c : cluster) {
                if (c == q) continue;
                group.push_back(cs.tuples.size());
                cs.tuples.push_back({c, q});
            }
            if (!group.empty()) cs.groups.push_back(std::move(group));
        }
    }
    return cs;
}

ModulusEstimate alpha_hat(const SampledFunction& f, double rho, double sep,
                          const ConfigSample* configs, int ladder_steps) {
    f.validate();
    if (f.size() == 0) throw std::invalid_argument("alpha_hat: empty sample");
    if (sep < 2.0 * rho)
        throw std::invalid_argument("alpha_hat: sep must be at least 2*rho");
    ConfigSample local;
    if (configs == nullptr) {
        try {
            local = conf2_sample_exhaustive(f, sep, kExactBallCap);
        } catch (const std::invalid_argument&) {
            local = conf2_sample_hotspots(f, rho, sep);
        }
        configs = &local;
    }
    const TupleValueTable table = phi_table(f, *configs);
    ModulusEstimate est = estimate_over_configs(f, *configs, table, rho, ladder_steps);
    est.separation = sep;
    return est;
}

CenteredTuple conf_r_map(const SampledFunction& f, const std::vector<std::size_t>& tuple) {
    if (!f.domain.simplicial())
        throw InvalidConfiguration("conf_r_map: domain carries no face structure");
    for (std::size_t i = 0; i < tuple.size(); ++i)
        for (std::size_t j = i + 1; j < tuple.size(); ++j)
            if (!f.domain.carriers_disjoint(tuple[i], tuple[j]))
                throw InvalidConfiguration("conf_r_map: carrier faces intersect");
    const std::size_t r = tuple.size();
    const std::size_t d = f.codomain_dim();
    std::vector<double> mean(d, 0.0);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = 0; c < d; ++c) mean[c] += f.values[tuple[i]][c];
    for (auto& m : mean) m /= static_cast<double>(r);
    CenteredTuple out;
    out.parts.resize(r, std::vector<double>(d));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = 0; c < d; ++c)
            out.parts[i][c] = f.values[tuple[i]][c] - mean[c];
    return out;
}

ConfigSample conf_r_sample_exhaustive(const SampledFunction& f, int r, std::size_t cap) {
    f.validate();
    if (!f.domain.simplicial())
        throw std::invalid_argument("conf_r_sample_exhaustive: simplicial domain required");
    ConfigSample cs;
    cs.r = r;
    cs.disjoint_certified = true;
    const std::size_t n = f.size();
    std::vector<std::size_t> tuple(static_cast<std::size_t>(r));
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == static_cast<std::size_t>(r)) {
            if (cs.tuples.size() == cap)
                throw std::invalid_argument("conf_r_sample_exhaustive: cap exceeded");
            cs.tuples.push_back(tuple);
            return;
        }
        for (std::size_t i = 0; i < n; ++i) {
            bool ok = true;
            for (std::size_t p = 0; p < pos; ++p)
                if (!f.domain.carriers_disjoint(tuple[p], i)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            tuple[pos] = i;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    cs.separation = std::numeric_limits<double>::infinity();
    for (const auto& t : cs.tuples)
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = i + 1; j < t.size(); ++j)
                cs.separation = std::min(cs.separation, f.domain.distance(t[i], t[j]));
    if (cs.tuples.empty()) cs.separation = 0.0;
    return cs;
}

ConfigSample conf_r_sample_hotspots(const SampledFunction& f, int r, double rho,
                                    const SamplerBudget& budget) {
    f.validate();
    if (!f.domain.simplicial())
        throw std::invalid_argument("conf_r_sample_hotspots: simplicial domain required");
    ConfigSample cs;
    cs.r = r;
    cs.disjoint_certified = true;
    cs.group_rho = rho;
    cs.separation = std::numeric_limits<double>::infinity();
    const auto anchors = anchor_points(f, budget.max_anchors);

    for (std::size_t a : anchors) {
        const auto cluster = cluster_around(f.domain, a, rho, budget.max_cluster);
        if (cluster.empty()) continue;
        const auto partners = image_near_partners(
            f, a, budget.partners_per_anchor,
            [&](std::size_t q) { return f.domain.carriers_disjoint(a, q); });

        // Partner tuples: (r-1)-tuples from the partner pool, pairwise
        // disjoint. For r = 2 this is just the partner list.
        std::vector<std::vector<std::size_t>> partner_tuples;
        std::vector<std::size_t> pt(static_cast<std::size_t>(r) - 1);
        auto rec = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
            if (partner_tuples.size() >= budget.partners_per_anchor) return;
            if (pos + 1 == static_cast<std::size_t>(r)) {
                partner_tuples.push_back(pt);
                return;
            }
            for (std::size_t s = start; s < partners.size(); ++s) {
                bool ok = true;
                for (std::size_t p = 0; p < pos; ++p)
                    if (!f.domain.carriers_disjoint(pt[p], partners[s])) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                pt[pos] = partners[s];
                self(self, pos + 1, s + 1);
            }
        };
        rec(rec, 0, 0);

        for (const auto& ptuple : partner_tuples) {
            std::vector<std::size_t> group;
            for (std::size_t c : cluster) {
                bool ok = true;
                for (std::size_t q : ptuple)
                    if (c == q || !f.domain.carriers_disjoint(c, q)) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                std::vector<std::size_t> tup{c};
                tup.insert(tup.end(), ptuple.begin(), ptuple.end());
                for (std::size_t i = 0; i < tup.size(); ++i)
                    for (std::size_t j = i + 1; j < tup.size(); ++j)
                        cs.separation =
                            std::min(cs.separation, f.domain.distance(tup[i], tup[j]));
                group.push_back(cs.tuples.size());
                cs.tuples.push_back(std::move(tup));
            }
            if (!group.empty()) cs.groups.push_back(std::move(group));
        }
    }
    if (cs.tuples.empty()) cs.separation = 0.0;
    return cs;
}

ModulusEstimate alpha_r_hat(const SampledFunction& f, int r, double rho,
                            const ConfigSample* configs, int ladder_steps) {
    f.validate();
    if (r < 2) throw std::invalid_argument("alpha_r_hat: r must be >= 2");
    ConfigSample local;
    if (configs == nullptr) {
        bool exhaustive_ok = true;
        try {
            local = conf_r_sample_exhaustive(f, r, kExactBallCap);
        } catch (const std::invalid_argument&) {
            exhaustive_ok = false;
        }
        if (!exhaustive_ok) local = conf_r_sample_hotspots(f, r, rho);
        configs = &local;
    }
    if (configs->r != r) throw std::invalid_argument("alpha_r_hat: sample arity mismatch");
    const TupleValueTable table = nu_conf_table(f, *configs);
    return estimate_over_configs(f, *configs, table, rho, ladder_steps);
}

double kappa_r(const SampledFunction& f, int r, const ConfigSample& configs) {
    f.validate();
    if (configs.r != r) throw std::invalid_argument("kappa_r: sample arity mismatch");
    double best = std::numeric_limits<double>::infinity();
    for (const auto& t : configs.tuples) {
        double s = 0.0;
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = 0; j < t.size(); ++j) {
                const double d = euclidean_distance(f.values[t[i]], f.values[t[j]]);
                s += d * d;
            }
        best = std::min(best, std::sqrt(s) / static_cast<double>(r));
    }
    return configs.tuples.empty() ? 0.0 : best;
}

double kappa_inf(const SampledFunction& g) {
    g.validate();
    double best = std::numeric_limits<double>::infinity();
    for (const auto& v : g.values) {
        double s = 0.0;
        for (double c : v) s += c * c;
        best = std::min(best, std::sqrt(s));
    }
    return g.values.empty() ? 0.0 : best;
}

} // namespace disco
