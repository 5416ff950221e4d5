#include "discotop/experiments.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "discotop/homology.hpp"
#include "discotop/lemma_chain.hpp"
#include "discotop/rng.hpp"
#include "discotop/vietoris_rips.hpp"

namespace disco {

namespace {

nlohmann::ordered_json betti_json(const BettiVector& b) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (long v : b) j.push_back(v);
    return j;
}

CheckResult betti_check(const std::string& name, const std::string& citation,
                        const BettiVector& got, const BettiVector& want) {
    CheckResult c;
    c.name = name;
    c.citation = citation;
    c.pass = got == want;
    c.value = c.pass ? 1.0 : 0.0;
    c.bound = 1.0;
    c.extra["betti"] = betti_json(got);
    c.extra["expected"] = betti_json(want);
    return c;
}

} // namespace

ModulusEstimate measure_witness_modulus(const WitnessResult& w, ConfigSample* configs_out) {
    const SampledFunction& f = w.fn;
    switch (w.spec.kind) {
    case WitnessKind::digit_interleave: {
        const double rho = 2.0 / w.spec.grid;
        const ConfigSample cs = conf2_sample_hotspots(f, rho, 2.0 * rho);
        if (configs_out) *configs_out = cs;
        return alpha_hat(f, rho, 2.0 * rho, &cs);
    }
    case WitnessKind::k5_jump: {
        SamplerBudget budget;
        budget.max_anchors = 16;
        budget.max_cluster = 64;
        budget.partners_per_anchor = 64;
        const ConfigSample cs = conf_r_sample_hotspots(f, 2, 0.05, budget);
        if (configs_out) *configs_out = cs;
        return alpha_r_hat(f, 2, 0.05, &cs);
    }
    case WitnessKind::tverberg_one_point: {
        const ConfigSample cs = conf_r_sample_exhaustive(f, 2);
        if (configs_out) *configs_out = cs;
        return alpha_r_hat(f, 2, 4.0 / w.spec.grid, &cs);
    }
    case WitnessKind::equatorial_odd:
        return delta_hat(f, 0.2, CodomainMetric::sphere_geodesic);
    case WitnessKind::monotone_step:
    case WitnessKind::nonmonotone_step: {
        SamplerBudget budget;
        budget.max_anchors = 64;
        const ConfigSample cs = conf2_sample_hotspots(f, 0.1, 0.25, budget);
        if (configs_out) *configs_out = cs;
        return alpha_hat(f, 0.1, 0.25, &cs);
    }
    }
    return {};
}

SampledFunction random_patch_function(int q, std::uint64_t seed) {
    SampledFunction f;
    f.domain = barycentric_grid(simplex_skeleton(2, 2), q);
    const std::size_t n = f.domain.size();
    CounterRng rng(seed);

    double A[2][3];
    for (auto& row : A)
        for (double& a : row) a = rng.gaussian();
    const std::size_t sites = 4;
    std::vector<std::size_t> site_at(sites);
    for (auto& s : site_at) s = rng.below(n);
    std::vector<std::array<double, 2>> jump(sites);
    for (auto& jv : jump) jv = {0.5 * rng.gaussian(), 0.5 * rng.gaussian()};

    f.values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t owner = 0;
        for (std::size_t s = 1; s < sites; ++s)
            if (f.domain.distance(i, site_at[s]) < f.domain.distance(i, site_at[owner]))
                owner = s;
        const auto& b = f.domain.points[i];
        f.values.push_back({A[0][0] * b[0] + A[0][1] * b[1] + A[0][2] * b[2] + jump[owner][0],
                            A[1][0] * b[0] + A[1][1] * b[1] + A[1][2] * b[2] + jump[owner][1]});
    }
    f.rho_dom = std::numbers::sqrt2 / q;
    return f;
}

Report vkf_experiment(int d, int grid, double offset) {
    Report rep;
    rep.experiment = "vkf";
    rep.prng = kRngName;
    rep.config = {{"d", d}, {"grid", grid}, {"offset", offset}};

    const SimplicialComplex skel = simplex_skeleton(2 * d + 2, d);
    const BettiVector got = betti_numbers(chain_complex(deleted_join2(skel)));
    BettiVector want(static_cast<std::size_t>(2 * d + 2), 0);
    want[0] = 1;
    want[static_cast<std::size_t>(2 * d + 1)] = 1;
    rep.checks.push_back(betti_check("deleted-join-homology-sphere",
                                     "deleted-join-sphere-identification", got, want));

    const BoundReport oracle = bound_oracle(VanKampenFlores{d});
    if (d == 1) {
        WitnessSpec spec;
        spec.kind = WitnessKind::k5_jump;
        spec.grid = grid;
        spec.offset = offset;
        const WitnessResult w = build_witness(spec);
        const ModulusEstimate est = measure_witness_modulus(w);
        CheckResult c;
        c.name = "k5-alpha2-lower-bound";
        c.citation = oracle.citation;
        c.value = est.value;
        c.bound = oracle.bound;
        c.tolerance = 0.05;
        c.exact = false;
        c.pass = est.value >= oracle.bound - c.tolerance;
        c.ladder = est.ladder;
        c.extra["pair_metric"] = "max-over-coordinates";
        c.extra["witness_verified"] = w.verified;
        c.extra["min_disjoint_image_distance"] = w.min_disjoint_image_distance;
        rep.checks.push_back(std::move(c));
    } else {
        CheckResult c;
        c.name = "alpha2-bound-oracle";
        c.citation = oracle.citation;
        c.value = oracle.bound;
        c.bound = oracle.bound;
        c.pass = true;
        rep.checks.push_back(std::move(c));
    }
    return rep;
}

Report tverberg_experiment(int r, int d, int grid) {
    Report rep;
    rep.experiment = "tverberg";
    rep.prng = kRngName;
    rep.config = {{"r", r}, {"d", d}, {"grid", grid}};

    const BoundReport oracle = bound_oracle(Tverberg{r, d});
    if (r == 2 && d == 1) {
        WitnessSpec spec;
        spec.kind = WitnessKind::tverberg_one_point;
        spec.grid = grid;
        const WitnessResult w = build_witness(spec);
        const ModulusEstimate est = measure_witness_modulus(w);
        CheckResult c;
        c.name = "tverberg-alpha2-exact";
        c.citation = oracle.citation;
        c.value = est.value;
        c.bound = oracle.bound; // arccos(-1) = pi
        c.pass = est.value == oracle.bound;
        c.ladder = est.ladder;
        c.extra["pair_metric"] = "max-over-coordinates";
        c.extra["witness_verified"] = w.verified;
        rep.checks.push_back(std::move(c));

        // Ratio corollary, in its sample-exact form.
        const double rho = 4.0 / grid;
        const LemmaChainReport chain = verify_lemma_chain(w.fn, 2, rho);
        const BoundReport ratio = bound_oracle(TverbergKappaDelta{r, d});
        CheckResult rc;
        rc.name = "tverberg-delta-kappa-ratio";
        rc.citation = ratio.citation;
        rc.value = chain.kappa_r_value > 0.0 ? chain.delta_f / chain.kappa_r_value : 0.0;
        rc.bound = ratio.bound;
        rc.pass = chain.delta_f >=
                  std::numbers::sqrt2 * std::sin(chain.alpha_r / 2.0) * chain.kappa_r_value;
        rc.extra["delta_f"] = chain.delta_f;
        rc.extra["kappa_r"] = chain.kappa_r_value;
        rc.extra["alpha_r"] = chain.alpha_r;
        rep.checks.push_back(std::move(rc));
    } else {
        CheckResult c;
        c.name = "alpha-r-bound-oracle";
        c.citation = oracle.citation;
        c.value = oracle.bound;
        c.bound = oracle.bound;
        c.pass = true;
        rep.checks.push_back(std::move(c));
    }
    return rep;
}

Report sphere_homology_experiment(int d) {
    Report rep;
    rep.experiment = "sphere-homology";
    rep.prng = kRngName;
    rep.config = {{"d", d}};

    const FiniteMetricSample hex = ngon_sample(6);
    rep.checks.push_back(betti_check(
        "vr-hexagon-two-thirds-pi", "circle-rips-odd-sphere-proxy",
        betti_numbers(chain_complex(vr_complex(
            hex, {2.0 * std::numbers::pi / 3.0, VRThreshold::Convention::weak}, 3))),
        {1, 0, 1}));
    rep.checks.push_back(betti_check(
        "vr-hexagon-third-pi", "circle-rips-odd-sphere-proxy",
        betti_numbers(chain_complex(
            vr_complex(hex, {std::numbers::pi / 3.0, VRThreshold::Convention::weak}, 3))),
        {1, 1}));

    const SimplicialComplex skel = simplex_skeleton(2 * d + 2, d);
    const BettiVector got = betti_numbers(chain_complex(deleted_join2(skel)));
    BettiVector want(static_cast<std::size_t>(2 * d + 2), 0);
    want[0] = 1;
    want[static_cast<std::size_t>(2 * d + 1)] = 1;
    rep.checks.push_back(betti_check("deleted-join-homology-sphere",
                                     "deleted-join-sphere-identification", got, want));
    return rep;
}

Report lemma_suite_experiment(std::uint64_t seed, int count, int q,
                              std::size_t random_pairs) {
    Report rep;
    rep.experiment = "lemma-suite";
    rep.prng = kRngName;
    rep.seed = seed;
    rep.config = {{"seed", seed}, {"count", count}, {"q", q}, {"random_pairs", random_pairs}};

    // (a) normalization inequality on seeded random vector pairs.
    {
        CounterRng rng(seed, 1);
        std::size_t violations = 0;
        double worst = -std::numeric_limits<double>::infinity();
        for (std::size_t p = 0; p < random_pairs; ++p) {
            const std::size_t dim = 1 + p % 4;
            std::vector<double> x(dim), y(dim);
            double nx = 0.0, ny = 0.0;
            do {
                nx = 0.0;
                for (auto& c : x) {
                    c = rng.gaussian();
                    nx += c * c;
                }
            } while (nx < 1e-12);
            do {
                ny = 0.0;
                for (auto& c : y) {
                    c = rng.gaussian();
                    ny += c * c;
                }
            } while (ny < 1e-12);
            nx = std::sqrt(nx);
            ny = std::sqrt(ny);
            double chord = 0.0, dist = 0.0;
            for (std::size_t c = 0; c < dim; ++c) {
                const double u = x[c] / nx - y[c] / ny;
                chord += u * u;
                const double v = x[c] - y[c];
                dist += v * v;
            }
            const double lhs = std::min(nx, ny) * std::sqrt(chord);
            const double rhs = std::sqrt(dist);
            worst = std::max(worst, lhs - rhs);
            if (lhs > rhs + 1e-9) ++violations;
        }
        CheckResult c;
        c.name = "normalization-inequality-random-pairs";
        c.citation = "normalization-distance-inequality";
        c.value = static_cast<double>(violations);
        c.bound = 0.0;
        c.tolerance = 1e-9;
        c.exact = false;
        c.pass = violations == 0;
        c.extra["pairs"] = random_pairs;
        c.extra["worst_margin"] = worst;
        rep.checks.push_back(std::move(c));
    }

    // (b)-(d) across seeded random functions.
    const double rho = 3.0 / q;
    std::size_t fail_b = 0, fail_c = 0, fail_d = 0, fail_a = 0;
    for (int i = 0; i < count; ++i) {
        const SampledFunction f = random_patch_function(q, splitmix64(seed) + static_cast<std::uint64_t>(i));
        const LemmaChainReport chain = verify_lemma_chain(f, 2, rho);
        for (const auto& chk : chain.checks) {
            if (chk.pass) continue;
            if (chk.name == "normalization-distance-inequality") ++fail_a;
            if (chk.name == "centered-map-delta-bound") ++fail_b;
            if (chk.name == "kappa-identity") ++fail_c;
            if (chk.name == "delta-alpha-kappa-bound") ++fail_d;
        }
    }
    auto aggregate = [&](const std::string& name, const std::string& citation,
                         std::size_t fails, double tol) {
        CheckResult c;
        c.name = name;
        c.citation = citation;
        c.value = static_cast<double>(fails);
        c.bound = 0.0;
        c.tolerance = tol;
        c.exact = tol == 0.0;
        c.pass = fails == 0;
        c.extra["functions"] = count;
        rep.checks.push_back(std::move(c));
    };
    aggregate("normalization-inequality-on-samples", "normalization-distance-inequality",
              fail_a, 1e-9);
    aggregate("centered-map-delta-bound", "centered-map-delta-bound", fail_b, 0.0);
    aggregate("kappa-identity", "kappa-identity", fail_c, 1e-9);
    aggregate("delta-alpha-kappa-bound", "delta-alpha-kappa-bound", fail_d, 0.0);
    return rep;
}

Report constants_table_report(int n, int k_max) {
    Report rep;
    rep.experiment = "constants";
    rep.prng = kRngName;
    rep.config = {{"n", n}, {"k_max", k_max}};
    for (int k = n; k <= k_max; ++k) {
        const ConstantValue c = c_constant(n, k);
        CheckResult chk;
        std::ostringstream name;
        name << "c(" << n << "," << k << ")";
        chk.name = name.str();
        chk.citation = c.provenance.empty() ? "" : c.provenance.front();
        chk.value = c.exact ? *c.exact : c.lower;
        chk.bound = c.lower;
        chk.exact = c.exact.has_value();
        chk.pass = true;
        if (c.upper) chk.extra["upper"] = *c.upper;
        chk.extra["provenance"] = c.provenance;
        rep.checks.push_back(std::move(chk));
    }
    return rep;
}

Report bound_report(const Scenario& s) {
    Report rep;
    rep.experiment = "bound";
    rep.prng = kRngName;
    const BoundReport b = bound_oracle(s);
    CheckResult c;
    c.name = "bound";
    c.citation = b.citation;
    c.value = b.bound;
    c.bound = b.bound;
    c.exact = b.exact_constant;
    c.pass = true;
    c.extra["quantity"] = quantity_name(b.quantity);
    c.extra["conditions"] = nlohmann::ordered_json::array();
    for (const auto& cond : b.conditions)
        c.extra["conditions"].push_back(
            {{"name", cond.name}, {"pass", cond.pass}, {"assumed", cond.assumed}});
    rep.checks.push_back(std::move(c));
    return rep;
}

} // namespace disco
