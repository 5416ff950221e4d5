#include "doctest.h"

#include <cmath>
#include <fstream>
#include <numbers>

#include "discotop/errors.hpp"
#include "discotop/estimators.hpp"
#include "discotop/lemma_chain.hpp"
#include "discotop/experiments.hpp"

using namespace disco;
using std::numbers::pi;

namespace {

SampledFunction on_unit_grid(int n, const std::vector<std::vector<double>>& values) {
    SampledFunction f;
    f.domain = interval_grid(n);
    f.values = values;
    f.rho_dom = 1.0 / n;
    return f;
}

SampledFunction scalar_on_grid(int n, double (*g)(double)) {
    std::vector<std::vector<double>> vals;
    for (int i = 0; i <= n; ++i) vals.push_back({g(static_cast<double>(i) / n)});
    return on_unit_grid(n, vals);
}

} // namespace

TEST_CASE("delta-hat basics on the unit grid") {
    const SampledFunction c = scalar_on_grid(100, +[](double) { return 0.5; });
    for (double rho : {0.02, 0.1, 0.5})
        CHECK(delta_hat(c, rho, CodomainMetric::euclidean).value == 0.0);

    const SampledFunction step =
        scalar_on_grid(100, +[](double x) { return x >= 0.5 ? 1.0 : 0.0; });
    CHECK(delta_hat(step, 0.02, CodomainMetric::euclidean).value == 1.0);

    const SampledFunction id = scalar_on_grid(100, +[](double x) { return x; });
    CHECK(delta_hat(id, 0.02, CodomainMetric::euclidean).value ==
          doctest::Approx(0.04).epsilon(1e-12));

    SampledFunction empty;
    empty.rho_dom = 0.1;
    CHECK_THROWS_AS(delta_hat(empty, 0.1, CodomainMetric::euclidean), std::invalid_argument);
}

TEST_CASE("delta-hat ladder is nondecreasing in rho") {
    const SampledFunction step =
        scalar_on_grid(200, +[](double x) { return x >= 0.3 ? std::sin(9.0 * x) : 4.0 * x; });
    const ModulusEstimate est = delta_hat(step, 0.16, CodomainMetric::euclidean, 5);
    REQUIRE(est.ladder.size() > 2);
    for (std::size_t i = 1; i < est.ladder.size(); ++i) {
        CHECK(est.ladder[i].first < est.ladder[i - 1].first);
        CHECK(est.ladder[i].second <= est.ladder[i - 1].second);
    }
}

TEST_CASE("delta-hat is monotone under nonexpansive precomposition") {
    const SampledFunction g =
        scalar_on_grid(100, +[](double x) { return x >= 0.5 ? x * x + 1.0 : std::cos(3.0 * x); });
    // h contracts the grid by two: h(i/100) = floor(i/2)/100
    SampledFunction gh = g;
    for (int i = 0; i <= 100; ++i)
        gh.values[static_cast<std::size_t>(i)] = g.values[static_cast<std::size_t>(i / 2)];
    for (double rho : {0.01, 0.04, 0.09})
        CHECK(delta_hat(gh, rho, CodomainMetric::euclidean).value <=
              delta_hat(g, rho, CodomainMetric::euclidean).value);
}

TEST_CASE("phi on pairs: signs, antisymmetry, and the planar example") {
    const SampledFunction mono = scalar_on_grid(50, +[](double x) { return 3.0 * x + 1.0; });
    const ConfigSample pairs = conf2_sample_exhaustive(mono, 0.2);
    const auto dirs = phi_f(mono, pairs);
    for (std::size_t t = 0; t < pairs.tuples.size(); ++t) {
        const double x = mono.domain.points[pairs.tuples[t][0]][0];
        const double y = mono.domain.points[pairs.tuples[t][1]][0];
        CHECK(dirs[t][0] == (x > y ? 1.0 : -1.0));
    }

    SampledFunction plane;
    plane.domain.kind = DomainKind::euclidean;
    plane.domain.points = {{0.0, 0.0}, {1.0, 0.0}, {0.25, 0.9}};
    plane.values = plane.domain.points; // identity on the plane
    plane.rho_dom = 0.5;
    ConfigSample ps;
    ps.r = 2;
    ps.tuples = {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}};
    const auto u = phi_f(plane, ps);
    CHECK(u[0][0] == -1.0);
    CHECK(u[0][1] == 0.0);
    for (std::size_t t = 0; t + 1 < ps.tuples.size(); t += 2) {
        CHECK(u[t][0] == -u[t + 1][0]); // exact antisymmetry
        CHECK(u[t][1] == -u[t + 1][1]);
    }

    SampledFunction collide = plane;
    collide.values[1] = collide.values[0];
    try {
        phi_f(collide, ps);
        FAIL("expected NotInjective");
    } catch (const NotInjective& e) {
        CHECK(((e.first == 0 && e.second == 1) || (e.first == 1 && e.second == 0)));
    }
}

TEST_CASE("alpha-hat of an affine planar injection is small at grid resolution") {
    SampledFunction f;
    f.domain.kind = DomainKind::euclidean;
    const int n = 100;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            const double x = static_cast<double>(i) / n, y = static_cast<double>(j) / n;
            f.domain.points.push_back({x, y});
            f.values.push_back({x + 0.3 * y + 1.0, 0.2 * x + y});
        }
    f.rho_dom = 1.0 / n;
    const ModulusEstimate est = alpha_hat(f, f.rho_dom, 0.8);
    CHECK(est.value <= 0.05);

    // wider balls, no small-angle claim: the group-path ladder stays monotone
    const ModulusEstimate wide = alpha_hat(f, 4.0 * f.rho_dom, 0.8, nullptr, 3);
    REQUIRE(wide.ladder.size() > 1);
    for (std::size_t i = 1; i < wide.ladder.size(); ++i)
        CHECK(wide.ladder[i].second <= wide.ladder[i - 1].second);
}

TEST_CASE("alpha-hat rejects sep below twice rho") {
    const SampledFunction id = scalar_on_grid(20, +[](double x) { return x; });
    CHECK_THROWS_AS(alpha_hat(id, 0.2, 0.3), std::invalid_argument);
}

TEST_CASE("alpha-hat of line-valued maps lands in {0, pi} exactly") {
    // dyadic grid and dyadic values keep the normalized differences at
    // exactly (+-1, 0)
    const int n = 64;
    SampledFunction f;
    f.domain = interval_grid(n);
    for (int i = 0; i <= n; ++i) {
        const double x = static_cast<double>(i) / n;
        f.values.push_back({x < 0.5 ? x + 1.5 : x, 0.0});
    }
    f.rho_dom = 1.0 / n;
    const double a_nonmono = alpha_hat(f, 0.1, 0.25).value;
    CHECK(a_nonmono == pi);

    SampledFunction g = f;
    for (int i = 0; i <= n; ++i) {
        const double x = static_cast<double>(i) / n;
        g.values[static_cast<std::size_t>(i)] = {x < 0.5 ? x : x + 1.5, 0.0};
    }
    const double a_mono = alpha_hat(g, 0.1, 0.25).value;
    CHECK(a_mono == 0.0);
}

TEST_CASE("centered tuples: algebra, equivariance, and errors") {
    SampledFunction f;
    f.domain = barycentric_grid(simplex_skeleton(2, 2), 4);
    f.values.assign(f.domain.size(), {0.0, 0.0});
    f.rho_dom = 0.5;
    // locate the three vertices
    std::size_t v0 = 0, v1 = 0, v2 = 0;
    for (std::size_t i = 0; i < f.domain.size(); ++i) {
        if (f.domain.carrier[i] == Face{0}) v0 = i;
        if (f.domain.carrier[i] == Face{1}) v1 = i;
        if (f.domain.carrier[i] == Face{2}) v2 = i;
    }
    f.values[v0] = {1.0, 2.0};
    f.values[v1] = {5.0, -2.0};

    const CenteredTuple two = conf_r_map(f, {v0, v1});
    CHECK(two.parts[0][0] == doctest::Approx((1.0 - 5.0) / 2.0));
    CHECK(two.parts[0][1] == doctest::Approx((2.0 + 2.0) / 2.0));
    CHECK(two.parts[1][0] == -two.parts[0][0]);
    CHECK(two.parts[1][1] == -two.parts[0][1]);
    for (std::size_t c = 0; c < 2; ++c)
        CHECK(std::fabs(two.parts[0][c] + two.parts[1][c]) <= 1e-12);

    // permuting inputs permutes outputs
    const CenteredTuple three = conf_r_map(f, {v0, v1, v2});
    const CenteredTuple swapped = conf_r_map(f, {v1, v0, v2});
    CHECK(three.parts[0] == swapped.parts[1]);
    CHECK(three.parts[1] == swapped.parts[0]);
    CHECK(three.parts[2] == swapped.parts[2]);

    // all-equal values collapse to the zero tuple
    SampledFunction zero = f;
    zero.values.assign(zero.domain.size(), {3.0, 3.0});
    CHECK(conf_r_map(zero, {v0, v1}).norm() == 0.0);

    // entries in intersecting faces are rejected
    std::size_t edge01 = 0;
    for (std::size_t i = 0; i < f.domain.size(); ++i)
        if (f.domain.carrier[i] == Face{0, 1}) edge01 = i;
    CHECK_THROWS_AS(conf_r_map(f, {v0, edge01}), InvalidConfiguration);
}

TEST_CASE("alpha-r-hat of an affine segment map is zero") {
    SampledFunction f;
    f.domain = barycentric_grid(simplex_skeleton(1, 1), 16);
    for (std::size_t i = 0; i < f.domain.size(); ++i)
        f.values.push_back({3.0 * f.domain.points[i][1] + 1.0});
    f.rho_dom = std::numbers::sqrt2 / 16;
    CHECK(alpha_r_hat(f, 2, 0.2).value == 0.0);
}

TEST_CASE("alpha-r-hat flags collapsed configurations") {
    SampledFunction f;
    f.domain = barycentric_grid(simplex_skeleton(1, 1), 4);
    f.values.assign(f.domain.size(), {1.0});
    f.rho_dom = 0.5;
    CHECK_THROWS_AS(alpha_r_hat(f, 2, 0.2), NotAlmostRInjective);
}

TEST_CASE("kappa values") {
    SampledFunction f;
    f.domain = barycentric_grid(simplex_skeleton(1, 1), 4);
    f.values.assign(f.domain.size(), {0.0});
    f.rho_dom = 0.5;
    std::size_t v0 = 0, v1 = 0;
    for (std::size_t i = 0; i < f.domain.size(); ++i) {
        if (f.domain.carrier[i] == Face{0}) v0 = i;
        if (f.domain.carrier[i] == Face{1}) v1 = i;
    }
    f.values[v1] = {1.0};
    ConfigSample one;
    one.r = 2;
    one.tuples = {{v0, v1}};
    CHECK(kappa_r(f, 2, one) == doctest::Approx(std::sqrt(2.0) / 2.0));

    SampledFunction flat = f;
    flat.values.assign(flat.domain.size(), {2.0});
    CHECK(kappa_r(flat, 2, one) == 0.0);

    SampledFunction g;
    g.domain = interval_grid(2);
    g.values = {{1.0, 0.0}, {0.0, -2.0}, {3.0, 0.0}};
    g.rho_dom = 0.5;
    CHECK(kappa_inf(g) == 1.0);
    double brute = 1e300;
    for (const auto& v : g.values) brute = std::min(brute, std::hypot(v[0], v[1]));
    CHECK(kappa_inf(g) == brute);

    SampledFunction cv;
    cv.domain = interval_grid(1);
    cv.values = {{3.0, 4.0}, {3.0, 4.0}};
    cv.rho_dom = 1.0;
    CHECK(kappa_inf(cv) == 5.0);
}

TEST_CASE("normalization inequality worked examples") {
    // x = (1,0), y = (0,2): min norm * chord = sqrt(2) <= sqrt(5)
    const double lhs = 1.0 * std::hypot(1.0 - 0.0, 0.0 - 1.0);
    const double rhs = std::hypot(1.0, 2.0);
    CHECK(lhs == doctest::Approx(std::sqrt(2.0)));
    CHECK(rhs == doctest::Approx(std::sqrt(5.0)));
    CHECK(lhs <= rhs);

    // two points, values 0 and 1: 2r * sum ||y_i - mean||^2 = sum ||y_i - y_j||^2
    const double lhs2 = 2.0 * 2.0 * (0.25 + 0.25);
    const double rhs2 = 2.0 * 1.0;
    CHECK(lhs2 == rhs2);
}

TEST_CASE("lemma chain passes on seeded random functions") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 99ULL}) {
        const SampledFunction f = random_patch_function(6, seed);
        const LemmaChainReport rep = verify_lemma_chain(f, 2, 0.5);
        for (const auto& chk : rep.checks) {
            INFO(chk.name, " seed ", seed, " lhs=", chk.lhs, " rhs=", chk.rhs);
            CHECK(chk.pass);
        }
        CHECK(rep.config_count > 0);
    }
}

TEST_CASE("config samples validate and export") {
    const SampledFunction f = random_patch_function(5, 4);
    ConfigSample cs = conf_r_sample_exhaustive(f, 2);
    cs.validate(f.domain);
    CHECK(cs.disjoint_certified);
    CHECK(cs.separation > 0.0);

    ConfigSample bad = cs;
    bad.tuples.push_back({0, 0});
    CHECK_THROWS_AS(bad.validate(f.domain), std::invalid_argument);

    const std::string path = "/tmp/discotop_test_configs.csv";
    cs.write_csv(path);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "i0,i1");
    std::size_t rows = 0;
    for (std::string line; std::getline(in, line);) ++rows;
    CHECK(rows == cs.tuples.size());
}
