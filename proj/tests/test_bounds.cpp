#include "doctest.h"

#include <cmath>
#include <numbers>

#include "discotop/bound_oracle.hpp"
#include "discotop/constants.hpp"
#include "discotop/errors.hpp"

using namespace disco;
using std::numbers::pi;

TEST_CASE("simplex diameter constants") {
    CHECK(r_constant(0) == pi); // arccos(-1)
    CHECK(r_constant(1) == doctest::Approx(2.0 * pi / 3.0));
    CHECK(r_constant(3) == std::acos(-0.25));
    CHECK(r_constant(3) == doctest::Approx(1.8235).epsilon(1e-4));
    CHECK_THROWS_AS(r_constant(-1), std::invalid_argument);

    // strictly monotone from pi down toward pi/2
    for (int n = 0; n < 20; ++n) {
        CHECK(r_constant(n) > r_constant(n + 1));
        CHECK(r_constant(n + 1) < pi);
        CHECK(r_constant(n + 1) > pi / 2.0);
    }
}

TEST_CASE("scale constants: exact families") {
    const ConstantValue c01 = c_constant(0, 1);
    REQUIRE(c01.exact.has_value());
    CHECK(*c01.exact == pi);

    const ConstantValue c14 = c_constant(1, 4);
    REQUIRE(c14.exact.has_value());
    CHECK(*c14.exact == (2.0 * pi * 2.0) / 5.0); // circle formula at m = 2

    for (int n : {0, 1, 2, 3}) {
        const ConstantValue diag = c_constant(n, n);
        REQUIRE(diag.exact.has_value());
        CHECK(*diag.exact == 0.0);
        for (int k : {n + 1, n + 2}) {
            const ConstantValue v = c_constant(n, k);
            REQUIRE(v.exact.has_value());
            if (n == 1) // circle branch: same real value, one ulp from acos(-1/2)
                CHECK(*v.exact == doctest::Approx(r_constant(n)).epsilon(1e-15));
            else
                CHECK(*v.exact == r_constant(n));
        }
    }
    CHECK_THROWS_AS(c_constant(2, 1), std::invalid_argument);
}

TEST_CASE("scale constants: lower bounds when no exact value is known") {
    const ConstantValue c25 = c_constant(2, 5);
    CHECK_FALSE(c25.exact.has_value());
    CHECK_FALSE(c25.upper.has_value());
    CHECK(c25.lower >= r_constant(2));
    CHECK_FALSE(c25.provenance.empty());
}

TEST_CASE("every exact circle constant dominates the covering lower bound") {
    for (int k = 1; k <= 9; ++k) {
        const ConstantValue c = c_constant(1, k);
        REQUIRE(c.exact.has_value());
        CHECK(*c.exact >= covering_lower_bound(1, k) - 1e-12);
    }
}

TEST_CASE("covering radius upper bounds") {
    for (int k = 1; k <= 8; ++k) CHECK(cov_upper(1, k) == pi / (2.0 * k));
    CHECK(covering_lower_bound(1, 4) == pi - 2.0 * (pi / 8.0));
    CHECK(covering_lower_bound(1, 4) == 3.0 * pi / 4.0);
    CHECK(covering_lower_bound(1, 4) <= *c_constant(1, 4).exact);

    // monotone in k under the same seed schedule
    double prev = cov_upper(2, 1, 600, 5);
    for (int k = 2; k <= 5; ++k) {
        const double cur = cov_upper(2, k, 600, 5);
        CHECK(cur <= prev);
        prev = cur;
    }
    // sane range on the projective plane, deterministic per seed
    const double c = cov_upper(2, 4, 600, 5);
    CHECK(c > 0.0);
    CHECK(c <= pi / 2.0);
    CHECK(c == cov_upper(2, 4, 600, 5));
    CHECK(cov_upper(0, 3) == 0.0);
}

TEST_CASE("prime power recognition") {
    CHECK(is_prime_power(2));
    CHECK(is_prime_power(3));
    CHECK(is_prime_power(4));
    CHECK_FALSE(is_prime_power(6));
    CHECK(is_prime_power(8));
    CHECK(is_prime_power(9));
    CHECK_FALSE(is_prime_power(12));
    CHECK(is_prime_power(16));
    CHECK(is_prime_power(27));
    CHECK_FALSE(is_prime_power(100));
    CHECK_THROWS_AS(is_prime_power(1), std::invalid_argument);
}

TEST_CASE("bound oracle positive cases") {
    const BoundReport rp = bound_oracle(ProjectivePowerOfTwo{1});
    CHECK(rp.bound == std::acos(-1.0 / 3.0));
    CHECK(rp.quantity == BoundedQuantity::alpha);

    const BoundReport vkf = bound_oracle(VanKampenFlores{1});
    CHECK(vkf.bound == std::acos(-0.5));
    CHECK(vkf.quantity == BoundedQuantity::alpha2);

    const BoundReport tv = bound_oracle(Tverberg{2, 1});
    CHECK(tv.bound == pi); // arccos(-1)
    CHECK(tv.quantity == BoundedQuantity::alpha_r);

    const BoundReport kd = bound_oracle(TverbergKappaDelta{2, 1});
    CHECK(kd.bound == std::sqrt(2.0));
    CHECK(kd.quantity == BoundedQuantity::delta_over_kappa_r);

    const BoundReport gen = bound_oracle(GeneralConf2{3});
    CHECK(gen.bound == r_constant(2));

    const BoundReport sph = bound_oracle(SphereToEuclidean{4, 2}); // S^4 -> R^2
    CHECK(sph.bound == *c_constant(1, 4).exact);
    CHECK(sph.exact_constant);

    const BoundReport euc = bound_oracle(EuclideanToEuclidean{2, 1}); // R^2 -> R^1
    CHECK(euc.bound == pi);

    const BoundReport hw = bound_oracle(HaefligerWeber{1, 4}); // 2*4 > 3*2
    CHECK(hw.bound == r_constant(3));
    bool has_assumed = false;
    for (const auto& c : hw.conditions) has_assumed |= c.assumed;
    CHECK(has_assumed);
}

TEST_CASE("bound oracle refuses out-of-hypothesis scenarios") {
    try {
        bound_oracle(Tverberg{6, 19});
        FAIL("expected InapplicableTheorem");
    } catch (const InapplicableTheorem& e) {
        CHECK(e.condition == "r is a prime power");
    }
    try {
        bound_oracle(HaefligerWeber{1, 3}); // d = 3(n+1)/2 boundary
        FAIL("expected InapplicableTheorem");
    } catch (const InapplicableTheorem& e) {
        CHECK(e.condition == "2d > 3(n+1)");
    }
    CHECK_THROWS_AS(bound_oracle(SphereToEuclidean{1, 3}), InapplicableTheorem); // k < d-1
    CHECK_THROWS_AS(bound_oracle(Tverberg{2, 0}), InapplicableTheorem);
}
