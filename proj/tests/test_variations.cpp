#include <cmath>

#include "doctest.h"
#include "gbm/generators.hpp"
#include "gbm/rng.hpp"
#include "gbm/variations.hpp"

using namespace gbm;

namespace {
const double kPi = std::acos(-1.0);
}

TEST_CASE("disc under constant speed has closed-form variations") {
    for (double r : {0.7, 1.0, 1.6}) {
        SupportBody d = SupportBody::disc(r);
        BoundaryFunction one = BoundaryFunction::constant(1.0);
        VariationReport g = variations(d, one, WeightMode::gaussian);
        double mass = r * std::exp(-0.5 * r * r);
        CHECK(g.delta0 == doctest::Approx(1.0 - std::exp(-0.5 * r * r)).epsilon(1e-12));
        CHECK(g.delta1 == doctest::Approx(mass).epsilon(1e-12));
        CHECK(g.delta2 == doctest::Approx((1.0 / r - r) * mass).epsilon(1e-12));
        VariationReport l = variations(d, one, WeightMode::lebesgue);
        CHECK(l.delta0 == doctest::Approx(kPi * r * r).epsilon(1e-13));
        CHECK(l.delta1 == doctest::Approx(2.0 * kPi * r).epsilon(1e-13));
        CHECK(l.delta2 == doctest::Approx(2.0 * kPi).epsilon(1e-13));
    }
}

TEST_CASE("lebesgue second variation has the parseval closed form") {
    // delta2 = int (f^2 - f'^2) dtheta = 2 pi a0^2 + pi sum (1 - k^2)(a_k^2 + b_k^2)
    BoundaryFunction f(0.4, {0.3, -0.2, 0.1}, {0.05, 0.0, -0.15});
    double expected = 2.0 * kPi * 0.4 * 0.4;
    double coeffs[3][2] = {{0.3, 0.05}, {-0.2, 0.0}, {0.1, -0.15}};
    for (int k = 1; k <= 3; ++k)
        expected += kPi * (1.0 - k * k) * (coeffs[k - 1][0] * coeffs[k - 1][0] +
                                           coeffs[k - 1][1] * coeffs[k - 1][1]);
    CounterRng rng(99, 3);
    SupportBody b = random_body(rng, 6, 512);
    VariationReport l = variations(b, f, WeightMode::lebesgue);
    CHECK(l.delta2 == doctest::Approx(expected).epsilon(1e-11));
}

TEST_CASE("analytic variations match richardson finite differences") {
    for (std::uint64_t s : {1ull, 2ull, 3ull}) {
        CounterRng rb(2026, 2 * s), rf(2026, 2 * s + 1);
        SupportBody b = random_body(rb, 6, 512);
        BoundaryFunction f = random_boundary_function(rf, 6);
        for (WeightMode mode : {WeightMode::gaussian, WeightMode::lebesgue}) {
            VariationReport an = variations(b, f, mode);
            FdVariations fd = fd_variations(b, f, mode);
            CHECK(std::abs(an.delta1 - fd.d1) <= 1e-7 * std::max(1.0, std::abs(an.delta1)));
            CHECK(std::abs(an.delta2 - fd.d2) <= 1e-6 * std::max(1.0, std::abs(an.delta2)));
        }
    }
}

TEST_CASE("inadmissible steps are rejected with the largest admissible step") {
    SupportBody d = SupportBody::disc(0.2);
    BoundaryFunction f(0.0, {0.0, 0.0, 20.0}, {});  // f + f'' = -160 cos(3 theta)
    double s = largest_admissible_step(d, f);
    CHECK(s == doctest::Approx((0.2 - 1e-6) / 160.0).epsilon(1e-9));
    try {
        fd_variations(d, f, WeightMode::gaussian, 1e-3);
        FAIL("expected step_rejection");
    } catch (const step_rejection& e) {
        CHECK(e.largest_admissible() == doctest::Approx(s).epsilon(1e-12));
    }
}

TEST_CASE("largest admissible step is infinite for rigid motions") {
    SupportBody d = SupportBody::disc(1.0);
    BoundaryFunction translation(0.0, {0.25}, {-0.4});  // f + f'' == 0
    CHECK(std::isinf(largest_admissible_step(d, translation)));
}

TEST_CASE("minkowski second slack vanishes on discs and is positive otherwise") {
    CHECK(std::abs(minkowski_second_slack(SupportBody::disc(1.0))) < 1e-10);
    CHECK(std::abs(minkowski_second_slack(SupportBody::disc(0.5, 0.3, -0.2))) < 1e-10);
    CHECK(minkowski_second_slack(ellipse_body(1.3, 0.7)) > 1e-3);
}

TEST_CASE("steiner polynomial fit recovers area, perimeter, and pi") {
    SupportBody e = ellipse_body(1.3, 0.7);
    SteinerFit fit = steiner_fit(e);
    LebesgueFunctionals l = lebesgue_functionals(e);
    CHECK(fit.area == doctest::Approx(l.area).epsilon(1e-10));
    CHECK(fit.perimeter == doctest::Approx(l.perimeter).epsilon(1e-10));
    CHECK(fit.c2 == doctest::Approx(kPi).epsilon(1e-10));
    CHECK(fit.residual < 1e-10);
}
