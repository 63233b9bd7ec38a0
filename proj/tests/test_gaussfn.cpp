#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "gbm/gaussfn.hpp"
#include "gbm/quadrature.hpp"
#include "gbm/rng.hpp"
#include "oracles.hpp"

using namespace gbm;

TEST_CASE("cdf matches the long-double series/continued-fraction oracle") {
    for (double t = -12.0; t <= 12.0; t += 0.25) {
        // tail values inherit a relative error ~ (t^2/2) eps from rounding
        // the exp argument, on top of a few ulp from erfc itself
        long double tol = 5e-15L + 2.5e-16L * t * t;
        long double ref = oracle::normal_cdf_ld(t);
        double got = normal_cdf(t);
        CHECK(std::abs((long double)got - ref) <= tol * ref + 1e-300L);
        double ccdf = normal_ccdf(t);
        long double refc = oracle::normal_cdf_ld(-t);
        CHECK(std::abs((long double)ccdf - refc) <= tol * refc + 1e-300L);
    }
}

TEST_CASE("pdf and std_normal agree") {
    for (double t : {-3.0, -0.5, 0.0, 1.0, 7.5}) {
        NormalPair p = std_normal(t);
        CHECK(p.density == normal_pdf(t));
        CHECK(p.cdf == normal_cdf(t));
        CHECK(normal_pdf(t) ==
              doctest::Approx((double)oracle::normal_pdf_ld(t)).epsilon(1e-15));
    }
}

TEST_CASE("inverse cdf round trips and matches the bisection oracle") {
    // the right end stops at 3.75: beyond that the spacing of doubles near
    // v = 1 dominates, eps/phi(t) > 1e-12 * t
    for (double t = -8.0; t <= 3.75; t += 0.125) {
        double v = normal_cdf(t);
        CHECK(std::abs(std_normal_inv(v) - t) <= 1e-12 * std::max(1.0, std::abs(t)));
    }
    for (double v : {1e-32, 1e-16, 1e-8, 1e-3, 0.25, 0.5, 0.75, 1.0 - 1e-8}) {
        double ref = (double)oracle::inv_cdf_ld(v);
        CHECK(std_normal_inv(v) == doctest::Approx(ref).epsilon(2e-13));
    }
    CHECK(std_normal_inv(0.5) == 0.0);
}

TEST_CASE("inverse cdf rejects arguments outside (0,1)") {
    CHECK_THROWS_AS(std_normal_inv(0.0), std::domain_error);
    CHECK_THROWS_AS(std_normal_inv(1.0), std::domain_error);
    CHECK_THROWS_AS(std_normal_inv(-0.2), std::domain_error);
}

TEST_CASE("isoperimetric profile values and symmetry") {
    ProfilePair mid = gaussian_profile(0.5);
    CHECK(mid.I == doctest::Approx(normal_pdf(0.0)).epsilon(1e-14));
    CHECK(std::abs(mid.log_deriv) < 1e-13);
    ProfilePair p = gaussian_profile(normal_cdf(1.0));
    CHECK(p.I == doctest::Approx(normal_pdf(1.0)).epsilon(1e-12));
    for (double v : {0.01, 0.2, 0.4}) {
        CHECK(gaussian_profile(v).I ==
              doctest::Approx(gaussian_profile(1.0 - v).I).epsilon(1e-13));
        CHECK(gaussian_profile(v).log_deriv ==
              doctest::Approx(-gaussian_profile(1.0 - v).log_deriv).epsilon(1e-12));
    }
}

TEST_CASE("profile transform is the identity shift for G == 0") {
    ProfileTransform t([](double) { return 0.0; }, 0.05, 0.95);
    CHECK(t(0.5) == 0.0);
    for (double v : {0.06, 0.3, 0.5, 0.77, 0.94})
        CHECK(t(v) == doctest::Approx(v - 0.5).epsilon(1e-12));
    CHECK(t(0.7) > t(0.6));
}

TEST_CASE("profile transform reproduces the scaled inverse cdf for the gaussian G") {
    ProfileTransform t([](double v) { return gaussian_profile(v).log_deriv; }, 0.02, 0.98, 1e-11);
    double phi0 = normal_pdf(0.0);
    for (double v : {0.05, 0.2, 0.5, 0.66, 0.9, 0.97})
        CHECK(t(v) == doctest::Approx(phi0 * std_normal_inv(v)).epsilon(1e-8));
}

TEST_CASE("profile transform rejects a non-integrable G") {
    CHECK_THROWS_AS(ProfileTransform([](double s) { return 1.0 / ((s - 0.5) * (s - 0.5)); },
                                     0.05, 0.95),
                    quadrature_error);
}

TEST_CASE("counter rng is reproducible and stream-separated") {
    CounterRng a(123, 5), b(123, 5), c(123, 6);
    for (int i = 0; i < 16; ++i) {
        auto x = a.next_u64();
        CHECK(x == b.next_u64());
        CHECK(x != c.next_u64());
    }
    CounterRng u(7, 0);
    for (int i = 0; i < 1000; ++i) {
        double v = u.uniform();
        CHECK(v > 0.0);
        CHECK(v < 1.0);
    }
}
