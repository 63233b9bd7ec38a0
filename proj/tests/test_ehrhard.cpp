#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "gbm/ehrhard.hpp"
#include "gbm/generators.hpp"
#include "gbm/rng.hpp"
#include "oracles.hpp"

using namespace gbm;

TEST_CASE("profile construction computes second differences") {
    ConcavityProfile p = make_profile({0.0, 0.5, 1.0, 1.5}, {0.0, 1.0, 1.8, 2.4});
    REQUIRE(p.second_diff.size() == 2);
    CHECK(p.second_diff[0] == doctest::Approx(-0.2));
    CHECK(p.second_diff[1] == doctest::Approx(-0.2));
    CHECK(p.max_second_diff == doctest::Approx(-0.2));
    CHECK_THROWS_AS(make_profile({0.0, 1.0}, {0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("parallel half-planes interpolate exactly linearly") {
    ConcavityProfile p = ehrhard_halfplanes(-0.8, 1.1, 65);
    for (std::size_t j = 0; j < p.second_diff.size(); ++j)
        CHECK(std::abs(p.second_diff[j]) < 1e-13);
    CHECK(p.F.front() == doctest::Approx(-0.8).epsilon(1e-12));
    CHECK(p.F.back() == doctest::Approx(1.1).epsilon(1e-12));
}

TEST_CASE("identical bodies give a constant profile") {
    CounterRng rng(55, 1);
    SupportBody k = random_body(rng, 6, 512);
    ConcavityProfile p = ehrhard_concavity(k, k, 33);
    for (std::size_t j = 0; j < p.second_diff.size(); ++j)
        CHECK(std::abs(p.second_diff[j]) < 1e-12);
}

TEST_CASE("disc interpolation is concave and hits the midpoint closed form") {
    SupportBody a = SupportBody::disc(1.0), b = SupportBody::disc(2.0);
    ConcavityProfile p = ehrhard_concavity(a, b, 65);
    CHECK(p.max_second_diff <= 1e-10);
    // (1-t) disc(1) + t disc(2) = disc(1+t)
    CHECK(p.F[32] == doctest::Approx(std_normal_inv(1.0 - std::exp(-0.5 * 1.5 * 1.5)))
                         .epsilon(1e-11));
}

TEST_CASE("random body pairs keep the profile concave") {
    for (std::uint64_t s : {0ull, 1ull, 2ull}) {
        CounterRng rk(606, 2 * s), rl(606, 2 * s + 1);
        SupportBody K = random_body(rk, 6, 512);
        SupportBody L = random_body(rl, 6, 512);
        CHECK(ehrhard_concavity(K, L, 65).max_second_diff <= 1e-8);
    }
}

TEST_CASE("conditioned gaussian violates the concavity statement") {
    Cd1Report rep = cd1_counterexample(0.0);
    CHECK(rep.violated);
    CHECK(rep.profile.max_second_diff > 1e-3);
    CHECK(rep.shifted.max_second_diff > 1e-6);
    CHECK(rep.end_value > 6.0);

    // the decisive triple against the long-double oracle
    auto g = [](long double t) {
        return oracle::inv_cdf_ld(oracle::normal_cdf_ld(t) / oracle::normal_cdf_ld(0.0L));
    };
    long double ref = g(-0.3L) - 2.0L * g(-0.2L) + g(-0.1L);
    auto gd = [](double t) { return std_normal_inv(normal_cdf(t) / normal_cdf(0.0)); };
    double got = gd(-0.3) - 2.0 * gd(-0.2) + gd(-0.1);
    CHECK(ref > 1e-3L);
    CHECK(std::abs((long double)got - ref) < 1e-10L);
    CHECK(got == doctest::Approx(0.1253).epsilon(1e-3));
}

TEST_CASE("transform-based concavity matches the inverse-cdf profile") {
    CounterRng rk(77, 0), rl(77, 1);
    SupportBody K = random_body(rk, 6, 512);
    SupportBody L = random_body(rl, 6, 512);
    ProfileTransform t([](double v) { return gaussian_profile(v).log_deriv; }, 0.005, 0.995,
                       1e-10);
    ConcavityProfile pe = ehrhard_concavity(K, L, 33);
    ConcavityProfile pt = transform_concavity(K, L, t, 33);
    double phi0 = normal_pdf(0.0);
    for (std::size_t j = 0; j < pt.F.size(); ++j)
        CHECK(pt.F[j] == doctest::Approx(phi0 * pe.F[j]).epsilon(2e-8));
    CHECK(pt.max_second_diff <= 1e-8);
}
