#include <cmath>

#include "doctest.h"
#include "gbm/quadrature.hpp"

using namespace gbm;

TEST_CASE("gauss-legendre integrates polynomials of degree 2n-1 exactly") {
    for (int n : {2, 5, 16, 64}) {
        const GaussLegendre& gl = GaussLegendre::get(n);
        REQUIRE((int)gl.nodes.size() == n);
        int d = 2 * n - 1;
        // int_{-1}^{1} x^d dx = 0 (odd), int x^{d-1} = 2/d
        double odd = 0.0, even = 0.0;
        for (int i = 0; i < n; ++i) {
            odd += gl.weights[i] * std::pow(gl.nodes[i], d);
            even += gl.weights[i] * std::pow(gl.nodes[i], d - 1);
        }
        CHECK(std::abs(odd) < 1e-13);
        CHECK(even == doctest::Approx(2.0 / d).epsilon(1e-12));
    }
}

TEST_CASE("gauss-legendre weights sum to the interval length") {
    const GaussLegendre& gl = GaussLegendre::get(48);
    double s = 0.0;
    for (double w : gl.weights) s += w;
    CHECK(s == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("gk15 panel integrates smooth functions with a sane error estimate") {
    double err = 0.0;
    double v = gk15_panel([](double x) { return std::exp(x); }, 0.0, 1.0, &err);
    CHECK(v == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
    CHECK(err < 1e-10);
}

TEST_CASE("adaptive rule reaches tight tolerances on peaked integrands") {
    // int_0^1 1/sqrt(x+1e-6) dx = 2(sqrt(1+1e-6) - 1e-3)
    double v = adaptive_gk([](double x) { return 1.0 / std::sqrt(x + 1e-6); }, 0.0, 1.0, 1e-12);
    double exact = 2.0 * (std::sqrt(1.0 + 1e-6) - 1e-3);
    CHECK(v == doctest::Approx(exact).epsilon(1e-10));

    double g = adaptive_gk([](double x) { return std::exp(-x * x); }, -8.0, 8.0, 1e-13);
    CHECK(g == doctest::Approx(std::sqrt(std::acos(-1.0))).epsilon(1e-13));
}

TEST_CASE("adaptive rule throws on a non-integrable singularity") {
    CHECK_THROWS_AS(adaptive_gk([](double x) { return 1.0 / x; }, 0.0, 1.0, 1e-10),
                    quadrature_error);
}
