#include <cmath>

#include "doctest.h"
#include "gbm/fourier.hpp"

using gbm::FourierSeries;

TEST_CASE("fourier evaluation matches a direct sum") {
    FourierSeries f(0.7, {0.3, -0.1, 0.05}, {0.2, 0.0, -0.4});
    for (double th : {0.0, 0.3, 1.7, 4.0, 6.1}) {
        double direct = 0.7;
        for (int k = 1; k <= 3; ++k)
            direct += f.cos_coeffs()[k - 1] * std::cos(k * th) +
                      f.sin_coeffs()[k - 1] * std::sin(k * th);
        CHECK(f(th) == doctest::Approx(direct).epsilon(1e-14));
    }
}

TEST_CASE("derivative orders agree with finite differences") {
    FourierSeries f(0.2, {0.5, -0.3}, {0.1, 0.25});
    const double h = 1e-5;
    for (double th : {0.4, 2.0, 5.5}) {
        double d1 = (f(th + h) - f(th - h)) / (2 * h);
        double d2 = (f(th + h) - 2 * f(th) + f(th - h)) / (h * h);
        double d3 = (f.deriv(th + h, 2) - f.deriv(th - h, 2)) / (2 * h);
        CHECK(f.deriv(th, 1) == doctest::Approx(d1).epsilon(1e-8));
        CHECK(f.deriv(th, 2) == doctest::Approx(d2).epsilon(1e-5));
        CHECK(f.deriv(th, 3) == doctest::Approx(d3).epsilon(1e-8));
    }
}

TEST_CASE("axpby combines mismatched degrees coefficient-wise") {
    FourierSeries f(1.0, {0.5}, {0.0});
    FourierSeries g(0.5, {0.1, 0.2, 0.3}, {0.0, -0.1, 0.0});
    FourierSeries h = f.axpby(2.0, -1.0, g);
    CHECK(h.a0() == doctest::Approx(1.5));
    REQUIRE(h.degree() == 3);
    CHECK(h.cos_coeffs()[0] == doctest::Approx(0.9));
    CHECK(h.cos_coeffs()[1] == doctest::Approx(-0.2));
    CHECK(h.cos_coeffs()[2] == doctest::Approx(-0.3));
    CHECK(h.sin_coeffs()[1] == doctest::Approx(0.1));
    for (double th : {0.0, 1.0, 3.3})
        CHECK(h(th) == doctest::Approx(2.0 * f(th) - g(th)).epsilon(1e-14));
}

TEST_CASE("rotation shifts the argument") {
    FourierSeries f(0.3, {0.4, -0.2, 0.1}, {-0.3, 0.0, 0.2});
    FourierSeries g = f.rotated(0.9);
    for (double th : {0.0, 0.7, 2.9, 5.1})
        CHECK(g(th) == doctest::Approx(f(th - 0.9)).epsilon(1e-14));
}

TEST_CASE("constant series and sup-norm bound") {
    FourierSeries c = FourierSeries::constant(2.5);
    CHECK(c(1.234) == 2.5);
    CHECK(c.degree() == 0);
    FourierSeries f(1.0, {0.5, 0.25}, {0.0, 0.1});
    CHECK(f.max_abs() == doctest::Approx(1.85));
    for (double th : {0.1, 1.1, 2.2, 4.7}) CHECK(std::abs(f(th)) <= f.max_abs());
}
