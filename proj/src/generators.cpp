#include "gbm/generators.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace gbm {

namespace {

// Rescale harmonics of degree >= 2 so that the worst-case curvature radius
// a0 - sum (k^2 - 1)|c_k| keeps at least `margin` * a0. Degree-1 terms are
// translations and never threaten convexity.
FourierSeries enforce_convexity(double a0, std::vector<double> ac, std::vector<double> bc,
                                double margin) {
    double budget = 0.0;
    for (std::size_t k = 2; k <= ac.size(); ++k) {
        double amp = std::hypot(ac[k - 1], bc[k - 1]);
        budget += (static_cast<double>(k) * k - 1.0) * amp;
    }
    double cap = (1.0 - margin) * a0;
    if (budget > cap && budget > 0.0) {
        double s = cap / budget;
        for (std::size_t k = 2; k <= ac.size(); ++k) {
            ac[k - 1] *= s;
            bc[k - 1] *= s;
        }
    }
    return FourierSeries(a0, std::move(ac), std::move(bc));
}

}  // namespace

SupportBody random_body(CounterRng& rng, int max_degree, int grid_size) {
    double a0 = rng.uniform(0.8, 1.3);
    std::vector<double> ac(max_degree, 0.0), bc(max_degree, 0.0);
    ac[0] = 0.25 * rng.normal();
    bc[0] = 0.25 * rng.normal();
    for (int k = 2; k <= max_degree; ++k) {
        double damp = 0.3 / (static_cast<double>(k) * k);
        ac[k - 1] = damp * rng.normal();
        bc[k - 1] = damp * rng.normal();
    }
    return SupportBody(enforce_convexity(a0, std::move(ac), std::move(bc), 0.3), grid_size);
}

SupportBody random_mean_convex_body(CounterRng& rng, int grid_size) {
    double a0 = rng.uniform(0.35, 0.6);
    std::vector<double> ac(4, 0.0), bc(4, 0.0);
    ac[0] = 0.05 * rng.normal();
    bc[0] = 0.05 * rng.normal();
    for (int k = 2; k <= 4; ++k) {
        double damp = 0.04 / static_cast<double>(k);
        ac[k - 1] = damp * rng.normal();
        bc[k - 1] = damp * rng.normal();
    }
    // With radius <= 1.25*a0 <= 0.75 and support <= a0 + translations + harmonics,
    // H_gamma = 1/radius - h >= 1/0.75 - 0.9 stays clear of the 0.1 floor.
    return SupportBody(enforce_convexity(a0, std::move(ac), std::move(bc), 0.75), grid_size);
}

BoundaryFunction random_boundary_function(CounterRng& rng, int max_degree) {
    double a0 = rng.normal();
    std::vector<double> ac(max_degree), bc(max_degree);
    for (int k = 1; k <= max_degree; ++k) {
        double damp = 1.0 / (static_cast<double>(k) * k);
        ac[k - 1] = damp * rng.normal();
        bc[k - 1] = damp * rng.normal();
    }
    return BoundaryFunction(a0, std::move(ac), std::move(bc));
}

BoundaryFunction make_zero_mean(const BoundaryFunction& f, const BoundaryGrid& grid,
                                const std::vector<double>& weights) {
    double mass = 0.0, total = 0.0;
    for (int j = 0; j < grid.M; ++j) {
        mass += f.deriv(grid.theta[j], 0) * weights[j];
        total += weights[j];
    }
    return f.axpby(1.0, 1.0, FourierSeries::constant(-mass / total));
}

Poly2 random_poly2(CounterRng& rng, int degree, double scale) {
    Poly2 p(degree);
    for (int i = 0; i <= degree; ++i)
        for (int j = 0; i + j <= degree; ++j) p.at(i, j) = std::pow(scale, i + j) * rng.normal();
    return p;
}

SupportBody ellipse_body(double a, double b, int degree, int grid_size) {
    auto h = [&](double th) {
        double c = a * std::cos(th), s = b * std::sin(th);
        return std::sqrt(c * c + s * s);
    };
    // Projection onto the truncated Fourier basis by dense trapezoid rule;
    // only even cosine modes survive the symmetry.
    const int n = 8192;
    double a0 = 0.0;
    std::vector<double> ac(degree, 0.0), bc(degree, 0.0);
    for (int i = 0; i < n; ++i) {
        double th = 2.0 * std::numbers::pi * i / n;
        double hv = h(th);
        a0 += hv;
        for (int k = 1; k <= degree; ++k) {
            ac[k - 1] += hv * std::cos(k * th);
            bc[k - 1] += hv * std::sin(k * th);
        }
    }
    a0 /= n;
    for (int k = 1; k <= degree; ++k) {
        ac[k - 1] *= 2.0 / n;
        bc[k - 1] *= 2.0 / n;
    }
    return SupportBody(FourierSeries(a0, std::move(ac), std::move(bc)), grid_size);
}

}  // namespace gbm
