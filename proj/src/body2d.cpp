#include "gbm/body2d.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "gbm/gaussfn.hpp"

namespace gbm {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInv2Pi = 1.0 / kTwoPi;
}  // namespace

SupportBody::SupportBody(FourierSeries h, int grid_size) : h_(std::move(h)), grid_(grid_size) {
    if (grid_ < 16) throw std::invalid_argument("SupportBody: grid size must be at least 16");
}

SupportBody SupportBody::disc(double r, double cx, double cy, int grid_size) {
    return SupportBody(FourierSeries(r, {cx}, {cy}), grid_size);
}

ValidationResult validate(const SupportBody& body, double delta_min) {
    const auto& h = body.support();
    int M = body.grid_size();
    double best = std::numeric_limits<double>::infinity();
    double arg = 0.0;
    for (int j = 0; j < M; ++j) {
        double th = kTwoPi * j / M;
        double r = h.deriv(th, 0) + h.deriv(th, 2);
        if (r < best) {
            best = r;
            arg = th;
        }
    }
    return {best >= delta_min, best, arg, delta_min};
}

void require_valid(const SupportBody& body, double delta_min) {
    ValidationResult v = validate(body, delta_min);
    if (!v.ok)
        throw std::invalid_argument("support function not strictly convex: min(h+h'') = " +
                                    std::to_string(v.min_radius) + " at theta = " +
                                    std::to_string(v.theta_min));
}

BoundaryGrid boundary_geometry(const SupportBody& body) {
    require_valid(body);
    const auto& h = body.support();
    int M = body.grid_size();
    BoundaryGrid g;
    g.M = M;
    g.dtheta = kTwoPi / M;
    auto resize = [M](std::vector<double>& v) { v.resize(M); };
    resize(g.theta);
    resize(g.x1);
    resize(g.x2);
    resize(g.nu1);
    resize(g.nu2);
    resize(g.tau1);
    resize(g.tau2);
    resize(g.h);
    resize(g.hp);
    resize(g.radius);
    resize(g.kappa);
    resize(g.kappa_prime);
    resize(g.H_gamma);
    resize(g.w_leb);
    resize(g.gauss_density);
    resize(g.w_gauss);
    for (int j = 0; j < M; ++j) {
        double th = g.dtheta * j;
        double c = std::cos(th), s = std::sin(th);
        double h0 = h.deriv(th, 0);
        double h1 = h.deriv(th, 1);
        double h2 = h.deriv(th, 2);
        double h3 = h.deriv(th, 3);
        double r = h0 + h2;
        g.theta[j] = th;
        g.nu1[j] = c;
        g.nu2[j] = s;
        g.tau1[j] = -s;
        g.tau2[j] = c;
        g.x1[j] = h0 * c - h1 * s;
        g.x2[j] = h0 * s + h1 * c;
        g.h[j] = h0;
        g.hp[j] = h1;
        g.radius[j] = r;
        g.kappa[j] = 1.0 / r;
        g.kappa_prime[j] = -(h1 + h3) / (r * r);
        g.H_gamma[j] = 1.0 / r - h0;
        g.w_leb[j] = r * g.dtheta;
        double q = g.x1[j] * g.x1[j] + g.x2[j] * g.x2[j];
        g.gauss_density[j] = kInv2Pi * std::exp(-0.5 * q);
        g.w_gauss[j] = g.gauss_density[j] * g.w_leb[j];
    }
    return g;
}

GaussianFunctionals gaussian_functionals(const BoundaryGrid& g) {
    // gamma(K) = contour integral of Phi(x1) phi(x2) dx2 with
    // dx2/dtheta = (h + h'') cos(theta); translation-correct by construction.
    double measure = 0.0, boundary = 0.0;
    for (int j = 0; j < g.M; ++j) {
        measure += normal_cdf(g.x1[j]) * normal_pdf(g.x2[j]) * g.radius[j] * g.nu1[j];
        boundary += g.w_gauss[j];
    }
    return {measure * g.dtheta, boundary};
}

GaussianFunctionals gaussian_functionals(const SupportBody& body) {
    return gaussian_functionals(boundary_geometry(body));
}

GaussianFunctionals gaussian_functionals(const HalfPlane& hp) {
    return {normal_cdf(hp.t), normal_pdf(hp.t)};
}

LebesgueFunctionals lebesgue_functionals(const BoundaryGrid& g) {
    double area = 0.0, perim = 0.0;
    for (int j = 0; j < g.M; ++j) {
        area += g.x1[j] * g.radius[j] * g.nu1[j];
        perim += g.w_leb[j];
    }
    return {area * g.dtheta, perim};
}

LebesgueFunctionals lebesgue_functionals(const SupportBody& body) {
    return lebesgue_functionals(boundary_geometry(body));
}

SupportBody combine(double a, const SupportBody& K, double b, const SupportBody& L) {
    if (a < 0.0 || b < 0.0 || a + b <= 0.0)
        throw std::invalid_argument("combine: coefficients must be nonnegative with a+b > 0");
    return SupportBody(K.support().axpby(a, b, L.support()),
                       std::max(K.grid_size(), L.grid_size()));
}

SupportBody rotated(const SupportBody& body, double alpha) {
    return SupportBody(body.support().rotated(alpha), body.grid_size());
}

}  // namespace gbm
