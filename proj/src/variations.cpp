#include "gbm/variations.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace gbm {

VariationReport variations(const SupportBody& body, const BoundaryFunction& f, WeightMode mode) {
    BoundaryGrid g = boundary_geometry(body);
    bool gauss = mode == WeightMode::gaussian;
    double delta0 = gauss ? gaussian_functionals(g).measure : lebesgue_functionals(g).area;
    double d1 = 0.0, d2 = 0.0;
    for (int j = 0; j < g.M; ++j) {
        double w = gauss ? g.w_gauss[j] : g.w_leb[j];
        double H = gauss ? g.H_gamma[j] : g.kappa[j];
        double fv = f.deriv(g.theta[j], 0);
        double fp = f.deriv(g.theta[j], 1);
        d1 += fv * w;
        // (df/ds)^2 / kappa = (f' kappa)^2 / kappa = f'^2 kappa
        d2 += (H * fv * fv - fp * fp * g.kappa[j]) * w;
    }
    return {delta0, d1, d2, mode, g.M};
}

step_rejection::step_rejection(double largest_admissible)
    : std::runtime_error("finite-difference step leaves the convex cone; largest admissible step = " +
                         std::to_string(largest_admissible)),
      largest_(largest_admissible) {}

double largest_admissible_step(const SupportBody& body, const BoundaryFunction& f,
                               double delta_min) {
    const auto& h = body.support();
    int M = body.grid_size();
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < M; ++j) {
        double th = 2.0 * std::numbers::pi * j / M;
        double r = h.deriv(th, 0) + h.deriv(th, 2);
        double q = f.deriv(th, 0) + f.deriv(th, 2);
        if (q != 0.0) best = std::min(best, (r - delta_min) / std::abs(q));
    }
    return best;
}

FdVariations fd_variations(const SupportBody& body, const BoundaryFunction& f, WeightMode mode,
                           double h_step) {
    require_valid(body);
    double admissible = largest_admissible_step(body, f);
    if (admissible <= 2.0 * h_step) throw step_rejection(admissible);
    auto bulk = [&](double t) {
        SupportBody K_t(body.support().axpby(1.0, t, f), body.grid_size());
        return mode == WeightMode::gaussian ? gaussian_functionals(K_t).measure
                                            : lebesgue_functionals(K_t).area;
    };
    double v0 = bulk(0.0);
    double vp1 = bulk(h_step), vm1 = bulk(-h_step);
    double vp2 = bulk(2.0 * h_step), vm2 = bulk(-2.0 * h_step);
    double d1_h = (vp1 - vm1) / (2.0 * h_step);
    double d1_2h = (vp2 - vm2) / (4.0 * h_step);
    double d2_h = (vp1 - 2.0 * v0 + vm1) / (h_step * h_step);
    double d2_2h = (vp2 - 2.0 * v0 + vm2) / (4.0 * h_step * h_step);
    return {(4.0 * d1_h - d1_2h) / 3.0, (4.0 * d2_h - d2_2h) / 3.0, h_step};
}

double minkowski_second_slack(const SupportBody& body) {
    BoundaryGrid g = boundary_geometry(body);
    LebesgueFunctionals lf = lebesgue_functionals(g);
    double total_curv = 0.0;
    for (int j = 0; j < g.M; ++j) total_curv += g.kappa[j] * g.w_leb[j];
    return 0.5 * lf.perimeter * lf.perimeter / lf.area - total_curv;
}

SteinerFit steiner_fit(const SupportBody& body) {
    SupportBody D = SupportBody::disc(1.0, 0.0, 0.0, body.grid_size());
    constexpr int n = 5;
    Eigen::Matrix<double, n, 3> V;
    Eigen::Matrix<double, n, 1> y;
    for (int i = 0; i < n; ++i) {
        double t = 0.25 * i;
        V(i, 0) = 1.0;
        V(i, 1) = t;
        V(i, 2) = t * t;
        y(i) = lebesgue_functionals(combine(1.0, body, t, D)).area;
    }
    Eigen::Vector3d coef = V.colPivHouseholderQr().solve(y);
    double residual = (V * coef - y).cwiseAbs().maxCoeff();
    return {coef(0), coef(1), coef(2), residual};
}

}  // namespace gbm
