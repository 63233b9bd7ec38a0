#include "gbm/inequalities.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbm/gaussfn.hpp"

namespace gbm {

PoincareReport poincare_report(const SupportBody& body, const BoundaryFunction& f) {
    BoundaryGrid g = boundary_geometry(body);
    GaussianFunctionals gf = gaussian_functionals(g);
    double coeff = gaussian_profile(gf.measure).log_deriv;

    double mass_f = 0.0, curv = 0.0, dir = 0.0, totH = 0.0, betaf_H = 0.0;
    for (int j = 0; j < g.M; ++j) {
        double w = g.w_gauss[j];
        double fv = f.deriv(g.theta[j], 0);
        double fp = f.deriv(g.theta[j], 1);
        mass_f += fv * w;
        curv += g.H_gamma[j] * fv * fv * w;
        dir += fp * fp * g.kappa[j] * w;
        totH += g.H_gamma[j] * w;
        betaf_H += fv * g.H_gamma[j] * w;
    }
    PoincareReport r;
    r.measure = gf.measure;
    r.boundary_mass = gf.boundary_mass;
    r.coeff = coeff;
    r.mass_f = mass_f;
    r.term_curvature = curv;
    r.term_mean = coeff * mass_f * mass_f;
    r.term_dirichlet = dir;
    r.gap = r.term_dirichlet + r.term_mean - r.term_curvature;
    r.prev_gap = r.term_dirichlet + mass_f * mass_f / gf.measure - r.term_curvature;
    // beta = coeff * boundary_mass - H_gamma
    r.beta_mass = coeff * gf.boundary_mass * gf.boundary_mass - totH;
    r.beta_f = coeff * gf.boundary_mass * mass_f - betaf_H;
    r.refined_defined = r.beta_mass > 0.0;
    r.refined_extra = r.refined_defined ? r.beta_f * r.beta_f / r.beta_mass : 0.0;
    r.refined_gap = r.gap - r.refined_extra;
    return r;
}

PoincareReport poincare_report(const HalfPlane& hp, double f_const) {
    double t = hp.t;
    double pdf = normal_pdf(t), cdf = normal_cdf(t);
    PoincareReport r;
    r.measure = cdf;
    r.boundary_mass = pdf;
    r.coeff = -t / pdf;
    r.mass_f = f_const * pdf;
    r.term_curvature = -t * f_const * f_const * pdf;  // H_gamma == -t on the boundary line
    r.term_mean = r.coeff * r.mass_f * r.mass_f;
    r.term_dirichlet = 0.0;
    r.gap = r.term_dirichlet + r.term_mean - r.term_curvature;
    r.prev_gap = r.term_dirichlet + r.mass_f * r.mass_f / cdf - r.term_curvature;
    // beta = (-t/phi) phi - (-t) == 0 identically on a half-plane
    r.beta_mass = 0.0;
    r.beta_f = 0.0;
    r.refined_defined = true;
    r.refined_extra = 0.0;
    r.refined_gap = r.gap;
    return r;
}

MeanCurvatureSlack mean_curvature_slack(const SupportBody& body) {
    BoundaryGrid g = boundary_geometry(body);
    GaussianFunctionals gf = gaussian_functionals(g);
    double totH = 0.0;
    for (int j = 0; j < g.M; ++j) totH += g.H_gamma[j] * g.w_gauss[j];
    double coeff = gaussian_profile(gf.measure).log_deriv;
    return {coeff * gf.boundary_mass * gf.boundary_mass - totH, totH, gf.measure};
}

MeanCurvatureSlack mean_curvature_slack(const HalfPlane& hp) {
    double pdf = normal_pdf(hp.t);
    double totH = -hp.t * pdf;
    return {(-hp.t / pdf) * pdf * pdf - totH, totH, normal_cdf(hp.t)};
}

namespace {

IsoSecondVariation iso_compare(double delta2_K, double measure) {
    if (!(measure >= 0.5))
        throw std::domain_error("iso_second_variation_compare: requires gamma(K) >= 1/2");
    double t = std_normal_inv(measure);
    double delta2_E = -t * normal_pdf(t);
    bool ok = delta2_K <= delta2_E + 1e-8 && delta2_K <= 1e-12 && delta2_E <= 1e-12;
    return {delta2_K, delta2_E, t, ok};
}

}  // namespace

IsoSecondVariation iso_second_variation_compare(const SupportBody& body) {
    BoundaryGrid g = boundary_geometry(body);
    GaussianFunctionals gf = gaussian_functionals(g);
    double totH = 0.0;
    for (int j = 0; j < g.M; ++j) totH += g.H_gamma[j] * g.w_gauss[j];
    return iso_compare(totH, gf.measure);
}

IsoSecondVariation iso_second_variation_compare(const HalfPlane& hp) {
    return iso_compare(-hp.t * normal_pdf(hp.t), normal_cdf(hp.t));
}

namespace {

// Golden-section minimization of a continuous function on [a, b].
double golden_min(const std::function<double(double)>& fn, double a, double b, double tol) {
    const double invphi = 0.6180339887498948482;
    double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
    double f1 = fn(x1), f2 = fn(x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = fn(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = fn(x2);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

DualReport dual_gap(const SupportBody& body, const BoundaryFunction& f, std::optional<double> C) {
    BoundaryGrid g = boundary_geometry(body);
    double minH = g.H_gamma[0];
    for (double H : g.H_gamma) minH = std::min(minH, H);
    if (minH <= 0.0)
        throw std::domain_error("dual_gap: body is not strictly Gaussian mean-convex, min H_gamma = " +
                                std::to_string(minH));

    std::vector<double> fv(g.M), Lf(g.M);
    double rhs = 0.0;
    double lo = 0.0, hi = 0.0;
    for (int j = 0; j < g.M; ++j) {
        double f0 = f.deriv(g.theta[j], 0);
        double f1 = f.deriv(g.theta[j], 1);
        double f2 = f.deriv(g.theta[j], 2);
        double k = g.kappa[j];
        // d/ds = kappa d/dtheta; <x, tau> = h'
        double dfds = k * f1;
        double d2fds2 = k * (g.kappa_prime[j] * f1 + k * f2);
        fv[j] = f0;
        Lf[j] = d2fds2 - g.hp[j] * dfds;
        rhs += k * dfds * dfds * g.w_gauss[j];
        double pivot = f0 + 2.0 * Lf[j];  // C* is a weighted average of these
        if (j == 0) lo = hi = pivot;
        lo = std::min(lo, pivot);
        hi = std::max(hi, pivot);
    }
    auto lhs_at = [&](double c) {
        double acc = 0.0;
        for (int j = 0; j < g.M; ++j) {
            double s = Lf[j] + 0.5 * (fv[j] - c);
            acc += s * s / g.H_gamma[j] * g.w_gauss[j];
        }
        return acc;
    };
    double c_used = C ? *C : golden_min(lhs_at, lo - 1.0, hi + 1.0, 1e-10);
    double lhs = lhs_at(c_used);
    return {minH, c_used, lhs, rhs, lhs - rhs};
}

namespace {

std::array<double, 3> ledoux_limits(std::array<double, 3>& ts) {
    ts = {5.0, 8.0, 12.0};
    std::array<double, 3> est{};
    for (int i = 0; i < 3; ++i) {
        // gamma(t D) = 1 - exp(-t^2/2); evaluate Phi^{-1} through the tail
        double tail = std::exp(-0.5 * ts[i] * ts[i]);
        est[i] = -std_normal_inv(tail) / ts[i];
    }
    return est;
}

}  // namespace

IsoLedoux isoperimetric_and_ledoux(const SupportBody& body) {
    GaussianFunctionals gf = gaussian_functionals(body);
    ProfilePair p = gaussian_profile(gf.measure);
    IsoLedoux r;
    r.iso_slack = gf.boundary_mass - p.I;
    r.F_prime0 = gf.boundary_mass / p.I;  // (Phi^{-1})'(v) = 1/I_gamma(v)
    r.limit_estimate = ledoux_limits(r.limit_t);
    return r;
}

IsoLedoux isoperimetric_and_ledoux(const HalfPlane& hp) {
    IsoLedoux r;
    double I = normal_pdf(hp.t);  // I_gamma(Phi(t)) = phi(t) exactly
    r.iso_slack = normal_pdf(hp.t) - I;
    r.F_prime0 = normal_pdf(hp.t) / I;
    r.limit_estimate = ledoux_limits(r.limit_t);
    return r;
}

}  // namespace gbm
