#include "gbm/gaussfn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gbm/quadrature.hpp"

namespace gbm {

namespace {
constexpr double kInvSqrt2Pi = 0.3989422804014326779399460599343819;
constexpr double kSqrt1_2 = 0.7071067811865475244008443621048490;
}  // namespace

double normal_pdf(double t) { return kInvSqrt2Pi * std::exp(-0.5 * t * t); }

double normal_cdf(double t) { return 0.5 * std::erfc(-t * kSqrt1_2); }

double normal_ccdf(double t) { return 0.5 * std::erfc(t * kSqrt1_2); }

NormalPair std_normal(double t) { return {normal_pdf(t), normal_cdf(t)}; }

namespace {

// Rational approximations for Phi^{-1} (relative error ~1e-9 before polish).
double inv_initial(double p) {
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double p_low = 0.02425;
    if (p < p_low) {
        double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    double q = p - 0.5, r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

// p in (0, 0.5]; result <= 0. Newton polish against the lower tail, which for
// x <= 0 is erfc(-x/sqrt(2))/2 and involves no cancellation.
double inv_core(double p) {
    double x = inv_initial(p);
    for (int it = 0; it < 2; ++it) {
        double pdf = normal_pdf(x);
        if (pdf < 1e-300) break;
        x -= (normal_cdf(x) - p) / pdf;
    }
    return x;
}

}  // namespace

double std_normal_inv(double v) {
    if (!(v > 0.0 && v < 1.0)) throw std::domain_error("std_normal_inv: argument must lie in (0,1)");
    return v > 0.5 ? -inv_core(1.0 - v) : inv_core(v);
}

ProfilePair gaussian_profile(double v) {
    double x = std_normal_inv(v);
    double I = normal_pdf(x);
    return {I, -x / I};
}

ProfileTransform::ProfileTransform(std::function<double(double)> G, double lo, double hi,
                                   double quad_tol)
    : G_(std::move(G)), lo_(lo), hi_(hi), tol_(quad_tol) {
    if (!(0.0 < lo && lo < 0.5 && 0.5 < hi && hi < 1.0))
        throw std::domain_error("ProfileTransform: need 0 < lo < 1/2 < hi < 1");
    // Resolve A(t) = int_{1/2}^t G on an adaptive panel grid covering [lo,hi].
    struct Panel {
        double a, b, integral;
    };
    std::vector<Panel> panels;
    // Seed with the two halves and cap accepted panel widths: the error
    // estimate |K15 - G7| vanishes for integrands antisymmetric about the
    // midpoint, and A is needed pointwise, not just as a total.
    const double max_width = (hi_ - lo_) / 8.0;
    std::vector<std::pair<double, double>> stack{{lo_, 0.5}, {0.5, hi_}};
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        if (b - a < 1e-14)
            throw quadrature_error("ProfileTransform: inner integral did not converge (G not integrable?)");
        double err = 0.0;
        double val = gk15_panel(G_, a, b, &err);
        if (b - a <= max_width &&
            (err <= tol_ * (b - a) / (hi_ - lo_) || err <= 1e-16 * std::abs(val))) {
            panels.push_back({a, b, val});
        } else {
            double m = 0.5 * (a + b);
            stack.push_back({m, b});
            stack.push_back({a, m});
        }
    }
    std::sort(panels.begin(), panels.end(), [](const Panel& p, const Panel& q) { return p.a < q.a; });
    breaks_.reserve(panels.size() + 1);
    std::vector<double> raw(panels.size() + 1);
    breaks_.push_back(panels.front().a);
    raw[0] = 0.0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
        raw[i + 1] = raw[i] + panels[i].integral;
        breaks_.push_back(panels[i].b);
    }
    // Rebase so that cumA_ holds A(t) = int_{1/2}^t G at every breakpoint.
    auto it = std::lower_bound(breaks_.begin(), breaks_.end(), 0.5);
    std::size_t j = static_cast<std::size_t>(it - breaks_.begin());
    double base = raw[j];
    if (j > 0 && breaks_[j] != 0.5) {
        std::size_t k = j - 1;
        base = raw[k] + gk15_panel(G_, breaks_[k], 0.5, nullptr);
    }
    cumA_.resize(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) cumA_[i] = raw[i] - base;
}

double ProfileTransform::antiderivative(double t) const {
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
    std::size_t j = static_cast<std::size_t>(it - breaks_.begin());
    if (j == 0) return cumA_.front();
    if (j >= breaks_.size()) return cumA_.back() + gk15_panel(G_, breaks_.back(), t, nullptr);
    std::size_t k = j - 1;
    if (t == breaks_[k]) return cumA_[k];
    return cumA_[k] + gk15_panel(G_, breaks_[k], t, nullptr);
}

double ProfileTransform::operator()(double v) const {
    if (!(v >= lo_ && v <= hi_)) throw std::domain_error("ProfileTransform: argument outside [lo,hi]");
    if (v == 0.5) return 0.0;
    auto f = [this](double t) { return std::exp(-antiderivative(t)); };
    return adaptive_gk(f, 0.5, v, tol_);
}

}  // namespace gbm
