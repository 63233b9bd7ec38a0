#include "gbm/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace gbm {

namespace {

// Legendre P_n(x) and derivative via the three-term recurrence.
void legendre_eval(int n, double x, double& p, double& dp) {
    double p0 = 1.0, p1 = x;
    if (n == 0) {
        p = 1.0;
        dp = 0.0;
        return;
    }
    for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    p = p1;
    dp = n * (x * p1 - p0) / (x * x - 1.0);
}

GaussLegendre compute_gl(int n) {
    GaussLegendre gl;
    gl.nodes.resize(n);
    gl.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Tricomi-style initial guess, then Newton
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double p = 0, dp = 0;
        for (int it = 0; it < 60; ++it) {
            legendre_eval(n, x, p, dp);
            double dx = -p / dp;
            x += dx;
            if (std::abs(dx) < 1e-16) break;
        }
        legendre_eval(n, x, p, dp);
        gl.nodes[i] = -x;
        gl.nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        gl.weights[i] = w;
        gl.weights[n - 1 - i] = w;
    }
    return gl;
}

// (7,15) Gauss-Kronrod abscissae/weights, positive half (Patterson values).
const double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
const double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
const double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

}  // namespace

const GaussLegendre& GaussLegendre::get(int n) {
    static std::map<int, GaussLegendre> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gl(n)).first;
    return it->second;
}

double gk15_panel(const std::function<double(double)>& f, double a, double b, double* err_estimate) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double fc = f(c);
    double result_g = fc * kWg[3];
    double result_k = fc * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        double x = h * kXgk[j];
        double fsum = f(c - x) + f(c + x);
        result_k += kWgk[j] * fsum;
        if (j % 2 == 1) result_g += kWg[j / 2] * fsum;
    }
    result_k *= h;
    result_g *= h;
    if (err_estimate) *err_estimate = std::abs(result_k - result_g);
    return result_k;
}

namespace {

double adaptive_gk_rec(const std::function<double(double)>& f, double a, double b, double tol, int depth,
                       int max_depth) {
    double err = 0;
    double v = gk15_panel(f, a, b, &err);
    if (err <= tol || !(std::isfinite(v))) {
        if (!std::isfinite(v)) throw quadrature_error("adaptive_gk: non-finite panel value");
        return v;
    }
    if (depth >= max_depth)
        throw quadrature_error("adaptive_gk: tolerance unreachable (divergent or singular integrand)");
    double m = 0.5 * (a + b);
    return adaptive_gk_rec(f, a, m, 0.5 * tol, depth + 1, max_depth) +
           adaptive_gk_rec(f, m, b, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

double adaptive_gk(const std::function<double(double)>& f, double a, double b, double abs_tol, int max_depth) {
    if (a == b) return 0.0;
    double sign = 1.0;
    if (b < a) {
        std::swap(a, b);
        sign = -1.0;
    }
    return sign * adaptive_gk_rec(f, a, b, abs_tol, 0, max_depth);
}

}  // namespace gbm
