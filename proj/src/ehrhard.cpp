#include "gbm/ehrhard.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

namespace gbm {

ConcavityProfile make_profile(std::vector<double> ts, std::vector<double> Fs) {
    if (ts.size() != Fs.size() || ts.size() < 3)
        throw std::invalid_argument("profile needs at least three matching samples");
    ConcavityProfile p;
    p.t = std::move(ts);
    p.F = std::move(Fs);
    p.second_diff.resize(p.t.size() - 2);
    p.max_second_diff = -std::numeric_limits<double>::infinity();
    p.argmax = 0;
    for (std::size_t j = 1; j + 1 < p.t.size(); ++j) {
        double d = p.F[j - 1] - 2.0 * p.F[j] + p.F[j + 1];
        p.second_diff[j - 1] = d;
        if (d > p.max_second_diff) {
            p.max_second_diff = d;
            p.argmax = static_cast<int>(j - 1);
        }
    }
    return p;
}

namespace {

std::vector<double> uniform_grid(double a, double b, int m) {
    if (m < 3) throw std::invalid_argument("grid needs at least three points");
    std::vector<double> ts(m);
    for (int i = 0; i < m; ++i) ts[i] = a + (b - a) * i / (m - 1);
    return ts;
}

}  // namespace

ConcavityProfile ehrhard_concavity(const SupportBody& K, const SupportBody& L, int m) {
    std::vector<double> ts = uniform_grid(0.0, 1.0, m);
    std::vector<double> Fs(m);
    for (int i = 0; i < m; ++i) {
        SupportBody K_t = combine(1.0 - ts[i], K, ts[i], L);
        Fs[i] = std_normal_inv(gaussian_functionals(K_t).measure);
    }
    return make_profile(std::move(ts), std::move(Fs));
}

ConcavityProfile ehrhard_halfplanes(double a, double c, int m) {
    std::vector<double> ts = uniform_grid(0.0, 1.0, m);
    std::vector<double> Fs(m);
    for (int i = 0; i < m; ++i) {
        double s = (1.0 - ts[i]) * a + ts[i] * c;
        Fs[i] = std_normal_inv(normal_cdf(s));
    }
    return make_profile(std::move(ts), std::move(Fs));
}

ConcavityProfile transform_concavity(const SupportBody& K, const SupportBody& L,
                                     const ProfileTransform& transform, int m) {
    std::vector<double> ts = uniform_grid(0.0, 1.0, m);
    std::vector<double> Fs(m);
    for (int i = 0; i < m; ++i) {
        SupportBody K_t = combine(1.0 - ts[i], K, ts[i], L);
        Fs[i] = transform(gaussian_functionals(K_t).measure);
    }
    return make_profile(std::move(ts), std::move(Fs));
}

Cd1Report cd1_counterexample(double b, int m) {
    const double eps = 1e-9;
    double Phib = normal_cdf(b);
    auto g = [&](double t) { return std_normal_inv(normal_cdf(t) / Phib); };

    std::vector<double> ts = uniform_grid(b - 2.0, b - eps, m);
    std::vector<double> Fs(m);
    for (int i = 0; i < m; ++i) Fs[i] = g(ts[i]);
    Cd1Report r;
    r.profile = make_profile(ts, Fs);

    // K + t[-1,1] for the half-line K = (-inf, b-1]: measure Phi(b-1+t)/Phi(b)
    std::vector<double> ss = uniform_grid(0.0, 1.0 - eps, m);
    std::vector<double> Gs(m);
    for (int i = 0; i < m; ++i) Gs[i] = g(b - 1.0 + ss[i]);
    r.shifted = make_profile(std::move(ss), std::move(Gs));

    r.violated = r.profile.max_second_diff > 1e-6;
    r.end_value = r.profile.F.back();
    return r;
}

}  // namespace gbm
