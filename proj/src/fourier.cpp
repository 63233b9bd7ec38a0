#include "gbm/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gbm {

FourierSeries::FourierSeries(double a0, std::vector<double> cos_coeffs, std::vector<double> sin_coeffs)
    : a0_(a0), cos_(std::move(cos_coeffs)), sin_(std::move(sin_coeffs)) {
    // keep the two coefficient arrays the same length
    size_t n = std::max(cos_.size(), sin_.size());
    cos_.resize(n, 0.0);
    sin_.resize(n, 0.0);
}

double FourierSeries::deriv(double theta, int order) const {
    if (order < 0 || order > 3) throw std::invalid_argument("FourierSeries::deriv: order must be 0..3");
    double acc = (order == 0) ? a0_ : 0.0;
    for (size_t i = 0; i < cos_.size(); ++i) {
        double k = static_cast<double>(i + 1);
        double c = std::cos(k * theta), s = std::sin(k * theta);
        double kp = 1.0;
        for (int j = 0; j < order; ++j) kp *= k;
        // d/dtheta cycles (cos,sin) -> (-sin,cos) -> (-cos,-sin) -> (sin,-cos)
        switch (order & 3) {
            case 0: acc += kp * (cos_[i] * c + sin_[i] * s); break;
            case 1: acc += kp * (-cos_[i] * s + sin_[i] * c); break;
            case 2: acc += kp * (-cos_[i] * c - sin_[i] * s); break;
            case 3: acc += kp * (cos_[i] * s - sin_[i] * c); break;
        }
    }
    return acc;
}

FourierSeries FourierSeries::axpby(double alpha, double beta, const FourierSeries& other) const {
    size_t n = std::max(cos_.size(), other.cos_.size());
    std::vector<double> c(n, 0.0), s(n, 0.0);
    for (size_t i = 0; i < n; ++i) {
        if (i < cos_.size()) {
            c[i] += alpha * cos_[i];
            s[i] += alpha * sin_[i];
        }
        if (i < other.cos_.size()) {
            c[i] += beta * other.cos_[i];
            s[i] += beta * other.sin_[i];
        }
    }
    return FourierSeries(alpha * a0_ + beta * other.a0_, std::move(c), std::move(s));
}

FourierSeries FourierSeries::rotated(double alpha) const {
    std::vector<double> c(cos_.size()), s(sin_.size());
    for (size_t i = 0; i < cos_.size(); ++i) {
        double k = static_cast<double>(i + 1);
        double ck = std::cos(k * alpha), sk = std::sin(k * alpha);
        c[i] = cos_[i] * ck - sin_[i] * sk;
        s[i] = cos_[i] * sk + sin_[i] * ck;
    }
    return FourierSeries(a0_, std::move(c), std::move(s));
}

double FourierSeries::max_abs() const {
    double m = std::abs(a0_);
    for (size_t i = 0; i < cos_.size(); ++i) m += std::abs(cos_[i]) + std::abs(sin_[i]);
    return m;
}

}  // namespace gbm
