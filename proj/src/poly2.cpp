#include "gbm/poly2.hpp"

#include <stdexcept>

namespace gbm {

Poly2::Poly2(int degree) : degree_(degree) {
    if (degree < 0 || degree > 32) throw std::invalid_argument("Poly2: unsupported degree");
    c_.assign(static_cast<std::size_t>(degree + 1) * (degree + 1), 0.0);
}

double& Poly2::at(int i, int j) {
    if (i < 0 || j < 0 || i + j > degree_) throw std::out_of_range("Poly2::at");
    return c_[static_cast<std::size_t>(i) * (degree_ + 1) + j];
}

double Poly2::at(int i, int j) const {
    if (i < 0 || j < 0 || i + j > degree_) throw std::out_of_range("Poly2::at");
    return c_[static_cast<std::size_t>(i) * (degree_ + 1) + j];
}

Jet2 Poly2::jet(double x, double y) const {
    int n = degree_;
    // Powers up to degree; degree is small so the direct sums are exact enough.
    std::vector<double> xp(n + 1, 1.0), yp(n + 1, 1.0);
    for (int i = 1; i <= n; ++i) xp[i] = xp[i - 1] * x;
    for (int j = 1; j <= n; ++j) yp[j] = yp[j - 1] * y;
    Jet2 J{0, 0, 0, 0, 0, 0};
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; i + j <= n; ++j) {
            double c = c_[static_cast<std::size_t>(i) * (n + 1) + j];
            if (c == 0.0) continue;
            J.v += c * xp[i] * yp[j];
            if (i >= 1) J.gx += c * i * xp[i - 1] * yp[j];
            if (j >= 1) J.gy += c * j * xp[i] * yp[j - 1];
            if (i >= 2) J.hxx += c * i * (i - 1) * xp[i - 2] * yp[j];
            if (i >= 1 && j >= 1) J.hxy += c * i * j * xp[i - 1] * yp[j - 1];
            if (j >= 2) J.hyy += c * j * (j - 1) * xp[i] * yp[j - 2];
        }
    }
    return J;
}

Poly2 Poly2::coordinate_x() {
    Poly2 p(1);
    p.at(1, 0) = 1.0;
    return p;
}

Poly2 Poly2::coordinate_y() {
    Poly2 p(1);
    p.at(0, 1) = 1.0;
    return p;
}

}  // namespace gbm
