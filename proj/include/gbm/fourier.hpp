#ifndef GBM_FOURIER_HPP
#define GBM_FOURIER_HPP

#include <cstddef>
#include <vector>

namespace gbm {

/** Real trigonometric polynomial a0 + sum_k (a_k cos k*theta + b_k sin k*theta).
 *
 * Used both for support functions of convex bodies and for test functions on
 * the boundary (identified with functions of the normal angle). Evaluation of
 * derivatives is exact term-by-term differentiation. */
class FourierSeries {
  public:
    FourierSeries() : a0_(0) {}
    FourierSeries(double a0, std::vector<double> cos_coeffs, std::vector<double> sin_coeffs);

    static FourierSeries constant(double c) { return FourierSeries(c, {}, {}); }

    double a0() const { return a0_; }
    const std::vector<double>& cos_coeffs() const { return cos_; }
    const std::vector<double>& sin_coeffs() const { return sin_; }
    /** Highest harmonic with a stored coefficient (0 for constants). */
    int degree() const { return static_cast<int>(cos_.size()); }

    /** d^order/dtheta^order at theta, order in {0,1,2,3}. */
    double deriv(double theta, int order) const;
    double operator()(double theta) const { return deriv(theta, 0); }

    /** Coefficient-wise alpha*this + beta*other. */
    FourierSeries axpby(double alpha, double beta, const FourierSeries& other) const;
    /** Series of theta -> f(theta - alpha). */
    FourierSeries rotated(double alpha) const;

    double max_abs() const;  // crude sup-norm bound: |a0| + sum |coeffs|

  private:
    double a0_;
    std::vector<double> cos_, sin_;  // index k-1 holds the k-th harmonic
};

}  // namespace gbm

#endif
