#ifndef GBM_GAUSSFN_HPP
#define GBM_GAUSSFN_HPP

#include <functional>
#include <vector>

namespace gbm {

/** Standard normal density and CDF at t. cdf is computed from the
 * complementary error function, accurate to a few ulp over the whole line. */
struct NormalPair {
    double density;
    double cdf;
};
NormalPair std_normal(double t);

/** Density phi(t). */
double normal_pdf(double t);
/** CDF Phi(t). */
double normal_cdf(double t);
/** Upper tail 1 - Phi(t), without cancellation for large t. */
double normal_ccdf(double t);

/** Inverse CDF. Rational initial approximation polished by two Newton steps.
 * Throws std::domain_error for v outside (0,1). */
double std_normal_inv(double v);

/** Gaussian isoperimetric profile I(v) = phi(Phi^{-1}(v)) and its
 * logarithmic derivative (log I)'(v) = -Phi^{-1}(v) / I(v). */
struct ProfilePair {
    double I;
    double log_deriv;
};
ProfilePair gaussian_profile(double v);

/** Transform v -> int_{1/2}^v exp(-int_{1/2}^t G(s) ds) dt for a scalar
 * function G on a subinterval [lo,hi] of (0,1).
 *
 * The antiderivative A(t) = int_{1/2}^t G is resolved once, at construction,
 * on an adaptive panel grid; the object is immutable afterwards and safe to
 * share across threads. Construction throws quadrature_error when the inner
 * integral fails to converge (non-integrable G). */
class ProfileTransform {
  public:
    ProfileTransform(std::function<double(double)> G, double lo, double hi, double quad_tol = 1e-10);

    /** Phi_mu^{-1}(v); strictly increasing; exactly 0 at v = 1/2. */
    double operator()(double v) const;

    double lo() const { return lo_; }
    double hi() const { return hi_; }

  private:
    double antiderivative(double t) const;  // A(t), t in [lo,hi]

    std::function<double(double)> G_;
    double lo_, hi_, tol_;
    std::vector<double> breaks_;  // sorted panel endpoints, breaks_.front()==lo
    std::vector<double> cumA_;    // A at each breakpoint
};

}  // namespace gbm

#endif
