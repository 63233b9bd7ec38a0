#ifndef GBM_QUADRATURE_HPP
#define GBM_QUADRATURE_HPP

#include <functional>
#include <stdexcept>
#include <vector>

namespace gbm {

/** Raised when an adaptive rule cannot reach the requested tolerance
 * (typically a divergent or non-integrable integrand). */
class quadrature_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/** Gauss-Legendre nodes and weights on [-1,1], computed by Newton iteration
 * on the Legendre recurrence. Results are cached per n. */
struct GaussLegendre {
    std::vector<double> nodes, weights;
    static const GaussLegendre& get(int n);
};

/** Integral of f over [a,b] by a single (7,15) Gauss-Kronrod panel.
 * err_estimate receives the usual |G7-K15| based estimate. */
double gk15_panel(const std::function<double(double)>& f, double a, double b, double* err_estimate = nullptr);

/** Adaptive bisection on (7,15) Gauss-Kronrod panels to absolute tolerance.
 * Throws quadrature_error if the tolerance is unreachable within max_depth. */
double adaptive_gk(const std::function<double(double)>& f, double a, double b, double abs_tol = 1e-12,
                   int max_depth = 48);

}  // namespace gbm

#endif
