#ifndef GBM_VARIATIONS_HPP
#define GBM_VARIATIONS_HPP

#include <stdexcept>

#include "gbm/body2d.hpp"

namespace gbm {

/** Test function f on the boundary, identified with f composed with the
 * inverse Gauss map: a Fourier series in the normal angle theta. Perturbing
 * the support function by t*f realizes the normal-speed-f flow. */
using BoundaryFunction = FourierSeries;

enum class WeightMode { gaussian, lebesgue };

struct VariationReport {
    double delta0;  // bulk functional of the body (gamma(K) or area)
    double delta1;  // int f dmu_boundary
    double delta2;  // int H_mu f^2 dmu_boundary - int (df/ds)^2 / kappa dmu_boundary
    WeightMode mode;
    int grid;
};

VariationReport variations(const SupportBody& body, const BoundaryFunction& f, WeightMode mode);

/** Thrown when h + t f leaves the valid cone for some |t| <= 2*h_step. */
class step_rejection : public std::runtime_error {
  public:
    explicit step_rejection(double largest_admissible);
    double largest_admissible() const { return largest_; }

  private:
    double largest_;
};

struct FdVariations {
    double d1;
    double d2;
    double h_step;
};

/** Central differences of t -> mu((1-0)K with support h + t f) at t = 0,
 * Richardson-extrapolated from steps 2h and h. Requires validity of the
 * perturbed support function for |t| <= 2*h_step. */
FdVariations fd_variations(const SupportBody& body, const BoundaryFunction& f, WeightMode mode,
                           double h_step = 1e-3);

/** Largest s such that h + t f stays delta_min-convex on the grid for
 * |t| <= s (infinity when f + f'' vanishes identically). */
double largest_admissible_step(const SupportBody& body, const BoundaryFunction& f,
                               double delta_min = 1e-6);

/** Signed slack of the planar second Minkowski inequality for f == 1:
 * (1/2) L^2 / A - int kappa ds, zero exactly on discs. */
double minkowski_second_slack(const SupportBody& body);

struct SteinerFit {
    double area;      // fitted t^0 coefficient
    double perimeter; // fitted t^1 coefficient
    double c2;        // fitted t^2 coefficient, pi for every convex body
    double residual;  // max deviation of the quadratic fit over the nodes
};

/** Least-squares quadratic fit of t -> area(K + t D) on five nodes in [0,1];
 * exact by the Steiner polynomial, so the residual is quadrature-level. */
SteinerFit steiner_fit(const SupportBody& body);

}  // namespace gbm

#endif
