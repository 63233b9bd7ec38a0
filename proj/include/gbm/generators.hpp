#ifndef GBM_GENERATORS_HPP
#define GBM_GENERATORS_HPP

#include "gbm/body2d.hpp"
#include "gbm/poly2.hpp"
#include "gbm/rng.hpp"
#include "gbm/variations.hpp"

namespace gbm {

/** Random strictly convex body: harmonics of degree >= 2 are rescaled so the
 * curvature radius keeps a fixed relative margin, degree-1 terms translate
 * the body off-center. Always valid by construction. */
SupportBody random_body(CounterRng& rng, int max_degree = 6, int grid_size = 512);

/** Random body with min H_gamma > 0.1: small bodies (curvature radius well
 * under 1) with bounded translation, so 1/(h+h'') - h stays away from 0. */
SupportBody random_mean_convex_body(CounterRng& rng, int grid_size = 512);

/** Random test function with coefficients ~ N(0,1)/k^2 up to max_degree. */
BoundaryFunction random_boundary_function(CounterRng& rng, int max_degree = 6);

/** Shift a test function by a constant so that its integral against the
 * given boundary weights vanishes. */
BoundaryFunction make_zero_mean(const BoundaryFunction& f, const BoundaryGrid& grid,
                                const std::vector<double>& weights);

/** Random polynomial with decaying coefficients (scale^(i+j) damping). */
Poly2 random_poly2(CounterRng& rng, int degree, double scale = 0.5);

/** Fourier truncation of the support function of an axis-aligned ellipse
 * with semi-axes (a, b), h(theta) = sqrt(a^2 cos^2 + b^2 sin^2). */
SupportBody ellipse_body(double a, double b, int degree = 16, int grid_size = 512);

}  // namespace gbm

#endif
