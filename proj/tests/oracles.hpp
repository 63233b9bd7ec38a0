#ifndef GBM_TESTS_ORACLES_HPP
#define GBM_TESTS_ORACLES_HPP

#include "gbm/body2d.hpp"

// Independent reference implementations used only by tests. Everything here
// avoids the library's own special-function code paths: erf by Taylor series
// and Lentz continued fraction in long double, measures by polar rays and
// noncentral chi-square series, the radial Neumann derivative by RK4.
namespace oracle {

long double erf_ld(long double x);
long double erfc_ld(long double x);
long double normal_pdf_ld(long double t);
long double normal_cdf_ld(long double t);
/** Inverse of normal_cdf_ld by bisection + Newton polish. v in (0,1). */
long double inv_cdf_ld(long double v);

/** Gaussian measure by polar rays from the origin; requires the origin in the
 * interior (min h > 0). Radial distance R(psi) = min_theta h(theta)/cos(psi-theta). */
double gauss_measure_polar(const gbm::SupportBody& body, int n_psi = 4096);

/** Gaussian measure of a disc of radius r centered at (cx, cy), by the
 * noncentral chi-square series. */
double offset_disc_measure(double r, double cx, double cy);

struct Shoelace {
    double area;
    double perimeter;
};
/** Area and perimeter of a dense inscribed polygon. */
Shoelace shoelace(const gbm::SupportBody& body, int n = 200000);

struct RadialOde {
    double u1_half;   // u'(1/2)
    double u1_one;    // u'(1)
};
/** RK4 integration of the radial Gaussian Neumann equation on the unit disc:
 * w' = c - w/rho + rho w, w(0) = 0, where w = u'. */
RadialOde radial_gaussian_neumann(double c, int steps = 20000);

}  // namespace oracle

#endif
