#ifndef GBM_BODY2D_HPP
#define GBM_BODY2D_HPP

#include <vector>

#include "gbm/fourier.hpp"

namespace gbm {

/** Planar convex body described by a truncated Fourier support function
 * h(theta). Strict convexity requires h + h'' > 0; degree-1 coefficients are
 * translations and do not affect convexity. Bodies need not contain the
 * origin. Immutable. */
class SupportBody {
  public:
    explicit SupportBody(FourierSeries h, int grid_size = 512);

    const FourierSeries& support() const { return h_; }
    int grid_size() const { return grid_; }

    /** Disc of radius r centered at (cx, cy): h = r + cx cos + cy sin. */
    static SupportBody disc(double r, double cx = 0.0, double cy = 0.0, int grid_size = 512);

  private:
    FourierSeries h_;
    int grid_;
};

/** Unbounded half-plane {x : <x, (cos angle, sin angle)> <= t}. All Gaussian
 * functionals are closed-form; used for the exact equality cases. */
struct HalfPlane {
    double t;
    double angle;
};

/** Boundary geometry sampled at M uniform normal angles theta_j.
 * x = h nu + h' tau, radius of curvature = h + h'', kappa = 1/(h + h''),
 * H_gamma = kappa - <x, nu> = kappa - h. */
struct BoundaryGrid {
    int M;
    double dtheta;
    std::vector<double> theta;
    std::vector<double> x1, x2;          // boundary points
    std::vector<double> nu1, nu2;        // outer unit normals (cos, sin)
    std::vector<double> tau1, tau2;      // unit tangents (-sin, cos)
    std::vector<double> h;               // support values = <x, nu>
    std::vector<double> hp;              // h'
    std::vector<double> radius;          // h + h'' = 1/kappa
    std::vector<double> kappa;
    std::vector<double> kappa_prime;     // d(kappa)/dtheta = -(h' + h''')/radius^2
    std::vector<double> H_gamma;         // kappa - h
    std::vector<double> w_leb;           // arclength weights, radius * dtheta
    std::vector<double> gauss_density;   // exp(-|x|^2/2)/(2 pi)
    std::vector<double> w_gauss;         // gauss_density * w_leb
};

struct ValidationResult {
    bool ok;
    double min_radius;   // min over grid of h + h''
    double theta_min;    // where the minimum is attained
    double delta_min;    // threshold used
};

ValidationResult validate(const SupportBody& body, double delta_min = 1e-6);

/** Throws std::invalid_argument carrying min(h+h'') when validation fails. */
void require_valid(const SupportBody& body, double delta_min = 1e-6);

BoundaryGrid boundary_geometry(const SupportBody& body);

struct GaussianFunctionals {
    double measure;        // gamma(K), by the boundary line integral of Phi(x1) phi(x2) dx2
    double boundary_mass;  // gamma_boundary(K)
};
GaussianFunctionals gaussian_functionals(const SupportBody& body);
GaussianFunctionals gaussian_functionals(const BoundaryGrid& grid);
GaussianFunctionals gaussian_functionals(const HalfPlane& hp);

struct LebesgueFunctionals {
    double area;       // Green's theorem, contour integral of x1 dx2
    double perimeter;  // sum of arclength weights
};
LebesgueFunctionals lebesgue_functionals(const SupportBody& body);
LebesgueFunctionals lebesgue_functionals(const BoundaryGrid& grid);

/** Minkowski combination a*K + b*L via support-function linearity; a, b >= 0
 * and a + b > 0. Grid size is the larger of the two operands'. */
SupportBody combine(double a, const SupportBody& K, double b, const SupportBody& L);

/** The body rotated by alpha about the origin. */
SupportBody rotated(const SupportBody& body, double alpha);

}  // namespace gbm

#endif
