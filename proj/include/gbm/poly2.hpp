#ifndef GBM_POLY2_HPP
#define GBM_POLY2_HPP

#include <vector>

namespace gbm {

/** Value, gradient, and Hessian of a bivariate function at a point. */
struct Jet2 {
    double v;
    double gx, gy;
    double hxx, hxy, hyy;
};

/** Dense bivariate polynomial sum c_{ij} x^i y^j, i + j <= degree. Intended
 * for low degree (<= 8); coefficients are in the monomial basis. */
class Poly2 {
  public:
    explicit Poly2(int degree = 0);

    int degree() const { return degree_; }
    double& at(int i, int j);
    double at(int i, int j) const;

    Jet2 jet(double x, double y) const;

    static Poly2 coordinate_x();
    static Poly2 coordinate_y();

  private:
    int degree_;
    std::vector<double> c_;  // (degree+1) x (degree+1), row i = x-power
};

}  // namespace gbm

#endif
