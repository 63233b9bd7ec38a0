#ifndef GBM_INEQUALITIES_HPP
#define GBM_INEQUALITIES_HPP

#include <array>
#include <optional>

#include "gbm/variations.hpp"

namespace gbm {

/** Both sides of the boundary Poincare inequality
 *   int (df/ds)^2/kappa dg + (log I)'(gamma(K)) (int f dg)^2 >= int H_gamma f^2 dg
 * (dg = Gaussian boundary measure), its signed gap, the previous-coefficient
 * variant with 1/gamma(K), and the refined extra term built from
 * beta = (log I)'(gamma(K)) * gamma_boundary - H_gamma. */
struct PoincareReport {
    double measure;          // gamma(K)
    double boundary_mass;    // gamma_boundary(K)
    double coeff;            // (log I)'(measure)
    double mass_f;           // int f dgamma_boundary
    double term_curvature;   // int H_gamma f^2
    double term_mean;        // coeff * mass_f^2
    double term_dirichlet;   // int (df/ds)^2 / kappa
    double gap;              // dirichlet + mean - curvature
    double prev_gap;         // dirichlet + (1/measure) mass_f^2 - curvature
    double beta_mass;        // int beta dgamma_boundary
    double beta_f;           // int f beta dgamma_boundary
    bool refined_defined;    // beta_mass > 0 (fails only against the constant-f corollary)
    double refined_extra;    // beta_f^2 / beta_mass when defined, else 0
    double refined_gap;      // gap - refined_extra
};

PoincareReport poincare_report(const SupportBody& body, const BoundaryFunction& f);

/** Analytic branch: boundary is a line, the Gaussian factorizes, f must be
 * constant. Uses (log I)'(Phi(t)) = -t/phi(t) in closed form, so the equality
 * case is exact to rounding. */
PoincareReport poincare_report(const HalfPlane& hp, double f_const);

/** Slack of the constant-f corollary:
 * (log I)'(gamma(K)) gamma_boundary^2 - int H_gamma dgamma_boundary >= 0.
 * Also reports int H_gamma dgamma_boundary, which must be <= 0 once
 * gamma(K) >= 1/2. */
struct MeanCurvatureSlack {
    double slack;
    double total_H;  // int H_gamma dgamma_boundary
    double measure;
};
MeanCurvatureSlack mean_curvature_slack(const SupportBody& body);
MeanCurvatureSlack mean_curvature_slack(const HalfPlane& hp);

/** Compare the second variation of Gaussian measure under the unit normal
 * flow against the half-plane E of equal Gaussian measure. Requires
 * gamma(K) >= 1/2 (throws std::domain_error otherwise). */
struct IsoSecondVariation {
    double delta2_K;  // int H_gamma dgamma_boundary
    double delta2_E;  // -t phi(t) at t = Phi^{-1}(gamma(K))
    double t_E;
    bool ok;          // delta2_K <= delta2_E + 1e-8 and both <= 0
};
IsoSecondVariation iso_second_variation_compare(const SupportBody& body);
IsoSecondVariation iso_second_variation_compare(const HalfPlane& hp);

/** Dual inequality for strictly Gaussian mean-convex bodies:
 *   int kappa (df/ds)^2 dg <= int (1/H_gamma) (Lf + (f-C)/2)^2 dg
 * where L is the induced boundary Ornstein-Uhlenbeck operator
 * Lf = d^2f/ds^2 - <x, tau> df/ds. Holds for every C; the minimizing C is
 * located by golden-section search when none is supplied. */
struct DualReport {
    double min_H_gamma;
    double C;           // the constant actually used
    double lhs;         // int (1/H_gamma)(Lf + (f-C)/2)^2
    double rhs;         // int kappa (df/ds)^2
    double gap;         // lhs - rhs
};
DualReport dual_gap(const SupportBody& body, const BoundaryFunction& f,
                    std::optional<double> C = std::nullopt);

/** Gaussian isoperimetric slack, the derivative bound from the Ledoux-style
 * chain, and the large-radius limit Phi^{-1}(gamma(t D))/t at t in {5,8,12}
 * (computed through the closed-form tail exp(-t^2/2) to avoid cancellation). */
struct IsoLedoux {
    double iso_slack;   // gamma_boundary - I_gamma(gamma(K))
    double F_prime0;    // (Phi^{-1})'(gamma(K)) * gamma_boundary, expected >= 1
    std::array<double, 3> limit_t;
    std::array<double, 3> limit_estimate;
};
IsoLedoux isoperimetric_and_ledoux(const SupportBody& body);
IsoLedoux isoperimetric_and_ledoux(const HalfPlane& hp);

}  // namespace gbm

#endif
