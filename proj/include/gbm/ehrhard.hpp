#ifndef GBM_EHRHARD_HPP
#define GBM_EHRHARD_HPP

#include <vector>

#include "gbm/body2d.hpp"
#include "gbm/gaussfn.hpp"

namespace gbm {

/** Sampled t -> F(t) with second-difference diagnostics. Concavity on the
 * grid means max_second_diff <= tolerance; a decisively positive second
 * difference certifies convexity somewhere. */
struct ConcavityProfile {
    std::vector<double> t;
    std::vector<double> F;
    std::vector<double> second_diff;  // F_{j-1} - 2 F_j + F_{j+1}, length m-2
    double max_second_diff;
    int argmax;  // index into second_diff
};

ConcavityProfile make_profile(std::vector<double> ts, std::vector<double> Fs);

/** F(t) = Phi^{-1}(gamma((1-t)K + tL)) on a uniform grid of m points in [0,1]. */
ConcavityProfile ehrhard_concavity(const SupportBody& K, const SupportBody& L, int m = 65);

/** Parallel half-planes {<x,w> <= a} and {<x,w> <= c}: the interpolation is
 * the half-plane at (1-t)a + tc, so F is exactly linear. Computed through the
 * honest Phi^{-1}(Phi(.)) round trip, not by shortcutting to the line. */
ConcavityProfile ehrhard_halfplanes(double a, double c, int m = 65);

/** F(t) = transform(gamma((1-t)K + tL)): the generalized concavity statement
 * for a measure with profile transform `transform`. */
ConcavityProfile transform_concavity(const SupportBody& K, const SupportBody& L,
                                     const ProfileTransform& transform, int m = 65);

/** One-dimensional Gaussian conditioned on (-inf, b]: the profile of
 * g(t) = Phi^{-1}(Phi(t)/Phi(b)) on [b-2, b-1e-9] turns convex as t -> b-,
 * breaking Ehrhard-type concavity for this CD(1,infinity) measure. `shifted`
 * is the same phenomenon written as K + t[-1,1] for the half-line
 * K = (-inf, b-1]. */
struct Cd1Report {
    ConcavityProfile profile;
    ConcavityProfile shifted;
    bool violated;      // some second difference exceeds +1e-6
    double end_value;   // g at the last grid point; grows without bound as t -> b
};

Cd1Report cd1_counterexample(double b, int m = 257);

}  // namespace gbm

#endif
