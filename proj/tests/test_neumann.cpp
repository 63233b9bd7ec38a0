#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "gbm/generators.hpp"
#include "gbm/neumann.hpp"
#include "gbm/poly2.hpp"
#include "gbm/rng.hpp"
#include "oracles.hpp"

using namespace gbm;

TEST_CASE("poly2 jets match finite differences") {
    CounterRng rng(404, 9);
    Poly2 p = random_poly2(rng, 5, 0.6);
    const double h = 1e-5;
    for (auto [x, y] : {std::pair{0.3, -0.4}, std::pair{-0.9, 0.7}, std::pair{0.0, 0.0}}) {
        Jet2 j = p.jet(x, y);
        double gx = (p.jet(x + h, y).v - p.jet(x - h, y).v) / (2 * h);
        double gy = (p.jet(x, y + h).v - p.jet(x, y - h).v) / (2 * h);
        double hxx = (p.jet(x + h, y).v - 2 * j.v + p.jet(x - h, y).v) / (h * h);
        double hxy = (p.jet(x + h, y + h).v - p.jet(x + h, y - h).v - p.jet(x - h, y + h).v +
                      p.jet(x - h, y - h).v) /
                     (4 * h * h);
        CHECK(j.gx == doctest::Approx(gx).epsilon(1e-7));
        CHECK(j.gy == doctest::Approx(gy).epsilon(1e-7));
        CHECK(j.hxx == doctest::Approx(hxx).epsilon(1e-4));
        CHECK(j.hxy == doctest::Approx(hxy).epsilon(1e-4));
    }
    CHECK(Poly2::coordinate_x().jet(0.7, -0.1).v == doctest::Approx(0.7));
    CHECK(Poly2::coordinate_x().jet(0.7, -0.1).gx == doctest::Approx(1.0));
    CHECK_THROWS_AS(p.at(9, 9), std::out_of_range);
}

TEST_CASE("weighted domain reproduces bulk measures") {
    SupportBody disc1 = SupportBody::disc(1.0);
    WeightedDomain g = WeightedDomain::make_gaussian(disc1);
    CHECK(g.is_gaussian());
    CHECK(g.mu() == doctest::Approx(1.0 - std::exp(-0.5)).epsilon(1e-11));
    WeightedDomain l = WeightedDomain::make_lebesgue(disc1);
    CHECK(l.is_lebesgue());
    CHECK(l.mu() == doctest::Approx(std::acos(-1.0)).epsilon(1e-11));

    // H_mu for the gaussian weight is the gaussian mean curvature kappa - h
    const BoundaryGrid& bg = g.boundary();
    for (int j = 0; j < bg.M; j += 61)
        CHECK(g.H_mu()[j] == doctest::Approx(bg.H_gamma[j]).epsilon(1e-12));

    // off-center bodies still integrate correctly
    SupportBody off = SupportBody::disc(0.8, 0.4, -0.3);
    WeightedDomain go = WeightedDomain::make_gaussian(off);
    CHECK(go.mu() == doctest::Approx(oracle::offset_disc_measure(0.8, 0.4, -0.3)).epsilon(2e-10));
}

TEST_CASE("lebesgue disc with cosine flux recovers the linear function") {
    WeightedDomain dom = WeightedDomain::make_lebesgue(SupportBody::disc(1.0));
    NeumannSolution sol = solve_neumann(dom, BoundaryFunction(0.0, {1.0}, {}), 12);
    CHECK_FALSE(sol.rank_deficient);
    CHECK(std::abs(sol.c) < 1e-12);
    CHECK(sol.flux_residual < 1e-11);
    const BoundaryGrid& bg = dom.boundary();
    for (int j = 0; j < bg.M; j += 31)
        CHECK(sol.u[j] == doctest::Approx(bg.x1[j]).epsilon(1e-11));
    Jet2 inside = sol.jet(0.2, -0.35);
    CHECK(inside.v == doctest::Approx(0.2).epsilon(1e-11));
    CHECK(inside.gx == doctest::Approx(1.0).epsilon(1e-11));
    CHECK(std::abs(inside.hxx) < 1e-9);
}

TEST_CASE("gaussian disc with unit flux matches the radial ode oracle") {
    WeightedDomain dom = WeightedDomain::make_gaussian(SupportBody::disc(1.0));
    NeumannSolution sol = solve_neumann(dom, BoundaryFunction::constant(1.0), 12);
    double c_exact = std::exp(-0.5) / (1.0 - std::exp(-0.5));
    CHECK(sol.c == doctest::Approx(c_exact).epsilon(1e-10));
    CHECK(sol.flux_residual < 1e-6);
    CHECK(sol.pde_residual < 1e-6);

    oracle::RadialOde ode = oracle::radial_gaussian_neumann(c_exact);
    CHECK(ode.u1_one == doctest::Approx(1.0).epsilon(1e-8));  // sanity of the oracle itself
    CHECK(sol.jet(0.5, 0.0).gx == doctest::Approx(ode.u1_half).epsilon(1e-7));
    // closed form u'(rho) = c (e^{rho^2/2} - 1)/rho
    CHECK(ode.u1_half ==
          doctest::Approx(c_exact * (std::exp(0.125) - 1.0) / 0.5).epsilon(1e-8));
}

TEST_CASE("reilly terms for u = x1 on the gaussian unit disc are closed-form") {
    WeightedDomain dom = WeightedDomain::make_gaussian(SupportBody::disc(1.0));
    ReillyTerms t = reilly_residual(dom, Poly2::coordinate_x());
    double e = std::exp(-0.5);
    CHECK(t.lhs == doctest::Approx(1.0 - 1.5 * e).epsilon(1e-10));
    CHECK(std::abs(t.hess) < 1e-13);
    CHECK(t.hessV == doctest::Approx(1.0 - e).epsilon(1e-10));
    CHECK(std::abs(t.bnd_H) < 1e-13);  // H_gamma == 0 on the unit circle
    CHECK(t.bnd_II == doctest::Approx(0.5 * e).epsilon(1e-10));
    CHECK(t.bnd_cross == doctest::Approx(-e).epsilon(1e-10));
    CHECK(t.residual < 1e-12);
}

TEST_CASE("reilly identity holds for seeded polynomials on ellipses") {
    SupportBody e = ellipse_body(1.2, 0.8);
    WeightedDomain dg = WeightedDomain::make_gaussian(e);
    WeightedDomain dl = WeightedDomain::make_lebesgue(e);
    for (std::uint64_t s : {0ull, 1ull, 2ull}) {
        CounterRng rng(11, s);
        Poly2 u = random_poly2(rng, 5, 0.6);
        CHECK(reilly_residual(dg, u).residual < 1e-9);
        CHECK(reilly_residual(dl, u).residual < 1e-9);
        CHECK(cs_pointwise(dg, u) >= -1e-13);
        CHECK(cs_pointwise(dl, u) >= -1e-13);
    }
}

TEST_CASE("bochner boundary identity holds for solved neumann problems") {
    WeightedDomain dom = WeightedDomain::make_gaussian(SupportBody::disc(1.0));
    NeumannSolution sol = solve_neumann(dom, BoundaryFunction::constant(1.0), 12);
    IdentityCheck ic = gamma2_identity(dom, sol);
    CHECK(ic.residual < 1e-6);
    CHECK(ic.lhs > 0.0);

    CounterRng rb(12, 0), rf(12, 1);
    SupportBody b = random_body(rb, 4, 512);
    WeightedDomain rd = WeightedDomain::make_lebesgue(b);
    NeumannSolution rs = solve_neumann(rd, random_boundary_function(rf, 4), 12);
    CHECK(gamma2_identity(rd, rs).residual < 1e-4);
}

TEST_CASE("half-line comparison margin vanishes in closed form and by ode") {
    for (double t : {-1.0, 0.0, 0.7, 2.0}) {
        D2nHalfline h = d2n_halfline(t);
        CHECK(std::abs(h.margin) < 1e-12);
        CHECK(std::abs(h.margin_ode) < 1e-8);
        CHECK(h.ratio == doctest::Approx(1.0 / normal_cdf(t) + t / normal_pdf(t)).epsilon(1e-12));
    }
}

TEST_CASE("2d probe on the disc reduces to a closed form and flags zero mass") {
    WeightedDomain dom = WeightedDomain::make_gaussian(SupportBody::disc(1.0));
    D2nReport r = d2n_probe(dom, BoundaryFunction::constant(1.0), 12);
    double v = 1.0 - std::exp(-0.5);
    REQUIRE_FALSE(r.mean_zero);
    CHECK(r.ratio == doctest::Approx(1.0 / v).epsilon(1e-6));
    CHECK(r.margin == doctest::Approx(gaussian_profile(v).log_deriv).epsilon(1e-5));
    CHECK(r.margin > 0.0);

    D2nReport z = d2n_probe(dom, BoundaryFunction(0.0, {1.0}, {}), 12);
    CHECK(z.mean_zero);

    WeightedDomain leb = WeightedDomain::make_lebesgue(SupportBody::disc(1.0));
    CHECK_THROWS_AS(d2n_probe(leb, BoundaryFunction::constant(1.0), 12), std::domain_error);
}

TEST_CASE("lebesgue chain slack vanishes on the disc with unit flux") {
    WeightedDomain dom = WeightedDomain::make_lebesgue(SupportBody::disc(1.0));
    double slack = concave_chain_slack(dom, BoundaryFunction::constant(1.0), 12);
    CHECK(std::abs(slack) < 1e-8);

    CounterRng rb(13, 0), rf(13, 1);
    SupportBody b = random_body(rb, 4, 512);
    WeightedDomain rd = WeightedDomain::make_lebesgue(b);
    CHECK(concave_chain_slack(rd, random_boundary_function(rf, 4), 12) >= -1e-8);

    WeightedDomain g = WeightedDomain::make_gaussian(SupportBody::disc(1.0));
    CHECK_THROWS_AS(concave_chain_slack(g, BoundaryFunction::constant(1.0), 12),
                    std::domain_error);
}
