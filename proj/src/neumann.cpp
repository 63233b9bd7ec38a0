#include "gbm/neumann.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gbm/gaussfn.hpp"
#include "gbm/quadrature.hpp"

namespace gbm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Chebyshev values and first two derivatives at xi by the three-term
// recurrences (no monomial conversion: stays stable at high degree).
void cheb_arrays(double xi, int d, double* T, double* T1, double* T2) {
    T[0] = 1.0;
    T1[0] = 0.0;
    T2[0] = 0.0;
    if (d == 0) return;
    T[1] = xi;
    T1[1] = 1.0;
    T2[1] = 0.0;
    for (int k = 1; k < d; ++k) {
        T[k + 1] = 2.0 * xi * T[k] - T[k - 1];
        T1[k + 1] = 2.0 * T[k] + 2.0 * xi * T1[k] - T1[k - 1];
        T2[k + 1] = 4.0 * T1[k] + 2.0 * xi * T2[k] - T2[k - 1];
    }
}

struct BasisLayout {
    int degree;
    int size;                          // (d+1)(d+2)/2
    std::vector<std::pair<int, int>> ij;  // total-degree order, (0,0) first
};

BasisLayout basis_layout(int d) {
    BasisLayout L;
    L.degree = d;
    L.size = (d + 1) * (d + 2) / 2;
    L.ij.reserve(L.size);
    for (int total = 0; total <= d; ++total)
        for (int i = 0; i <= total; ++i) L.ij.emplace_back(i, total - i);
    return L;
}

// Jets of every basis function T_i((x-cx)/R) T_j((y-cy)/R) at one point.
void basis_jets(const BasisLayout& L, const Eigen::Vector2d& c, double R, double x, double y,
                double* v, double* vx, double* vy, double* vxx, double* vxy, double* vyy) {
    int d = L.degree;
    std::vector<double> Tx(d + 1), Tx1(d + 1), Tx2(d + 1), Ty(d + 1), Ty1(d + 1), Ty2(d + 1);
    double xi = (x - c(0)) / R, eta = (y - c(1)) / R;
    cheb_arrays(xi, d, Tx.data(), Tx1.data(), Tx2.data());
    cheb_arrays(eta, d, Ty.data(), Ty1.data(), Ty2.data());
    double iR = 1.0 / R, iR2 = iR * iR;
    for (int k = 0; k < L.size; ++k) {
        auto [i, j] = L.ij[k];
        v[k] = Tx[i] * Ty[j];
        vx[k] = Tx1[i] * Ty[j] * iR;
        vy[k] = Tx[i] * Ty1[j] * iR;
        vxx[k] = Tx2[i] * Ty[j] * iR2;
        vxy[k] = Tx1[i] * Ty1[j] * iR2;
        vyy[k] = Tx[i] * Ty2[j] * iR2;
    }
}

Jet2 jet_from_cheb(const Eigen::VectorXd& coef, const BasisLayout& L, const Eigen::Vector2d& c,
                   double R, double x, double y) {
    std::vector<double> v(L.size), vx(L.size), vy(L.size), vxx(L.size), vxy(L.size), vyy(L.size);
    basis_jets(L, c, R, x, y, v.data(), vx.data(), vy.data(), vxx.data(), vxy.data(), vyy.data());
    Jet2 J{0, 0, 0, 0, 0, 0};
    for (int k = 0; k < L.size; ++k) {
        double a = coef(k);
        J.v += a * v[k];
        J.gx += a * vx[k];
        J.gy += a * vy[k];
        J.hxx += a * vxx[k];
        J.hxy += a * vxy[k];
        J.hyy += a * vyy[k];
    }
    return J;
}

// Chebyshev-center-like point: maximize the concave piecewise-linear
// p -> min_j (h_j - <p, nu_j>) by nested ternary search.
Eigen::Vector2d inner_center(const BoundaryGrid& g) {
    double hmax = 0.0;
    for (double hv : g.h) hmax = std::max(hmax, std::abs(hv));
    auto depth = [&](double p1, double p2) {
        double m = std::numeric_limits<double>::infinity();
        for (int j = 0; j < g.M; ++j) m = std::min(m, g.h[j] - p1 * g.nu1[j] - p2 * g.nu2[j]);
        return m;
    };
    auto best_p2 = [&](double p1) {
        double lo = -hmax, hi = hmax;
        for (int it = 0; it < 90; ++it) {
            double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
            if (depth(p1, m1) < depth(p1, m2))
                lo = m1;
            else
                hi = m2;
        }
        return 0.5 * (lo + hi);
    };
    double lo = -hmax, hi = hmax;
    for (int it = 0; it < 90; ++it) {
        double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
        if (depth(m1, best_p2(m1)) < depth(m2, best_p2(m2)))
            lo = m1;
        else
            hi = m2;
    }
    double p1 = 0.5 * (lo + hi);
    Eigen::Vector2d p(p1, best_p2(p1));
    if (depth(p(0), p(1)) <= 0.0)
        throw std::runtime_error("interior quadrature center ended up outside the body");
    return p;
}

}  // namespace

WeightedDomain WeightedDomain::make(SupportBody body, Poly2 V, int n_radial, int n_angular) {
    WeightedDomain d(std::move(body), std::move(V));
    d.bgrid_ = boundary_geometry(d.body_);
    const BoundaryGrid& g = d.bgrid_;
    d.center_ = inner_center(g);

    double R = 0.0;
    for (int j = 0; j < g.M; ++j) {
        R = std::max(R, std::abs(g.x1[j] - d.center_(0)));
        R = std::max(R, std::abs(g.x2[j] - d.center_(1)));
    }
    d.box_radius_ = R * (1.0 + 1e-12) + 1e-300;

    const GaussLegendre& gl = GaussLegendre::get(n_radial);
    const auto& h = d.body_.support();
    int N = n_radial * n_angular;
    d.qx_.resize(N);
    d.qy_.resize(N);
    d.qw_.resize(N);
    double dphi = kTwoPi / n_angular;
    int idx = 0;
    for (int l = 0; l < n_angular; ++l) {
        double th = dphi * l;
        double c = std::cos(th), s = std::sin(th);
        double h0 = h.deriv(th, 0), h1 = h.deriv(th, 1), h2 = h.deriv(th, 2);
        double bx = h0 * c - h1 * s, by = h0 * s + h1 * c;
        double r = h0 + h2;
        double depth = h0 - d.center_(0) * c - d.center_(1) * s;
        double jac = r * depth;  // cross(x - p, x') = r * (h - <p, nu>)
        double dx = bx - d.center_(0), dy = by - d.center_(1);
        for (int k = 0; k < n_radial; ++k, ++idx) {
            // map GL nodes from [-1,1] to s in [0,1]
            double sk = 0.5 * (gl.nodes[k] + 1.0);
            double wk = 0.5 * gl.weights[k];
            double px = d.center_(0) + sk * dx, py = d.center_(1) + sk * dy;
            d.qx_(idx) = px;
            d.qy_(idx) = py;
            d.qw_(idx) = wk * sk * jac * dphi * std::exp(-d.V_.jet(px, py).v);
        }
    }
    d.mu_ = d.qw_.sum();

    d.bweights_.resize(g.M);
    d.H_mu_.resize(g.M);
    for (int j = 0; j < g.M; ++j) {
        Jet2 Vj = d.V_.jet(g.x1[j], g.x2[j]);
        d.bweights_[j] = std::exp(-Vj.v) * g.w_leb[j];
        d.H_mu_[j] = g.kappa[j] - (Vj.gx * g.nu1[j] + Vj.gy * g.nu2[j]);
    }
    return d;
}

WeightedDomain WeightedDomain::make_gaussian(SupportBody body, int n_radial, int n_angular) {
    Poly2 V(2);
    V.at(0, 0) = std::log(kTwoPi);
    V.at(2, 0) = 0.5;
    V.at(0, 2) = 0.5;
    WeightedDomain d = make(std::move(body), std::move(V), n_radial, n_angular);
    d.gaussian_ = true;
    return d;
}

WeightedDomain WeightedDomain::make_lebesgue(SupportBody body, int n_radial, int n_angular) {
    WeightedDomain d = make(std::move(body), Poly2(0), n_radial, n_angular);
    d.lebesgue_ = true;
    return d;
}

Jet2 NeumannSolution::jet(double x, double y) const {
    BasisLayout L = basis_layout(degree);
    return jet_from_cheb(coeffs, L, box_center, box_radius, x, y);
}

NeumannSolution solve_neumann(const WeightedDomain& domain, const BoundaryFunction& f,
                              int degree) {
    const BoundaryGrid& g = domain.boundary();
    const BasisLayout L = basis_layout(degree);
    const int NB = L.size;
    const int N = static_cast<int>(domain.qw().size());
    const Eigen::ArrayXd& qw = domain.qw();

    // Interior basis jets.
    Eigen::MatrixXd B(N, NB), Bx(N, NB), By(N, NB), Bxx(N, NB), Bxy(N, NB), Byy(N, NB);
    {
        std::vector<double> v(NB), vx(NB), vy(NB), vxx(NB), vxy(NB), vyy(NB);
        for (int i = 0; i < N; ++i) {
            basis_jets(L, domain.center(), domain.enclosing_radius(), domain.qx()(i),
                       domain.qy()(i), v.data(), vx.data(), vy.data(), vxx.data(), vxy.data(),
                       vyy.data());
            for (int k = 0; k < NB; ++k) {
                B(i, k) = v[k];
                Bx(i, k) = vx[k];
                By(i, k) = vy[k];
                Bxx(i, k) = vxx[k];
                Bxy(i, k) = vxy[k];
                Byy(i, k) = vyy[k];
            }
        }
    }

    // Weighted modified Gram-Schmidt in L^2(mu), one reorthogonalization
    // pass. Columns whose norm collapses are dropped and flagged.
    Eigen::MatrixXd Q = B;
    Eigen::MatrixXd Rmat = Eigen::MatrixXd::Zero(NB, NB);
    std::vector<int> kept;
    kept.reserve(NB);
    bool rank_deficient = false;
    double first_norm = 0.0;
    for (int j = 0; j < NB; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (int i : kept) {
                double r = (qw * Q.col(i).array() * Q.col(j).array()).sum();
                Rmat(i, j) += r;
                Q.col(j) -= r * Q.col(i);
            }
        }
        double nrm = std::sqrt((qw * Q.col(j).array().square()).sum());
        if (j == 0) first_norm = nrm;
        if (nrm < 1e-13 * first_norm) {
            rank_deficient = true;
            continue;
        }
        Rmat(j, j) = nrm;
        Q.col(j) /= nrm;
        kept.push_back(j);
    }
    const int K = static_cast<int>(kept.size());

    // T maps orthonormal coefficients back to raw Chebyshev coefficients:
    // column k of Q equals B * T.col(k).
    Eigen::MatrixXd Rk(K, K);
    for (int a = 0; a < K; ++a)
        for (int b = 0; b < K; ++b) Rk(a, b) = Rmat(kept[a], kept[b]);
    Eigen::MatrixXd Tk =
        Rk.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(K, K));
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(NB, K);
    for (int a = 0; a < K; ++a) T.row(kept[a]) = Tk.row(a);

    // Stiffness in the orthonormal basis.
    Eigen::MatrixXd Gx = Bx * T, Gy = By * T;
    Eigen::MatrixXd S = Gx.transpose() * (Gx.array().colwise() * qw).matrix() +
                        Gy.transpose() * (Gy.array().colwise() * qw).matrix();

    // Boundary data and load vector.
    const std::vector<double>& wb = domain.boundary_weights();
    Eigen::VectorXd fb(g.M);
    for (int j = 0; j < g.M; ++j) fb(j) = f.deriv(g.theta[j], 0);
    double mass_f = 0.0;
    for (int j = 0; j < g.M; ++j) mass_f += fb(j) * wb[j];
    double c = mass_f / domain.mu();

    Eigen::MatrixXd Vb(g.M, NB);
    {
        std::vector<double> v(NB), vx(NB), vy(NB), vxx(NB), vxy(NB), vyy(NB);
        for (int j = 0; j < g.M; ++j) {
            basis_jets(L, domain.center(), domain.enclosing_radius(), g.x1[j], g.x2[j], v.data(),
                       vx.data(), vy.data(), vxx.data(), vxy.data(), vyy.data());
            for (int k = 0; k < NB; ++k) Vb(j, k) = v[k];
        }
    }
    Eigen::MatrixXd Qb = Vb * T;
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(K);
    for (int k = 0; k < K; ++k) {
        double acc = 0.0;
        for (int j = 0; j < g.M; ++j) acc += fb(j) * Qb(j, k) * wb[j];
        // int e_k dmu vanishes for k >= 1 by orthogonality to the constant;
        // keep the term so the load is the honest weak-form right side.
        double mean_k = (qw * Q.col(kept[k]).array()).sum();
        rhs(k) = acc - c * mean_k;
    }

    // Zero-mean constraint: drop the constant mode, solve the SPD reduced
    // system, one step of iterative refinement.
    Eigen::MatrixXd Sr = S.bottomRightCorner(K - 1, K - 1);
    Eigen::VectorXd rr = rhs.tail(K - 1);
    Eigen::LDLT<Eigen::MatrixXd> ldlt(Sr);
    Eigen::VectorXd alpha = ldlt.solve(rr);
    alpha += ldlt.solve(rr - Sr * alpha);

    NeumannSolution sol;
    sol.degree = degree;
    sol.box_center = domain.center();
    sol.box_radius = domain.enclosing_radius();
    sol.c = c;
    sol.rank_deficient = rank_deficient;
    sol.coeffs = T.rightCols(K - 1) * alpha;

    // Interior PDE residual || L u - c ||_L2(mu).
    {
        Eigen::VectorXd lap = (Bxx + Byy) * sol.coeffs;
        Eigen::VectorXd ux = Bx * sol.coeffs, uy = By * sol.coeffs;
        double acc = 0.0;
        for (int i = 0; i < N; ++i) {
            Jet2 Vj = domain.potential().jet(domain.qx()(i), domain.qy()(i));
            double Lu = lap(i) - (Vj.gx * ux(i) + Vj.gy * uy(i));
            acc += (Lu - c) * (Lu - c) * qw(i);
        }
        sol.pde_residual = std::sqrt(acc);
    }

    // Boundary traces by exact differentiation.
    sol.u.resize(g.M);
    sol.u_nu.resize(g.M);
    sol.u_nunu.resize(g.M);
    sol.du_ds.resize(g.M);
    sol.dun_ds.resize(g.M);
    double flux = 0.0;
    for (int j = 0; j < g.M; ++j) {
        Jet2 J = jet_from_cheb(sol.coeffs, L, sol.box_center, sol.box_radius, g.x1[j], g.x2[j]);
        double n1 = g.nu1[j], n2 = g.nu2[j], t1 = g.tau1[j], t2 = g.tau2[j];
        sol.u[j] = J.v;
        sol.u_nu[j] = J.gx * n1 + J.gy * n2;
        sol.u_nunu[j] = J.hxx * n1 * n1 + 2.0 * J.hxy * n1 * n2 + J.hyy * n2 * n2;
        sol.du_ds[j] = J.gx * t1 + J.gy * t2;
        double hess_tn = J.hxx * t1 * n1 + J.hxy * (t1 * n2 + t2 * n1) + J.hyy * t2 * n2;
        sol.dun_ds[j] = hess_tn + g.kappa[j] * sol.du_ds[j];
        double d = sol.u_nu[j] - fb(j);
        flux += d * d * wb[j];
    }
    sol.flux_residual = std::sqrt(flux);
    return sol;
}

namespace {

// int_bd <Hess u nu, grad u> dmu_bd from boundary jets of a solved problem.
double hessian_boundary_form(const WeightedDomain& domain, const NeumannSolution& sol) {
    const BoundaryGrid& g = domain.boundary();
    const std::vector<double>& wb = domain.boundary_weights();
    const BasisLayout L = basis_layout(sol.degree);
    double acc = 0.0;
    for (int j = 0; j < g.M; ++j) {
        Jet2 J = jet_from_cheb(sol.coeffs, L, sol.box_center, sol.box_radius, g.x1[j], g.x2[j]);
        double hv1 = J.hxx * g.nu1[j] + J.hxy * g.nu2[j];
        double hv2 = J.hxy * g.nu1[j] + J.hyy * g.nu2[j];
        acc += (hv1 * J.gx + hv2 * J.gy) * wb[j];
    }
    return acc;
}

}  // namespace

IdentityCheck gamma2_identity(const WeightedDomain& domain, const NeumannSolution& sol) {
    const int N = static_cast<int>(domain.qw().size());
    const BasisLayout L = basis_layout(sol.degree);
    double lhs = 0.0;
    for (int i = 0; i < N; ++i) {
        double x = domain.qx()(i), y = domain.qy()(i);
        Jet2 J = jet_from_cheb(sol.coeffs, L, sol.box_center, sol.box_radius, x, y);
        Jet2 Vj = domain.potential().jet(x, y);
        double hessV = Vj.hxx * J.gx * J.gx + 2.0 * Vj.hxy * J.gx * J.gy + Vj.hyy * J.gy * J.gy;
        double hess2 = J.hxx * J.hxx + 2.0 * J.hxy * J.hxy + J.hyy * J.hyy;
        lhs += (hessV + hess2) * domain.qw()(i);
    }
    double rhs = hessian_boundary_form(domain, sol);
    return {lhs, rhs, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs))};
}

ReillyTerms reilly_residual(const WeightedDomain& domain, const Poly2& u) {
    const int N = static_cast<int>(domain.qw().size());
    ReillyTerms T{0, 0, 0, 0, 0, 0, 0};
    for (int i = 0; i < N; ++i) {
        double x = domain.qx()(i), y = domain.qy()(i);
        Jet2 J = u.jet(x, y);
        Jet2 Vj = domain.potential().jet(x, y);
        double Lu = J.hxx + J.hyy - (Vj.gx * J.gx + Vj.gy * J.gy);
        double w = domain.qw()(i);
        T.lhs += Lu * Lu * w;
        T.hess += (J.hxx * J.hxx + 2.0 * J.hxy * J.hxy + J.hyy * J.hyy) * w;
        T.hessV += (Vj.hxx * J.gx * J.gx + 2.0 * Vj.hxy * J.gx * J.gy + Vj.hyy * J.gy * J.gy) * w;
    }
    const BoundaryGrid& g = domain.boundary();
    const std::vector<double>& wb = domain.boundary_weights();
    for (int j = 0; j < g.M; ++j) {
        Jet2 J = u.jet(g.x1[j], g.x2[j]);
        double n1 = g.nu1[j], n2 = g.nu2[j], t1 = g.tau1[j], t2 = g.tau2[j];
        double u_nu = J.gx * n1 + J.gy * n2;
        double u_s = J.gx * t1 + J.gy * t2;
        double hess_tn = J.hxx * t1 * n1 + J.hxy * (t1 * n2 + t2 * n1) + J.hyy * t2 * n2;
        double un_s = hess_tn + g.kappa[j] * u_s;
        T.bnd_H += domain.H_mu()[j] * u_nu * u_nu * wb[j];
        T.bnd_II += g.kappa[j] * u_s * u_s * wb[j];
        T.bnd_cross += -2.0 * un_s * u_s * wb[j];
    }
    double rhs = T.hess + T.hessV + T.bnd_H + T.bnd_II + T.bnd_cross;
    T.residual = std::abs(T.lhs - rhs) / std::max(1.0, std::abs(T.lhs));
    return T;
}

double cs_pointwise(const WeightedDomain& domain, const Poly2& u) {
    const BoundaryGrid& g = domain.boundary();
    double best = std::numeric_limits<double>::infinity();
    for (int j = 0; j < g.M; ++j) {
        Jet2 J = u.jet(g.x1[j], g.x2[j]);
        double t1 = g.tau1[j], t2 = g.tau2[j], n1 = g.nu1[j], n2 = g.nu2[j];
        double u_s = J.gx * t1 + J.gy * t2;
        double hess_tn = J.hxx * t1 * n1 + J.hxy * (t1 * n2 + t2 * n1) + J.hyy * t2 * n2;
        double un_s = hess_tn + g.kappa[j] * u_s;
        double k = g.kappa[j];
        best = std::min(best, k * u_s * u_s + un_s * un_s / k - 2.0 * un_s * u_s);
    }
    return best;
}

D2nReport d2n_probe(const WeightedDomain& domain, const BoundaryFunction& f, int degree) {
    if (!domain.is_gaussian())
        throw std::domain_error("d2n_probe: the conjectured F is specific to the Gaussian weight");
    NeumannSolution sol = solve_neumann(domain, f, degree);
    const BoundaryGrid& g = domain.boundary();
    const std::vector<double>& wb = domain.boundary_weights();
    double mass_f = 0.0;
    for (int j = 0; j < g.M; ++j) mass_f += f.deriv(g.theta[j], 0) * wb[j];

    GaussianFunctionals gf = gaussian_functionals(g);
    double v = gf.measure;
    double F = 1.0 / v - gaussian_profile(v).log_deriv;

    D2nReport r;
    r.numerator = hessian_boundary_form(domain, sol);
    r.mass_f = mass_f;
    r.F_conjectured = F;
    r.mean_zero = std::abs(mass_f) < 1e-10 * std::max(1.0, gf.boundary_mass);
    if (r.mean_zero) {
        r.ratio = std::numeric_limits<double>::quiet_NaN();
        r.margin = std::numeric_limits<double>::quiet_NaN();
    } else {
        r.ratio = r.numerator / (mass_f * mass_f);
        r.margin = r.ratio - F;
    }
    return r;
}

D2nHalfline d2n_halfline(double t) {
    D2nHalfline r;
    double pdf = normal_pdf(t), cdf = normal_cdf(t);
    r.c = pdf / cdf;
    r.ratio = 1.0 / cdf + t / pdf;
    ProfilePair p = gaussian_profile(cdf);
    r.F_conjectured = 1.0 / cdf - p.log_deriv;
    r.margin = r.ratio - r.F_conjectured;

    // Independent path: v = u' solves v' = c + x v with vanishing flux in the
    // tail; the spurious mode e^{x^2/2} decays forward of x0, so v(x0) = 0 is
    // self-correcting. u''(t) = c + t v(t).
    const double x0 = t - 10.0;
    const int n = 40000;
    const double hstep = (t - x0) / n;
    double x = x0, v = 0.0;
    auto rhs = [&](double xx, double vv) { return r.c + xx * vv; };
    for (int i = 0; i < n; ++i) {
        double k1 = rhs(x, v);
        double k2 = rhs(x + 0.5 * hstep, v + 0.5 * hstep * k1);
        double k3 = rhs(x + 0.5 * hstep, v + 0.5 * hstep * k2);
        double k4 = rhs(x + hstep, v + hstep * k3);
        v += hstep / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        x += hstep;
    }
    double upp = r.c + t * v;
    r.ratio_ode = upp / pdf;
    r.margin_ode = r.ratio_ode - r.F_conjectured;
    return r;
}

double concave_chain_slack(const WeightedDomain& domain, const BoundaryFunction& f, int degree) {
    if (!domain.is_lebesgue())
        throw std::domain_error("concave_chain_slack: the N = 2 chain is the Lebesgue instance");
    NeumannSolution sol = solve_neumann(domain, f, degree);
    const BoundaryGrid& g = domain.boundary();
    const std::vector<double>& wb = domain.boundary_weights();
    double mass_f = 0.0;
    for (int j = 0; j < g.M; ++j) mass_f += f.deriv(g.theta[j], 0) * wb[j];
    double area = lebesgue_functionals(g).area;
    double lhs = hessian_boundary_form(domain, sol);
    return lhs - 0.5 * mass_f * mass_f / area;
}

}  // namespace gbm
