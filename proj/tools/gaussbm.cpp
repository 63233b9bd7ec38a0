#include <cmath>
#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gbm/body2d.hpp"
#include "gbm/ehrhard.hpp"
#include "gbm/generators.hpp"
#include "gbm/inequalities.hpp"
#include "gbm/io.hpp"
#include "gbm/neumann.hpp"
#include "gbm/rng.hpp"
#include "gbm/suite.hpp"
#include "gbm/variations.hpp"

namespace {

using nlohmann::ordered_json;

gbm::ParsedBody load_body(const std::string& path) {
    return gbm::parse_body(gbm::load_json_file(path));
}

gbm::BoundaryFunction load_function(const std::string& path) {
    return gbm::parse_function(gbm::load_json_file(path));
}

double constant_value(const gbm::BoundaryFunction& f) {
    for (double c : f.cos_coeffs())
        if (c != 0.0) throw gbm::schema_error("f", "half-plane branch requires a constant f");
    for (double c : f.sin_coeffs())
        if (c != 0.0) throw gbm::schema_error("f", "half-plane branch requires a constant f");
    return f.a0();
}

ordered_json profile_json(const gbm::ConcavityProfile& p) {
    ordered_json j;
    j["t"] = p.t;
    j["F"] = p.F;
    j["second_diff"] = p.second_diff;
    j["max_second_diff"] = p.max_second_diff;
    j["argmax"] = p.argmax;
    return j;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_run(const std::string& config_path, std::optional<std::uint64_t> seed,
            std::optional<std::string> out, std::optional<int> grid, std::optional<double> tol) {
    gbm::SuiteConfig cfg;
    if (!config_path.empty()) cfg = gbm::parse_config(gbm::load_json_file(config_path));
    if (seed) cfg.seed = *seed;
    if (out) cfg.out_dir = *out;
    if (grid) cfg.grid = *grid;
    if (tol) cfg.tol_override = *tol;

    gbm::SuiteResult result = gbm::run_suite(cfg);
    gbm::write_outputs(result, cfg.out_dir);

    ordered_json summary;
    summary["schema"] = gbm::kReportSchema;
    summary["out"] = cfg.out_dir;
    summary["pass"] = result.report.n_pass;
    summary["fail"] = result.report.n_fail;
    summary["report_only"] = result.report.n_report_only;
    if (result.report.n_fail > 0) {
        ordered_json failures = ordered_json::array();
        for (const gbm::CheckRecord& rec : result.report.checks)
            if (rec.verdict == gbm::Verdict::fail)
                failures.push_back({{"name", rec.name},
                                    {"metric", rec.metric},
                                    {"tolerance", rec.tolerance}});
        summary["failures"] = failures;
    }
    emit(summary);
    return result.report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gaussian boundary inequality laboratory for planar convex bodies"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "run the full deterministic check suite");
    std::string run_config;
    std::uint64_t run_seed = 0;
    std::string run_out;
    int run_grid = 0;
    double run_tol = 0.0;
    run->add_option("--config", run_config, "JSON config file");
    auto* opt_seed = run->add_option("--seed", run_seed, "RNG seed (overrides config)");
    auto* opt_out = run->add_option("--out", run_out, "output directory (overrides config)");
    auto* opt_grid = run->add_option("--grid", run_grid, "boundary grid size (overrides config)");
    auto* opt_tol = run->add_option("--tol", run_tol, "tolerance override for every check");

    std::string body_path, f_path, a_path, b_path;
    std::string mode = "gaussian";
    int grid_m = 65;
    double cd1_b = 0.0;
    int degree = 12;
    bool lebesgue = false;
    std::uint64_t poly_seed = 1;
    int poly_degree = 5;
    double halfline_t = 0.0;
    bool use_halfline = false;
    double dual_c = 0.0;
    bool has_dual_c = false;

    auto* poincare = app.add_subcommand("poincare", "boundary Poincare gap for one (body, f)");
    poincare->add_option("--body", body_path, "body JSON")->required();
    poincare->add_option("--f", f_path, "test function JSON")->required();

    auto* variations = app.add_subcommand("variations", "first/second variation vs finite differences");
    variations->add_option("--body", body_path, "body JSON")->required();
    variations->add_option("--f", f_path, "test function JSON")->required();
    variations->add_option("--mode", mode, "gaussian or lebesgue")
        ->check(CLI::IsMember({"gaussian", "lebesgue"}));

    auto* ehrhard = app.add_subcommand("ehrhard", "concavity profile along Minkowski interpolation");
    ehrhard->add_option("--a", a_path, "first body JSON")->required();
    ehrhard->add_option("--b", b_path, "second body JSON")->required();
    ehrhard->add_option("--grid", grid_m, "number of interpolation samples");

    auto* cd1 = app.add_subcommand("cd1", "one-dimensional conditioned-Gaussian counterexample");
    cd1->add_option("--b", cd1_b, "conditioning threshold");

    auto* neumann = app.add_subcommand("neumann", "solve the weighted Neumann problem");
    neumann->add_option("--body", body_path, "body JSON")->required();
    neumann->add_option("--f", f_path, "boundary flux JSON")->required();
    neumann->add_option("--degree", degree, "polynomial degree");
    neumann->add_flag("--lebesgue", lebesgue, "use Lebesgue weight instead of Gaussian");

    auto* reilly = app.add_subcommand("reilly", "Reilly identity residual for a seeded polynomial");
    reilly->add_option("--body", body_path, "body JSON")->required();
    reilly->add_option("--seed", poly_seed, "polynomial seed");
    reilly->add_option("--degree", poly_degree, "polynomial degree (<= 5)")
        ->check(CLI::Range(1, 5));
    reilly->add_flag("--lebesgue", lebesgue, "use Lebesgue weight instead of Gaussian");

    auto* d2n = app.add_subcommand("d2n", "Dirichlet-form comparison probe (report-only)");
    auto* d2n_body = d2n->add_option("--body", body_path, "body JSON");
    auto* d2n_f = d2n->add_option("--f", f_path, "boundary flux JSON");
    auto* d2n_hl = d2n->add_option("--halfline", halfline_t, "closed-form half-line branch at t");
    d2n->add_option("--degree", degree, "polynomial degree");
    d2n_body->needs(d2n_f);
    d2n_hl->excludes(d2n_body);

    auto* dual = app.add_subcommand("dual", "dual inequality gap for a mean-convex body");
    dual->add_option("--body", body_path, "body JSON")->required();
    dual->add_option("--f", f_path, "test function JSON")->required();
    auto* opt_c = dual->add_option("--C", dual_c, "constant C (optimized when omitted)");

    auto* iso = app.add_subcommand("iso", "isoperimetric floor and Ledoux chain quantities");
    iso->add_option("--body", body_path, "body JSON")->required();

    CLI11_PARSE(app, argc, argv);

    use_halfline = d2n_hl->count() > 0;
    has_dual_c = opt_c->count() > 0;

    try {
        if (run->parsed()) {
            return cmd_run(run_config,
                           opt_seed->count() ? std::optional<std::uint64_t>(run_seed) : std::nullopt,
                           opt_out->count() ? std::optional<std::string>(run_out) : std::nullopt,
                           opt_grid->count() ? std::optional<int>(run_grid) : std::nullopt,
                           opt_tol->count() ? std::optional<double>(run_tol) : std::nullopt);
        }

        if (poincare->parsed()) {
            gbm::ParsedBody pb = load_body(body_path);
            gbm::BoundaryFunction f = load_function(f_path);
            gbm::PoincareReport r = pb.half_plane
                                        ? gbm::poincare_report(*pb.half_plane, constant_value(f))
                                        : gbm::poincare_report(*pb.body, f);
            ordered_json j;
            j["check"] = "poincare";
            j["measure"] = r.measure;
            j["boundary_mass"] = r.boundary_mass;
            j["coeff"] = r.coeff;
            j["mass_f"] = r.mass_f;
            j["term_dirichlet"] = r.term_dirichlet;
            j["term_mean"] = r.term_mean;
            j["term_curvature"] = r.term_curvature;
            j["gap"] = r.gap;
            j["prev_gap"] = r.prev_gap;
            j["refined_defined"] = r.refined_defined;
            j["refined_extra"] = r.refined_extra;
            j["refined_gap"] = r.refined_gap;
            emit(j);
            return 0;
        }

        if (variations->parsed()) {
            gbm::ParsedBody pb = load_body(body_path);
            if (!pb.body) throw gbm::schema_error("body", "variations requires a bounded body");
            gbm::BoundaryFunction f = load_function(f_path);
            gbm::WeightMode wm =
                mode == "gaussian" ? gbm::WeightMode::gaussian : gbm::WeightMode::lebesgue;
            gbm::VariationReport v = gbm::variations(*pb.body, f, wm);
            gbm::FdVariations fd = gbm::fd_variations(*pb.body, f, wm);
            ordered_json j;
            j["check"] = "variations";
            j["mode"] = mode;
            j["delta0"] = v.delta0;
            j["delta1"] = v.delta1;
            j["delta2"] = v.delta2;
            j["fd_d1"] = fd.d1;
            j["fd_d2"] = fd.d2;
            j["fd_step"] = fd.h_step;
            j["d1_error"] = std::abs(v.delta1 - fd.d1);
            j["d2_error"] = std::abs(v.delta2 - fd.d2);
            emit(j);
            return 0;
        }

        if (ehrhard->parsed()) {
            gbm::ParsedBody pa = load_body(a_path);
            gbm::ParsedBody pc = load_body(b_path);
            ordered_json j;
            j["check"] = "ehrhard";
            if (pa.half_plane && pc.half_plane) {
                if (pa.half_plane->angle != pc.half_plane->angle)
                    throw gbm::schema_error("b.angle", "half-planes must be parallel");
                j["profile"] = profile_json(
                    gbm::ehrhard_halfplanes(pa.half_plane->t, pc.half_plane->t, grid_m));
            } else if (pa.body && pc.body) {
                j["profile"] = profile_json(gbm::ehrhard_concavity(*pa.body, *pc.body, grid_m));
            } else {
                throw gbm::schema_error("a", "bodies must both be bounded or both half-planes");
            }
            j["max_second_diff"] = j["profile"]["max_second_diff"];
            emit(j);
            return 0;
        }

        if (cd1->parsed()) {
            gbm::Cd1Report r = gbm::cd1_counterexample(cd1_b);
            ordered_json j;
            j["check"] = "cd1";
            j["b"] = cd1_b;
            j["violated"] = r.violated;
            j["end_value"] = r.end_value;
            j["profile"] = profile_json(r.profile);
            j["shifted"] = profile_json(r.shifted);
            emit(j);
            return 0;
        }

        if (neumann->parsed()) {
            gbm::ParsedBody pb = load_body(body_path);
            if (!pb.body) throw gbm::schema_error("body", "neumann requires a bounded body");
            gbm::BoundaryFunction f = load_function(f_path);
            gbm::WeightedDomain dom = lebesgue ? gbm::WeightedDomain::make_lebesgue(*pb.body)
                                               : gbm::WeightedDomain::make_gaussian(*pb.body);
            gbm::NeumannSolution sol = gbm::solve_neumann(dom, f, degree);
            gbm::IdentityCheck g2 = gbm::gamma2_identity(dom, sol);
            ordered_json j;
            j["check"] = "neumann";
            j["weight"] = lebesgue ? "lebesgue" : "gaussian";
            j["degree"] = sol.degree;
            j["c"] = sol.c;
            j["pde_residual"] = sol.pde_residual;
            j["flux_residual"] = sol.flux_residual;
            j["rank_deficient"] = sol.rank_deficient;
            j["gamma2_lhs"] = g2.lhs;
            j["gamma2_rhs"] = g2.rhs;
            j["gamma2_residual"] = g2.residual;
            emit(j);
            return 0;
        }

        if (reilly->parsed()) {
            gbm::ParsedBody pb = load_body(body_path);
            if (!pb.body) throw gbm::schema_error("body", "reilly requires a bounded body");
            gbm::CounterRng rng(poly_seed, 0);
            gbm::Poly2 u = gbm::random_poly2(rng, poly_degree, 0.6);
            gbm::WeightedDomain dom = lebesgue ? gbm::WeightedDomain::make_lebesgue(*pb.body)
                                               : gbm::WeightedDomain::make_gaussian(*pb.body);
            gbm::ReillyTerms t = gbm::reilly_residual(dom, u);
            ordered_json j;
            j["check"] = "reilly";
            j["weight"] = lebesgue ? "lebesgue" : "gaussian";
            j["poly_seed"] = poly_seed;
            j["poly_degree"] = poly_degree;
            j["lhs"] = t.lhs;
            j["hess"] = t.hess;
            j["hessV"] = t.hessV;
            j["bnd_H"] = t.bnd_H;
            j["bnd_II"] = t.bnd_II;
            j["bnd_cross"] = t.bnd_cross;
            j["residual"] = t.residual;
            j["cs_min_slack"] = gbm::cs_pointwise(dom, u);
            emit(j);
            return 0;
        }

        if (d2n->parsed()) {
            ordered_json j;
            j["check"] = "d2n";
            if (use_halfline) {
                gbm::D2nHalfline h = gbm::d2n_halfline(halfline_t);
                j["branch"] = "halfline";
                j["t"] = halfline_t;
                j["ratio"] = h.ratio;
                j["ratio_ode"] = h.ratio_ode;
                j["conjectured"] = h.F_conjectured;
                j["margin"] = h.margin;
                j["margin_ode"] = h.margin_ode;
            } else {
                if (d2n_body->count() == 0)
                    throw gbm::schema_error("body", "d2n needs --body/--f or --halfline");
                gbm::ParsedBody pb = load_body(body_path);
                if (!pb.body) throw gbm::schema_error("body", "d2n requires a bounded body");
                gbm::BoundaryFunction f = load_function(f_path);
                gbm::WeightedDomain dom = gbm::WeightedDomain::make_gaussian(*pb.body);
                gbm::D2nReport r = gbm::d2n_probe(dom, f, degree);
                j["branch"] = "body";
                j["numerator"] = r.numerator;
                j["mass_f"] = r.mass_f;
                j["ratio"] = r.ratio;
                j["conjectured"] = r.F_conjectured;
                j["margin"] = r.margin;
                j["mean_zero"] = r.mean_zero;
            }
            j["verdict"] = "report-only";
            emit(j);
            return 0;
        }

        if (dual->parsed()) {
            gbm::ParsedBody pb = load_body(body_path);
            if (!pb.body) throw gbm::schema_error("body", "dual requires a bounded body");
            gbm::BoundaryFunction f = load_function(f_path);
            gbm::DualReport r = gbm::dual_gap(
                *pb.body, f, has_dual_c ? std::optional<double>(dual_c) : std::nullopt);
            ordered_json j;
            j["check"] = "dual";
            j["min_H_gamma"] = r.min_H_gamma;
            j["C"] = r.C;
            j["lhs"] = r.lhs;
            j["rhs"] = r.rhs;
            j["gap"] = r.gap;
            emit(j);
            return 0;
        }

        if (iso->parsed()) {
            gbm::ParsedBody pb = load_body(body_path);
            ordered_json j;
            j["check"] = "iso";
            gbm::IsoLedoux r = pb.half_plane ? gbm::isoperimetric_and_ledoux(*pb.half_plane)
                                             : gbm::isoperimetric_and_ledoux(*pb.body);
            j["iso_slack"] = r.iso_slack;
            j["F_prime0"] = r.F_prime0;
            j["limit_t"] = r.limit_t;
            j["limit_estimate"] = r.limit_estimate;
            emit(j);
            return 0;
        }
    } catch (const gbm::schema_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
