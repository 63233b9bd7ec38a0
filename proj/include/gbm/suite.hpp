#ifndef GBM_SUITE_HPP
#define GBM_SUITE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gbm/ehrhard.hpp"
#include "gbm/report.hpp"

namespace gbm {

/** Deterministic suite configuration. Identical configs produce
 * byte-identical reports. `tol_override`, when set, replaces the tolerance
 * of every pass/fail check (report-only checks are unaffected). */
struct SuiteConfig {
    std::uint64_t seed = 20260813;
    int grid = 512;
    int n_radial = 64;
    int n_angular = 256;
    std::optional<double> tol_override;
    std::string out_dir = "report";

    int n_poincare = 200;
    int n_variation = 100;
    int n_ehrhard = 50;
    int n_dual = 50;
    int n_chain = 20;
    int n_reilly = 20;

    nlohmann::ordered_json echo() const;
};

SuiteConfig parse_config(const nlohmann::json& j);

struct SuiteResult {
    ReportDocument report;
    std::vector<std::pair<std::string, ConcavityProfile>> profiles;  // name -> profile
};

/** Run every check; pure computation, no file I/O. */
SuiteResult run_suite(const SuiteConfig& config);

/** Write report.json, report.csv, and one SVG per profile into out_dir. */
void write_outputs(const SuiteResult& result, const std::string& out_dir);

}  // namespace gbm

#endif
