#ifndef GBM_REPORT_HPP
#define GBM_REPORT_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gbm/ehrhard.hpp"

namespace gbm {

inline constexpr const char* kReportSchema = "gauss-bm-report/1";

enum class Verdict { pass, fail, report_only };

std::string to_string(Verdict v);

struct CheckRecord {
    std::string name;
    std::string inputs_digest;       // FNV-1a of the canonical input description
    nlohmann::ordered_json values;   // measured quantities
    double metric;                   // the decisive number
    double tolerance;                // threshold it was compared against (0 for report-only)
    Verdict verdict;
};

struct ReportDocument {
    nlohmann::ordered_json config_echo;
    std::vector<CheckRecord> checks;
    int n_pass = 0;
    int n_fail = 0;
    int n_report_only = 0;

    void add(CheckRecord rec);
    bool all_passed() const { return n_fail == 0; }
    nlohmann::ordered_json to_json() const;
};

std::uint64_t fnv1a(std::string_view s);
std::string fnv1a_hex(std::string_view s);

void write_report_json(const ReportDocument& doc, const std::filesystem::path& file);
void write_report_csv(const ReportDocument& doc, const std::filesystem::path& file);
void write_svg_profile(const ConcavityProfile& p, const std::string& title,
                       const std::filesystem::path& file);

}  // namespace gbm

#endif
