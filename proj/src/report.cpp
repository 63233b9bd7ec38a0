#include "gbm/report.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace gbm {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        default: return "report-only";
    }
}

void ReportDocument::add(CheckRecord rec) {
    switch (rec.verdict) {
        case Verdict::pass: ++n_pass; break;
        case Verdict::fail: ++n_fail; break;
        default: ++n_report_only; break;
    }
    checks.push_back(std::move(rec));
}

nlohmann::ordered_json ReportDocument::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["config"] = config_echo;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json r;
        r["name"] = c.name;
        r["inputs_digest"] = c.inputs_digest;
        r["values"] = c.values;
        r["metric"] = c.metric;
        r["tolerance"] = c.tolerance;
        r["verdict"] = to_string(c.verdict);
        arr.push_back(std::move(r));
    }
    j["checks"] = std::move(arr);
    j["summary"] = {{"pass", n_pass}, {"fail", n_fail}, {"report-only", n_report_only}};
    return j;
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string fnv1a_hex(std::string_view s) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << fnv1a(s);
    return os.str();
}

void write_report_json(const ReportDocument& doc, const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    out << doc.to_json().dump(2) << '\n';
}

void write_report_csv(const ReportDocument& doc, const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    out << "name,verdict,metric,tolerance\n";
    out << std::setprecision(17);
    for (const auto& c : doc.checks)
        out << c.name << ',' << to_string(c.verdict) << ',' << c.metric << ',' << c.tolerance
            << '\n';
}

void write_svg_profile(const ConcavityProfile& p, const std::string& title,
                       const std::filesystem::path& file) {
    const double W = 800, H = 480, mL = 60, mR = 20, mT = 40, mB = 40;
    double tmin = p.t.front(), tmax = p.t.back();
    double fmin = p.F.front(), fmax = p.F.front();
    for (double v : p.F) {
        fmin = std::min(fmin, v);
        fmax = std::max(fmax, v);
    }
    if (fmax - fmin < 1e-12) {
        fmax += 0.5;
        fmin -= 0.5;
    }
    auto X = [&](double t) { return mL + (t - tmin) / (tmax - tmin) * (W - mL - mR); };
    auto Y = [&](double f) { return H - mB - (f - fmin) / (fmax - fmin) * (H - mT - mB); };

    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    out << std::setprecision(8);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
        << title << "</text>\n";
    out << "<line x1=\"" << mL << "\" y1=\"" << H - mB << "\" x2=\"" << W - mR << "\" y2=\""
        << H - mB << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << mL << "\" y1=\"" << mT << "\" x2=\"" << mL << "\" y2=\"" << H - mB
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << mL - 8 << "\" y=\"" << Y(fmin) << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << fmin << "</text>\n";
    out << "<text x=\"" << mL - 8 << "\" y=\"" << Y(fmax) + 4 << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << fmax << "</text>\n";
    out << "<text x=\"" << X(tmin) << "\" y=\"" << H - mB + 16 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
        << tmin << "</text>\n";
    out << "<text x=\"" << X(tmax) << "\" y=\"" << H - mB + 16 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
        << tmax << "</text>\n";
    out << "<polyline fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < p.t.size(); ++i) out << X(p.t[i]) << ',' << Y(p.F[i]) << ' ';
    out << "\"/>\n</svg>\n";
}

}  // namespace gbm
