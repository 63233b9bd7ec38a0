#include "gbm/io.hpp"

#include <fstream>
#include <vector>

namespace gbm {

namespace {

double require_number(const nlohmann::json& j, const std::string& key) {
    if (!j.contains(key)) throw schema_error(key, "missing required key");
    if (!j.at(key).is_number()) throw schema_error(key, "expected a number");
    return j.at(key).get<double>();
}

std::vector<double> optional_array(const nlohmann::json& j, const std::string& key) {
    if (!j.contains(key)) return {};
    const auto& a = j.at(key);
    if (!a.is_array()) throw schema_error(key, "expected an array of numbers");
    std::vector<double> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_number())
            throw schema_error(key + "[" + std::to_string(i) + "]", "expected a number");
        out.push_back(a[i].get<double>());
    }
    return out;
}

int optional_grid(const nlohmann::json& j) {
    if (!j.contains("grid")) return 512;
    if (!j.at("grid").is_number_integer()) throw schema_error("grid", "expected an integer");
    int g = j.at("grid").get<int>();
    if (g < 16) throw schema_error("grid", "grid size must be at least 16");
    return g;
}

}  // namespace

ParsedBody parse_body(const nlohmann::json& j) {
    if (!j.is_object()) throw schema_error("", "body document must be a JSON object");
    std::string type = j.value("type", "fourier");
    if (type == "fourier") {
        double a0 = require_number(j, "a0");
        ParsedBody p;
        p.body = SupportBody(FourierSeries(a0, optional_array(j, "cos"), optional_array(j, "sin")),
                             optional_grid(j));
        return p;
    }
    if (type == "disc") {
        double r = require_number(j, "r");
        if (!(r > 0.0)) throw schema_error("r", "radius must be positive");
        double cx = 0.0, cy = 0.0;
        if (j.contains("center")) {
            auto c = optional_array(j, "center");
            if (c.size() != 2) throw schema_error("center", "expected [cx, cy]");
            cx = c[0];
            cy = c[1];
        }
        ParsedBody p;
        p.body = SupportBody::disc(r, cx, cy, optional_grid(j));
        return p;
    }
    if (type == "halfplane") {
        ParsedBody p;
        p.half_plane = HalfPlane{require_number(j, "t"), j.contains("angle") ? require_number(j, "angle") : 0.0};
        return p;
    }
    throw schema_error("type", "unknown body type \"" + type + "\"");
}

BoundaryFunction parse_function(const nlohmann::json& j) {
    if (!j.is_object()) throw schema_error("", "function document must be a JSON object");
    std::string type = j.value("type", "fourier");
    if (type != "fourier") throw schema_error("type", "functions must have type \"fourier\"");
    double a0 = require_number(j, "a0");
    return BoundaryFunction(a0, optional_array(j, "cos"), optional_array(j, "sin"));
}

nlohmann::ordered_json body_to_json(const SupportBody& body) {
    nlohmann::ordered_json j;
    j["type"] = "fourier";
    j["a0"] = body.support().a0();
    j["cos"] = body.support().cos_coeffs();
    j["sin"] = body.support().sin_coeffs();
    j["grid"] = body.grid_size();
    return j;
}

nlohmann::ordered_json function_to_json(const BoundaryFunction& f) {
    nlohmann::ordered_json j;
    j["type"] = "fourier";
    j["a0"] = f.a0();
    j["cos"] = f.cos_coeffs();
    j["sin"] = f.sin_coeffs();
    return j;
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    return j;
}

}  // namespace gbm
