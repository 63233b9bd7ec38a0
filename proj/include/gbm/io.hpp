#ifndef GBM_IO_HPP
#define GBM_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "gbm/body2d.hpp"
#include "gbm/variations.hpp"

namespace gbm {

/** Schema violation carrying the offending key path. */
class schema_error : public std::runtime_error {
  public:
    schema_error(const std::string& key, const std::string& what)
        : std::runtime_error("schema error at \"" + key + "\": " + what), key_(key) {}
    const std::string& key() const { return key_; }

  private:
    std::string key_;
};

/** A body document is either a bounded Fourier body or a half-plane:
 *   {"type":"fourier","a0":...,"cos":[...],"sin":[...],"grid":512}
 *   {"type":"disc","r":...,"center":[cx,cy]}        (sugar for degree <= 1)
 *   {"type":"halfplane","t":...,"angle":...}                              */
struct ParsedBody {
    std::optional<SupportBody> body;
    std::optional<HalfPlane> half_plane;
};

ParsedBody parse_body(const nlohmann::json& j);

/** Boundary functions: {"type":"fourier","a0":...,"cos":[...],"sin":[...]};
 * "type" may be omitted. */
BoundaryFunction parse_function(const nlohmann::json& j);

nlohmann::ordered_json body_to_json(const SupportBody& body);
nlohmann::ordered_json function_to_json(const BoundaryFunction& f);

nlohmann::json load_json_file(const std::string& path);

}  // namespace gbm

#endif
