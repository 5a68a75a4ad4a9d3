#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "pfflab/ball.hpp"
#include "pfflab/precision.hpp"
#include "pfflab/quadrature.hpp"

namespace pfflab {

inline constexpr const char* kArtifactVersion = "pfflab 0.1.0";

using Json = nlohmann::ordered_json;

// Everything a run needs to be replayed byte-identically.
struct RunConfig {
    PrecisionConfig precision;
    QuadratureConfig quadrature;
    uint64_t seed = 1;
    std::string output = "json";  // json | csv
    std::string subject;
    int threads = 1;
};

uint64_t fnv1a64(const std::string& s);
std::string config_hash(const RunConfig& rc);

Json ball_json(const Ball& b, long digits);
Json config_json(const RunConfig& rc);

// full-precision decimal for CSV cells
std::string ball_center_csv(const Ball& b, long digits);

// wraps {config, subject, results, verdict} in the stable field order
Json report_envelope(const RunConfig& rc, const Json& results, const std::string& verdict);

std::string render_report(const Json& j);

} // namespace pfflab
