#include "pfflab/report.hpp"

#include <sstream>

namespace pfflab {

uint64_t fnv1a64(const std::string& s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace {
std::string canonical_config(const RunConfig& rc) {
    std::ostringstream os;
    os << "digits=" << rc.precision.digits << "\n"
       << "max_terms=" << rc.precision.max_terms << "\n"
       << "fd_stencil=" << rc.precision.fd_stencil << "\n"
       << "scheme=" << (rc.quadrature.scheme == QuadScheme::DoubleExponential ? "double-exponential"
                                                                              : "gauss-legendre-panels")
       << "\n"
       << "level=" << rc.quadrature.level << "\n"
       << "trunc_radius=" << rc.quadrature.trunc_radius << "\n"
       << "target_abs_err=" << rc.quadrature.target_abs_err << "\n"
       << "seed=" << rc.seed << "\n"
       << "output=" << rc.output << "\n"
       << "subject=" << rc.subject << "\n";
    return os.str();
}
} // namespace

std::string config_hash(const RunConfig& rc) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(canonical_config(rc))));
    return buf;
}

Json ball_json(const Ball& b, long digits) {
    Json j;
    j["center"] = b.center_str(digits);
    j["radius"] = b.radius_str();
    return j;
}

Json config_json(const RunConfig& rc) {
    Json j;
    j["version"] = kArtifactVersion;
    j["config_hash"] = config_hash(rc);
    j["digits"] = rc.precision.digits;
    j["max_terms"] = rc.precision.max_terms;
    j["fd_stencil"] = rc.precision.fd_stencil;
    j["quadrature"] = Json{{"scheme", rc.quadrature.scheme == QuadScheme::DoubleExponential
                                          ? "double-exponential"
                                          : "gauss-legendre-panels"},
                           {"level", rc.quadrature.level},
                           {"trunc_radius", rc.quadrature.trunc_radius},
                           {"target_abs_err", rc.quadrature.target_abs_err}};
    j["seed"] = rc.seed;
    j["output"] = rc.output;
    return j;
}

std::string ball_center_csv(const Ball& b, long digits) {
    return b.center_str(digits);
}

Json report_envelope(const RunConfig& rc, const Json& results, const std::string& verdict) {
    Json j;
    j["config"] = config_json(rc);
    j["subject"] = rc.subject;
    j["results"] = results;
    j["verdict"] = verdict;
    return j;
}

std::string render_report(const Json& j) {
    return j.dump(2) + "\n";
}

} // namespace pfflab
