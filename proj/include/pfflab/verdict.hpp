#pragma once

namespace pfflab {

// Three-valued outcome of every certified positivity test: ball arithmetic
// must not assert what it cannot enclose away from zero.
enum class Verdict3 { CertifiedYes, CertifiedNo, Undecided };

inline const char* to_string(Verdict3 v) {
    switch (v) {
        case Verdict3::CertifiedYes: return "certified-yes";
        case Verdict3::CertifiedNo: return "certified-no";
        default: return "undecided";
    }
}

} // namespace pfflab
