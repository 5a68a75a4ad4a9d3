#pragma once

#include <optional>
#include <vector>

#include "pfflab/ball.hpp"

namespace pfflab {

// mu[0..N] with mu_0 certified positive. `exact` is set when the moments are
// known in closed rational form (enables exact Sturm counting downstream).
struct MomentSequence {
    enum class Source { ClosedForm, Quadrature };
    std::vector<Ball> mu;
    Source source = Source::ClosedForm;
    std::optional<std::vector<mpq_class>> exact;

    std::size_t size() const { return mu.size(); }
};

} // namespace pfflab
