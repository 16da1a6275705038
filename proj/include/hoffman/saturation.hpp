#pragma once

#include <cstdint>
#include <optional>

#include "hoffman/hoffman_graph.hpp"
#include "hoffman/representation.hpp"

namespace hoffman {

struct SaturationOptions {
    int max_slims = 12;
    std::int64_t state_budget = 20'000;  ///< attachment states explored
    SolveOptions solve;
};

/// Attaches fat vertices (slim graph unchanged) until the graph is fat,
/// (-3)-saturated and still integrally representable, re-running the solver
/// after every attachment. Depth-first over attachment sets in increasing
/// size. Throws std::invalid_argument if h itself is not representable and
/// std::runtime_error when the budget runs out without an answer.
HoffmanGraph saturate_preserving_ir(const HoffmanGraph& h, const SaturationOptions& opts = {});

}  // namespace hoffman
