#pragma once

#include "netreal/compile.hpp"
#include "netreal/realize.hpp"

#include <string>

namespace netreal {

struct RoundTripResult {
    bool ok = false;
    std::string mismatch; ///< empty when ok
};

/// Checks that a realized network is the input graph: edges correspond through
/// identical component pairs, and mapping each realized x=0 endpoint to the
/// input edge's x=0 endpoint yields a role-preserving vertex bijection. The
/// component labels make the map forced, so no isomorphism search is needed.
RoundTripResult compare_realization(const MetricGraphProblem& problem,
                                    const Classification& classification,
                                    const RealizedNetwork& network);

} // namespace netreal
