#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gordian/diagram.hpp"
#include "gordian/poly.hpp"

namespace gordian {

struct PoseCheck {
    std::string predicate;
    bool ok;
    std::string detail;
};

struct ProjectionPose {
    Vec3 direction;
    int schedule_index = 0;  // how many fallback steps were taken
    std::vector<PoseCheck> checks;
};

struct ProjectionResult {
    KnotDiagram diagram;
    ProjectionPose pose;
};

// Project the polygon along `hint` (default (0,0,1)) and build the crossing
// diagram.  Every predicate (straddle tests, depth comparisons, triple-point
// detection) is decided in exact integer/rational arithmetic.  If any
// degeneracy fires, the direction advances through the fixed schedule
// (0,0,1) + k (1,3,0) + k^2 (0,1,7) until a generic direction is found.
ProjectionResult project(const PolygonalKnot& P,
                         std::optional<Vec3> hint = std::nullopt);

}  // namespace gordian
