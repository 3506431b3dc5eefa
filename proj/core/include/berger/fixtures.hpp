#pragma once

#include "berger/graph.hpp"

namespace berger::fixtures {

// Octahedron with s and t on different triangles. Only edge b-c crosses the
// source-target segment; G - st is the octahedron minus that edge.
Instance octahedron();

// 3-connected graph whose node x only has edges crossing the source-target
// segment, so G - st is disconnected.
Instance strandedNode();

// Wheel whose rim has a notch between s and t: the source-target segment runs
// through the external face, which is therefore green.
Instance notchedWheel();

}  // namespace berger::fixtures
