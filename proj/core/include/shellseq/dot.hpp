#pragma once

#include <string>

#include "shellseq/quiver.hpp"

namespace shellseq {

// GraphViz rendering: one node per tile named t<i> and labelled with its
// order, one edge per arrow labelled with the intersection dimension.
// Nodes are emitted by ascending id, edges by (source, target).
std::string quiver_to_dot(const Quiver& q);

}  // namespace shellseq
