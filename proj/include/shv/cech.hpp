#pragma once

// Independent brute-force oracle: cellular (Cech) cohomology of a sheaf
// model on a graph of vertices and arcs, and the connecting map of the
// unipotent rank-2 extension. Computes everything with raw coboundary
// ranks; deliberately shares no code with the closed-form cohomology tables
// it is used to validate.

#include "shv/quiver.hpp"

#include <map>
#include <utility>

namespace shv {

// H^0 and H^1 dimensions of the vertex->arc coboundary complex of a circle
// model.
std::pair<std::size_t, std::size_t> cech_cohomology_circle(const CircleQuiverRep& f);

// Same for a line model with compactly supported sections (both unbounded
// arcs must vanish).
std::pair<std::size_t, std::size_t> cech_cohomology_line(const LineQuiverRep& f);

// Rank of the connecting map H^0 -> H^1 induced by the extension
// 0 -> F -> L (x) F -> F -> 0, where L is the rank-2 unipotent local
// system, computed by the snake lemma on cochains.
std::size_t cech_c_rank(const CircleQuiverRep& f);

}  // namespace shv
