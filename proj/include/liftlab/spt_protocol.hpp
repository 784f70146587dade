#pragma once

#include "liftlab/combi.hpp"
#include "liftlab/protocol.hpp"

namespace liftlab {

// The two-round spanning-tree protocol. Alice holds a vertex subset U and
// announces a uniformly random u in U; Bob holds a spanning tree T, orients
// every tree edge toward u, and announces one of the n-1 oriented edges
// uniformly; Alice claims n-1 when the edge leaves U and 0 otherwise.
// Its expectation matrix is exactly slack_spt(g), and on complete graphs
// its width is n(n-1)(n-2).
//
// Layer 1 is the vertex set, layer 2 the oriented edges "(x,y)".
MarkovianProtocol build_spt_protocol(const Graph& g);

std::string oriented_edge_label(int tail, int head);

}  // namespace liftlab
