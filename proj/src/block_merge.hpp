#pragma once

#include <functional>

#include "chordless/graph.hpp"
#include "chordless/sparse_colouring.hpp"

namespace chordless::detail {

// direct colourings for the degenerate block shapes
Colouring k2_edge_colouring(const Graph& g);
Colouring k2_total_colouring(const Graph& g);
Colouring cycle_edge_colouring(const Graph& g);
Colouring cycle_total_colouring(const Graph& g);

// Colours every biconnected block independently with block_fn, then permutes
// block palettes at cutvertices so the union is proper. Isolated vertices get
// Colour 1 in total mode. block_fn must stay within `palette` colours.
Colouring merge_block_colourings(const Graph& g, bool total, int palette,
                                 const std::function<Colouring(const Graph&)>& block_fn);

}  // namespace chordless::detail
