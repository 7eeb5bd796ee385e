#pragma once

#include <cstddef>
#include <span>

#include "lzero/diagram.hpp"

// Low-level surgery shared by the move, smoothing and sublink code. These
// functions mutate in place and leave re-validation to the caller.
namespace lzero::rewire {

/// Passage through a removed crossing: `in` ends there, `out` starts there.
struct Join {
  ArcId in = 0;
  ArcId out = 0;
};

/// Deletes crossing `index` and fuses the arcs named in `joins`. Along each
/// chain of joined arcs the first (incoming) arc keeps its id and takes over
/// the head of the last one. A chain that closes on itself becomes a free
/// loop. Arcs at the crossing that no join mentions are left for the caller
/// to discard.
void remove_crossing(LinkDiagram& d, std::size_t index, std::span<const Join> joins);

/// Joins for removing crossing `index` while both strands keep going straight.
void remove_crossing_straight(LinkDiagram& d, std::size_t index);

/// Gives every cycle and free loop its own component id, ordered by
/// (smallest old label it carries, smallest arc id), free loops after the
/// cycles that share their label.
void renumber_by_cycles(LinkDiagram& d);

/// Rewrites the input slot currently holding `from` (outside `skip`) to `to`.
void retarget_head(LinkDiagram& d, ArcId from, ArcId to, std::size_t skip);

}  // namespace lzero::rewire
