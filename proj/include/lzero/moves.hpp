#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lzero/diagram.hpp"

namespace lzero {

enum class MoveKind { r1_add, r1_remove, r2_add, r2_remove, r3, band_pass };

/// Location of a local rewrite. Crossing ids are 0-based here and 1-based in
/// the text form. Arity per kind:
///   R1+       arcs = {host arc}; sign, under_first
///   R1-       crossings = {kink crossing}
///   R2+       arcs = {arc pushed under, arc pushed over}; sign, parallel
///   R2-       crossings = {two crossings bounding a bigon}
///   R3        crossings = {three crossings bounding a triangle face}
///   BANDPASS  crossings = {four crossings in cyclic order around the square
///             face where the two bands cross}
struct MoveSite {
  MoveKind kind = MoveKind::r1_add;
  std::vector<std::size_t> crossings;
  std::vector<ArcId> arcs;
  /// R1+: sign of the kink. R2+: sign of the first new crossing met along
  /// the under arc (the second gets the opposite sign).
  Sign sign = Sign::positive;
  /// R1+: the strand passes under on its first visit to the kink.
  bool under_first = true;
  /// R2+: the two strands run in the same direction through the bigon.
  bool parallel = true;

  friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

/// Applies one move. New arcs take ids above the current maximum; arcs
/// outside the site keep their ids. Throws MoveError naming the first
/// failed condition when the pattern is absent.
LinkDiagram apply_move(const LinkDiagram& d, const MoveSite& site);

/// Every site of the given removal/rearrangement kind (R1-, R2-, R3,
/// BANDPASS) present in the diagram.
std::vector<MoveSite> find_sites(const LinkDiagram& d, MoveKind kind);

/// All R2+ variants pushing one of the two arcs across the other that keep
/// the diagram planar and produce a bigon face.
std::vector<MoveSite> r2_add_sites(const LinkDiagram& d, ArcId a, ArcId b);

/// Text form, e.g. "R1+ arc=5 sign=+ first=under", "R2- crossings=3,4",
/// "BANDPASS crossings=1,2,3,4".
std::string to_string(const MoveSite& site);
MoveSite parse_move_site(std::string_view text);

std::string_view kind_name(MoveKind kind);

}  // namespace lzero
