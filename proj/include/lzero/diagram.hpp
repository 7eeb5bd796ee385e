#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lzero {

using ArcId = int;
using ComponentId = int;

enum class Sign : int { negative = -1, positive = 1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign flipped(Sign s) noexcept { return s == Sign::positive ? Sign::negative : Sign::positive; }

enum class Slot { under_in, under_out, over_in, over_out };

/// One crossing of an oriented diagram. Arcs are the edges between
/// consecutive crossing passages; an arc entering at under_in leaves as
/// under_out, one entering at over_in leaves as over_out.
struct Crossing {
  Sign sign = Sign::positive;
  ArcId under_in = 0;
  ArcId under_out = 0;
  ArcId over_in = 0;
  ArcId over_out = 0;

  ArcId at(Slot s) const noexcept;
  ArcId& at(Slot s) noexcept;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Oriented, component-labelled link diagram with explicit crossing signs.
/// Crossing ids are 0-based positions in `crossings`; the text format and
/// the CLI number them from 1.
struct LinkDiagram {
  int m = 0;
  std::vector<Crossing> crossings;
  std::map<ArcId, ComponentId> arc_components;
  /// Components realised as crossing-free unknotted circles (kept sorted).
  std::vector<ComponentId> free_loops;
  std::optional<std::string> name;

  std::size_t crossing_count() const noexcept { return crossings.size(); }
  ComponentId component_of(ArcId a) const;

  /// Structural equality; the name is a label and does not take part.
  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
    return a.m == b.m && a.crossings == b.crossings && a.arc_components == b.arc_components &&
           a.free_loops == b.free_loops;
  }
};

/// Where an arc starts (its tail, an output slot) and ends (its head, an input slot).
struct ArcEnds {
  std::size_t tail_crossing = 0;
  Slot tail_slot = Slot::under_out;
  std::size_t head_crossing = 0;
  Slot head_slot = Slot::under_in;
};

/// Arc incidence table. Only meaningful on diagrams that pass validate().
class ArcIndex {
public:
  explicit ArcIndex(const LinkDiagram& d);

  const ArcEnds& ends(ArcId a) const;
  /// The arc that continues `a` through its head crossing.
  ArcId successor(ArcId a) const;
  bool contains(ArcId a) const { return ends_.count(a) != 0; }

private:
  const LinkDiagram* diagram_;
  std::map<ArcId, ArcEnds> ends_;
};

/// Arc cycles of the diagram, one per non-free-loop component, ordered by
/// component then smallest arc id; each cycle starts at its smallest arc.
std::vector<std::vector<ArcId>> arc_cycles(const LinkDiagram& d);

LinkDiagram parse_diagram(std::string_view text);
std::string render_diagram(const LinkDiagram& d);

/// Every rule violation, each naming the rule and the record. Empty = valid.
std::vector<std::string> validate(const LinkDiagram& d);

/// Throws DiagramError carrying the first violation, if any.
void require_valid(const LinkDiagram& d);

/// Keeps the components in `keep` (strictly increasing, 1-based), renumbered
/// 1..|keep| in that order.
LinkDiagram sublink(const LinkDiagram& d, std::span<const ComponentId> keep);
LinkDiagram sublink(const LinkDiagram& d, std::initializer_list<ComponentId> keep);

LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b);

/// Reflects through the projection plane: every crossing changes over/under
/// and sign; arcs and components are untouched.
LinkDiagram mirror(const LinkDiagram& d);

/// Number of connected pieces of the diagram; free loops count one each.
std::size_t split_pieces(const LinkDiagram& d);

/// Faces of the diagram as cyclic lists of arcs. Computed from the rotation
/// system implied by the crossing signs.
struct Face {
  std::vector<ArcId> arcs;
  std::vector<std::size_t> crossings;
};
std::vector<Face> faces(const LinkDiagram& d);

/// Every connected piece embeds in the sphere under the sign-implied
/// rotation system (Euler characteristic 2 per piece).
bool is_planar(const LinkDiagram& d);

ArcId max_arc_id(const LinkDiagram& d);

}  // namespace lzero
