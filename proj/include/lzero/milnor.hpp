#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lzero/diagram.hpp"
#include "lzero/magnus.hpp"

namespace lzero {

/// A Wirtinger generator: the arcs of one over-strand, i.e. the PD arcs
/// joined through over passages. Named by its smallest arc. A free loop
/// gets one generator with no arcs.
struct WirtingerGenerator {
  ComponentId component = 0;
  std::vector<ArcId> arcs;
};

/// outgoing = over^(-sign) * incoming * over^(sign), for the under passage
/// of `crossing`.
struct WirtingerRelation {
  std::size_t crossing = 0;
  std::size_t incoming = 0;
  std::size_t outgoing = 0;
  std::size_t over = 0;
  Sign sign = Sign::positive;
};

struct WirtingerLetter {
  std::size_t generator = 0;
  int exponent = 0;
};

/// word * base^framing, with framing = -(signed self-crossing count).
struct Longitude {
  std::vector<WirtingerLetter> word;
  int framing = 0;
};

struct WirtingerPresentation {
  int m = 0;
  std::vector<WirtingerGenerator> generators;
  /// In traversal order: components ascending, each from its base arc.
  std::vector<WirtingerRelation> relations;
  /// Per component (index c-1): the generator holding the smallest arc.
  std::vector<std::size_t> base;
  std::vector<Longitude> longitudes;
};

WirtingerPresentation wirtinger(const LinkDiagram& d);

/// Degree-2 Magnus images of the generators. Base generators are pinned to
/// 1 + h_c and the others are propagated through the relations; throws
/// InternalError if no fixed point is reached within three sweeps.
std::vector<MagnusSeries> magnus_expand(const WirtingerPresentation& p);

/// The expanded zero-framed longitude of component k (1-based).
MagnusSeries longitude_series(const WirtingerPresentation& p, const std::vector<MagnusSeries>& images, ComponentId k);

/// Indices of relations that do not hold exactly under `images`. Only the
/// relation closing a component can fail, and only when that component
/// links another one.
std::vector<std::size_t> failing_relations(const WirtingerPresentation& p, const std::vector<MagnusSeries>& images);

/// Half the signed count of crossings between components i and j.
std::int64_t linking_number(const LinkDiagram& d, ComponentId i, ComponentId j);

/// Symmetric m x m matrix with zero diagonal, 0-based.
std::vector<std::vector<std::int64_t>> linking_matrix(const LinkDiagram& d);

/// Sign applied to the h_i h_j coefficient so that the positive Borromean
/// rings read +1.
inline constexpr int triple_sign = -1;

/// mu-bar(ijk): the h_i h_j coefficient of longitude k, times triple_sign.
/// Throws InvariantUndefined when any pair among i, j, k links.
std::int64_t triple_linking(const LinkDiagram& d, ComponentId i, ComponentId j, ComponentId k);

}  // namespace lzero
