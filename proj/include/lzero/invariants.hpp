#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "lzero/diagram.hpp"

namespace lzero {

/// The classifying battery of a diagram. `triple` and `sato_levine` are
/// present exactly when the linking matrix vanishes; they are indexed by
/// lexicographic triples and pairs (see indexing.hpp).
struct InvariantTuple {
  int m = 0;
  std::vector<std::vector<std::int64_t>> linking;
  std::vector<int> arf;
  std::optional<std::vector<std::int64_t>> triple;
  std::optional<std::vector<std::int64_t>> sato_levine;

  friend bool operator==(const InvariantTuple&, const InvariantTuple&) = default;
};

/// a_2 of component i, reduced to {0,1}.
int arf(const LinkDiagram& d, ComponentId i);

/// a_3 of the two-component sublink {i,j}; that is mu-bar(iijj) when the
/// two components do not link. Throws InvariantUndefined otherwise.
std::int64_t sato_levine(const LinkDiagram& d, ComponentId i, ComponentId j);

InvariantTuple invariant_tuple(const LinkDiagram& d);

bool linking_vanishes(const std::vector<std::vector<std::int64_t>>& linking);

/// {"m", "linking", "arf", "triple", "sato_levine"}, absent entries as null.
nlohmann::ordered_json to_json(const InvariantTuple& t);

}  // namespace lzero
