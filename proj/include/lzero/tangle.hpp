#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lzero/diagram.hpp"

namespace lzero {

/// Which strand of an elementary crossing lies on top: the one entering the
/// slice at the left position or the one entering at the right.
enum class Over { left, right };

/// A tangle drawn slice by slice from top to bottom on numbered positions
/// (1-based, left to right). Strands start at the top positions 1..n and
/// flow downward; `open` creates a turning pair (a local maximum) and `close`
/// joins two neighbours (a local minimum). Every diagram built this way is
/// planar by construction.
class Tangle {
public:
  struct Step {
    enum class Kind { cross, open, close } kind;
    int position;
    Over over;
  };

  explicit Tangle(int strands);

  int strands() const noexcept { return strands_; }
  int width() const noexcept { return width_; }
  const std::vector<Step>& steps() const noexcept { return steps_; }

  /// Elementary crossing between positions k and k+1.
  Tangle& cross(int k, Over over);
  /// Inserts two new positions k and k+1 joined at the top.
  Tangle& open(int k);
  /// Joins positions k and k+1 at the bottom and removes them.
  Tangle& close(int k);
  /// Stacks `below` underneath this tangle.
  Tangle& append(const Tangle& below);

  /// Closes every bottom endpoint to the top endpoint at the same position
  /// without new crossings. Components are numbered by the top position
  /// where they first appear; closed loops internal to the tangle follow.
  LinkDiagram closure(std::optional<std::string> name = std::nullopt) const;

private:
  int strands_;
  int width_;
  std::vector<Step> steps_;
};

}  // namespace lzero
