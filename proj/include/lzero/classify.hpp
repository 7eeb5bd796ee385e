#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lzero/diagram.hpp"
#include "lzero/tangle.hpp"

namespace lzero {

/// Element of Z_2^m + Z^(m choose 3) + Z_2^(m choose 2):
/// a = Arf per component, b = mu-bar(ijk) per lexicographic triple,
/// c = mu-bar(iijj) mod 2 per lexicographic pair.
struct ZeroSolveClass {
  int m = 0;
  std::vector<int> a;
  std::vector<std::int64_t> b;
  std::vector<int> c;

  friend bool operator==(const ZeroSolveClass&, const ZeroSolveClass&) = default;
};

/// Throws ClassError on wrong lengths or entries outside {0,1}.
void check_class(const ZeroSolveClass& g);

ZeroSolveClass class_identity(int m);
ZeroSolveClass class_add(const ZeroSolveClass& g, const ZeroSolveClass& h);
ZeroSolveClass class_neg(const ZeroSolveClass& g);
/// 1, 2, or std::nullopt for infinite order.
std::optional<int> class_order(const ZeroSolveClass& g);
std::string order_string(std::optional<int> order);

/// Throws InvariantUndefined naming the first linked pair.
ZeroSolveClass classify(const LinkDiagram& d);

struct SolvabilityReport {
  bool solvable = false;
  bool grope_class_2 = false;
  bool whitney_order_2 = false;
  /// e.g. "lk(K_1,K_2)=1", "Arf(K_1)=1", "mu(1,2,3)=-2", "mu(1,1,2,2)=1 mod 2".
  std::vector<std::string> obstructions;
};
SolvabilityReport is_zero_solvable(const LinkDiagram& d);

/// Throws DiagramError if the component counts differ and
/// InvariantUndefined if either diagram has a linked pair.
bool equivalent(const LinkDiagram& d1, const LinkDiagram& d2);

/// Gadgets stacked on m vertical strands: a positive trefoil summand per
/// a_i = 1, |b_t| Borromean insertions of sign b_t per triple, a Whitehead
/// clasp per c_n = 1. Its closure is representative(g).
Tangle representative_tangle(const ZeroSolveClass& g);
LinkDiagram representative(const ZeroSolveClass& g);

/// "m=3; a=0,0,0; b=+1; c=1,1,1". Empty lists are written "b=".
std::string to_string(const ZeroSolveClass& g);
/// Inverse of to_string; spaces around separators are ignored.
ZeroSolveClass parse_class(std::string_view text);

nlohmann::ordered_json to_json(const ZeroSolveClass& g);
ZeroSolveClass class_from_json(const nlohmann::json& j);

}  // namespace lzero
