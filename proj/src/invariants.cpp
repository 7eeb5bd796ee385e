#include "lzero/invariants.hpp"

#include <limits>

#include "lzero/conway.hpp"
#include "lzero/errors.hpp"
#include "lzero/indexing.hpp"
#include "lzero/milnor.hpp"

namespace lzero {

namespace {

void check_component(const LinkDiagram& d, ComponentId c) {
  if (c < 1 || c > d.m)
    throw DiagramError("component " + std::to_string(c) + " is out of range 1.." + std::to_string(d.m));
}

std::int64_t narrow(const Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw InternalError("coefficient does not fit in 64 bits: " + v.str());
  return v.convert_to<std::int64_t>();
}

}  // namespace

int arf(const LinkDiagram& d, ComponentId i) {
  check_component(d, i);
  Integer a2 = conway_polynomial(sublink(d, {i})).coefficient(2);
  return a2 % 2 == 0 ? 0 : 1;
}

std::int64_t sato_levine(const LinkDiagram& d, ComponentId i, ComponentId j) {
  check_component(d, i);
  check_component(d, j);
  if (i == j) throw DiagramError("Sato-Levine invariant needs two distinct components");
  if (i > j) std::swap(i, j);
  if (auto lk = linking_number(d, i, j); lk != 0) throw InvariantUndefined(i, j, lk);
  return narrow(conway_polynomial(sublink(d, {i, j})).coefficient(3));
}

bool linking_vanishes(const std::vector<std::vector<std::int64_t>>& linking) {
  for (const auto& row : linking)
    for (auto v : row)
      if (v != 0) return false;
  return true;
}

InvariantTuple invariant_tuple(const LinkDiagram& d) {
  require_valid(d);
  InvariantTuple t;
  t.m = d.m;
  t.linking = linking_matrix(d);
  for (ComponentId i = 1; i <= d.m; ++i) t.arf.push_back(arf(d, i));
  if (!linking_vanishes(t.linking)) return t;
  t.triple.emplace();
  for (const auto& [i, j, k] : component_triples(d.m)) t.triple->push_back(triple_linking(d, i, j, k));
  t.sato_levine.emplace();
  for (const auto& [i, j] : component_pairs(d.m)) t.sato_levine->push_back(sato_levine(d, i, j));
  return t;
}

nlohmann::ordered_json to_json(const InvariantTuple& t) {
  nlohmann::ordered_json j;
  j["m"] = t.m;
  j["linking"] = t.linking;
  j["arf"] = t.arf;
  if (t.triple) {
    auto obj = nlohmann::ordered_json::object();
    auto idx = component_triples(t.m);
    for (std::size_t n = 0; n < idx.size(); ++n) obj[index_label(idx[n])] = (*t.triple)[n];
    j["triple"] = obj;
  } else {
    j["triple"] = nullptr;
  }
  if (t.sato_levine) {
    auto obj = nlohmann::ordered_json::object();
    auto idx = component_pairs(t.m);
    for (std::size_t n = 0; n < idx.size(); ++n) obj[index_label(idx[n])] = (*t.sato_levine)[n];
    j["sato_levine"] = obj;
  } else {
    j["sato_levine"] = nullptr;
  }
  return j;
}

}  // namespace lzero
