#include "lzero/rewire.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <set>
#include <tuple>

#include "lzero/errors.hpp"

namespace lzero::rewire {

void retarget_head(LinkDiagram& d, ArcId from, ArcId to, std::size_t skip) {
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    if (c == skip) continue;
    Crossing& x = d.crossings[c];
    if (x.under_in == from) {
      x.under_in = to;
      return;
    }
    if (x.over_in == from) {
      x.over_in = to;
      return;
    }
  }
  throw InternalError("retarget_head: arc " + std::to_string(from) + " enters no other crossing");
}

void remove_crossing(LinkDiagram& d, std::size_t index, std::span<const Join> joins) {
  if (index >= d.crossings.size()) throw InternalError("remove_crossing: index out of range");
  std::map<ArcId, ArcId> next;
  std::set<ArcId> targets;
  for (const Join& j : joins) {
    next[j.in] = j.out;
    targets.insert(j.out);
  }

  std::set<ArcId> done;
  for (const Join& j : joins) {
    if (targets.count(j.in)) continue;  // not a chain start
    ArcId start = j.in;
    std::vector<ArcId> chain{start};
    while (next.count(chain.back())) chain.push_back(next.at(chain.back()));
    // The last arc of the chain ends at another crossing.
    for (ArcId a : chain) done.insert(a);
    for (std::size_t k = 1; k < chain.size(); ++k) d.arc_components.erase(chain[k]);
    retarget_head(d, chain.back(), start, index);
  }
  for (const Join& j : joins) {
    if (done.count(j.in)) continue;
    // closed chain: every arc starts and ends here
    ComponentId comp = d.arc_components.at(j.in);
    ArcId a = j.in;
    do {
      done.insert(a);
      d.arc_components.erase(a);
      a = next.at(a);
    } while (a != j.in);
    d.free_loops.insert(std::upper_bound(d.free_loops.begin(), d.free_loops.end(), comp), comp);
  }
  d.crossings.erase(d.crossings.begin() + static_cast<std::ptrdiff_t>(index));
}

void remove_crossing_straight(LinkDiagram& d, std::size_t index) {
  const Crossing x = d.crossings.at(index);
  const Join joins[] = {{x.under_in, x.under_out}, {x.over_in, x.over_out}};
  remove_crossing(d, index, joins);
}

void renumber_by_cycles(LinkDiagram& d) {
  auto cycles = arc_cycles(d);
  using Key = std::tuple<ComponentId, ArcId, std::size_t>;
  std::vector<Key> keys;
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    ComponentId label = INT_MAX;
    ArcId lo = INT_MAX;
    for (ArcId a : cycles[k]) {
      label = std::min(label, d.arc_components.at(a));
      lo = std::min(lo, a);
    }
    keys.emplace_back(label, lo, k);
  }
  for (std::size_t k = 0; k < d.free_loops.size(); ++k)
    keys.emplace_back(d.free_loops[k], INT_MAX, cycles.size() + k);
  std::sort(keys.begin(), keys.end());

  std::map<ArcId, ComponentId> arcs;
  std::vector<ComponentId> loops;
  ComponentId next_id = 1;
  for (const auto& [label, lo, which] : keys) {
    if (which < cycles.size()) {
      for (ArcId a : cycles[which]) arcs.emplace(a, next_id);
    } else {
      loops.push_back(next_id);
    }
    ++next_id;
  }
  d.arc_components = std::move(arcs);
  d.free_loops = std::move(loops);
  d.m = next_id - 1;
}

}  // namespace lzero::rewire
