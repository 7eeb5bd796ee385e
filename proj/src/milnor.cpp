#include "lzero/milnor.hpp"

#include <algorithm>
#include <map>

#include "lzero/errors.hpp"

namespace lzero {

namespace {

void check_component(const LinkDiagram& d, ComponentId c) {
  if (c < 1 || c > d.m)
    throw DiagramError("component " + std::to_string(c) + " is out of range 1.." + std::to_string(d.m));
}

std::size_t find_root(std::map<ArcId, ArcId>& parent, ArcId a) {
  while (parent[a] != a) a = parent[a] = parent[parent[a]];
  return static_cast<std::size_t>(a);
}

}  // namespace

WirtingerPresentation wirtinger(const LinkDiagram& d) {
  require_valid(d);
  WirtingerPresentation p;
  p.m = d.m;

  // over passages glue arcs into over-strands
  std::map<ArcId, ArcId> parent;
  for (const auto& [a, c] : d.arc_components) parent[a] = a;
  for (const Crossing& x : d.crossings) {
    auto r1 = static_cast<ArcId>(find_root(parent, x.over_in));
    auto r2 = static_cast<ArcId>(find_root(parent, x.over_out));
    if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
  }
  std::map<ArcId, std::size_t> gen_of_root;
  std::map<ArcId, std::size_t> gen_of;
  for (const auto& [a, c] : d.arc_components) {
    auto root = static_cast<ArcId>(find_root(parent, a));
    auto [it, fresh] = gen_of_root.emplace(root, p.generators.size());
    if (fresh) p.generators.push_back({c, {}});
    p.generators[it->second].arcs.push_back(a);
    gen_of[a] = it->second;
  }

  p.base.assign(static_cast<std::size_t>(d.m), 0);
  p.longitudes.assign(static_cast<std::size_t>(d.m), {});
  for (ComponentId c : d.free_loops) {
    p.base[static_cast<std::size_t>(c - 1)] = p.generators.size();
    p.generators.push_back({c, {}});
  }

  ArcIndex index(d);
  for (const auto& cycle : arc_cycles(d)) {
    ComponentId c = d.component_of(cycle.front());
    auto k = static_cast<std::size_t>(c - 1);
    p.base[k] = gen_of.at(cycle.front());
    Longitude& lon = p.longitudes[k];
    for (ArcId a : cycle) {
      const ArcEnds& e = index.ends(a);
      if (e.head_slot != Slot::under_in) continue;
      const Crossing& x = d.crossings[e.head_crossing];
      p.relations.push_back({e.head_crossing, gen_of.at(x.under_in), gen_of.at(x.under_out), gen_of.at(x.over_in),
                             x.sign});
      lon.word.push_back({gen_of.at(x.over_in), to_int(x.sign)});
    }
    int writhe = 0;
    for (const Crossing& x : d.crossings)
      if (d.component_of(x.under_in) == c && d.component_of(x.over_in) == c) writhe += to_int(x.sign);
    lon.framing = -writhe;
  }
  return p;
}

namespace {

MagnusSeries conjugate(const MagnusSeries& u, const MagnusSeries& over, Sign s) {
  int e = to_int(s);
  return over.pow(-e) * u * over.pow(e);
}

}  // namespace

std::vector<MagnusSeries> magnus_expand(const WirtingerPresentation& p) {
  std::vector<MagnusSeries> images;
  images.reserve(p.generators.size());
  for (const auto& g : p.generators) images.push_back(MagnusSeries::meridian(p.m, g.component));

  std::vector<bool> pinned(p.generators.size(), false);
  for (std::size_t b : p.base) pinned[b] = true;

  for (int sweep = 1;; ++sweep) {
    bool changed = false;
    for (const auto& r : p.relations) {
      if (pinned[r.outgoing]) continue;
      MagnusSeries next = conjugate(images[r.incoming], images[r.over], r.sign);
      if (next != images[r.outgoing]) {
        images[r.outgoing] = std::move(next);
        changed = true;
      }
    }
    if (!changed) return images;
    if (sweep == 3) throw InternalError("Magnus expansion did not stabilise in three sweeps");
  }
}

MagnusSeries longitude_series(const WirtingerPresentation& p, const std::vector<MagnusSeries>& images, ComponentId k) {
  if (k < 1 || k > p.m) throw DiagramError("component " + std::to_string(k) + " is out of range");
  const auto idx = static_cast<std::size_t>(k - 1);
  const Longitude& lon = p.longitudes[idx];
  MagnusSeries out = MagnusSeries::one(p.m);
  for (const auto& l : lon.word) out = out * images[l.generator].pow(l.exponent);
  return out * images[p.base[idx]].pow(lon.framing);
}

std::vector<std::size_t> failing_relations(const WirtingerPresentation& p, const std::vector<MagnusSeries>& images) {
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    const auto& r = p.relations[i];
    if (conjugate(images[r.incoming], images[r.over], r.sign) != images[r.outgoing]) bad.push_back(i);
  }
  return bad;
}

std::int64_t linking_number(const LinkDiagram& d, ComponentId i, ComponentId j) {
  check_component(d, i);
  check_component(d, j);
  if (i == j) throw DiagramError("linking number needs two distinct components");
  std::int64_t twice = 0;
  for (const Crossing& x : d.crossings) {
    ComponentId u = d.component_of(x.under_in), o = d.component_of(x.over_in);
    if ((u == i && o == j) || (u == j && o == i)) twice += to_int(x.sign);
  }
  if (twice % 2 != 0) throw InternalError("odd signed crossing count between two components");
  return twice / 2;
}

std::vector<std::vector<std::int64_t>> linking_matrix(const LinkDiagram& d) {
  const auto m = static_cast<std::size_t>(d.m);
  std::vector<std::vector<std::int64_t>> lk(m, std::vector<std::int64_t>(m, 0));
  for (const Crossing& x : d.crossings) {
    auto u = static_cast<std::size_t>(d.component_of(x.under_in) - 1);
    auto o = static_cast<std::size_t>(d.component_of(x.over_in) - 1);
    if (u == o) continue;
    lk[u][o] += to_int(x.sign);
    lk[o][u] += to_int(x.sign);
  }
  for (auto& row : lk)
    for (auto& v : row) {
      if (v % 2 != 0) throw InternalError("odd signed crossing count between two components");
      v /= 2;
    }
  return lk;
}

std::int64_t triple_linking(const LinkDiagram& d, ComponentId i, ComponentId j, ComponentId k) {
  check_component(d, i);
  check_component(d, j);
  check_component(d, k);
  if (i == j || j == k || i == k) throw DiagramError("triple linking needs three distinct components");
  const std::pair<ComponentId, ComponentId> pairs[] = {{std::min(i, j), std::max(i, j)},
                                                       {std::min(j, k), std::max(j, k)},
                                                       {std::min(i, k), std::max(i, k)}};
  for (auto [a, b] : pairs)
    if (auto lk = linking_number(d, a, b); lk != 0) throw InvariantUndefined(a, b, lk);

  // the three-component sublink carries the same value and is far cheaper
  const ComponentId keep_sorted[] = {std::min({i, j, k}), i + j + k - std::min({i, j, k}) - std::max({i, j, k}),
                                     std::max({i, j, k})};
  LinkDiagram sub = sublink(d, keep_sorted);
  auto rank = [&](ComponentId c) { return static_cast<ComponentId>(std::find(std::begin(keep_sorted), std::end(keep_sorted), c) - std::begin(keep_sorted)) + 1; };
  auto p = wirtinger(sub);
  auto images = magnus_expand(p);
  return triple_sign * longitude_series(p, images, rank(k)).quadratic(rank(i), rank(j));
}

}  // namespace lzero
