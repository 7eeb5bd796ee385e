#include "lzero/tangle.hpp"

#include <map>
#include <set>

#include "lzero/errors.hpp"

namespace lzero {

Tangle::Tangle(int strands) : strands_(strands), width_(strands) {
  if (strands < 1) throw DiagramError("tangle needs at least one strand");
}

Tangle& Tangle::cross(int k, Over over) {
  if (k < 1 || k + 1 > width_) throw DiagramError("tangle: crossing at position " + std::to_string(k) + " outside width");
  steps_.push_back({Step::Kind::cross, k, over});
  return *this;
}

Tangle& Tangle::open(int k) {
  if (k < 1 || k > width_ + 1) throw DiagramError("tangle: open at position " + std::to_string(k) + " outside width");
  steps_.push_back({Step::Kind::open, k, Over::left});
  width_ += 2;
  return *this;
}

Tangle& Tangle::close(int k) {
  if (k < 1 || k + 1 > width_) throw DiagramError("tangle: close at position " + std::to_string(k) + " outside width");
  steps_.push_back({Step::Kind::close, k, Over::left});
  width_ -= 2;
  return *this;
}

Tangle& Tangle::append(const Tangle& below) {
  if (below.strands_ != width_)
    throw DiagramError("tangle: stacking width " + std::to_string(width_) + " on " + std::to_string(below.strands_));
  steps_.insert(steps_.end(), below.steps_.begin(), below.steps_.end());
  width_ = below.width_;
  return *this;
}

namespace {

enum class NodeKind { crossing, turn, closure };

// Crossing ports: 0 top-left, 1 top-right, 2 bottom-left, 3 bottom-right.
struct Node {
  NodeKind kind;
  Over over = Over::left;
};

using End = std::pair<std::size_t, int>;

int through(NodeKind kind, int port) {
  if (kind == NodeKind::crossing) return 3 - port;
  return 1 - port;
}

struct Passage {
  std::size_t node;
  int entered;
};

std::pair<int, int> direction(int entered) {
  switch (entered) {
    case 0: return {1, -1};
    case 3: return {-1, 1};
    case 1: return {-1, -1};
    default: return {1, 1};
  }
}

bool on_left_diagonal(int port) { return port == 0 || port == 3; }

}  // namespace

LinkDiagram Tangle::closure(std::optional<std::string> name) const {
  if (width_ != strands_)
    throw DiagramError("tangle: cannot close, " + std::to_string(width_) + " bottom ends vs " +
                       std::to_string(strands_) + " top ends");
  std::vector<Node> nodes;
  std::map<End, End> link;
  auto connect = [&](End a, End b) {
    link[a] = b;
    link[b] = a;
  };

  std::vector<std::size_t> closure_node;
  std::vector<End> pending;
  for (int p = 0; p < strands_; ++p) {
    closure_node.push_back(nodes.size());
    nodes.push_back({NodeKind::closure});
    pending.push_back({closure_node.back(), 0});
  }
  for (const Step& s : steps_) {
    auto k = static_cast<std::size_t>(s.position - 1);
    if (s.kind == Step::Kind::cross) {
      std::size_t x = nodes.size();
      nodes.push_back({NodeKind::crossing, s.over});
      connect(pending[k], {x, 0});
      connect(pending[k + 1], {x, 1});
      pending[k] = {x, 2};
      pending[k + 1] = {x, 3};
    } else if (s.kind == Step::Kind::open) {
      std::size_t t = nodes.size();
      nodes.push_back({NodeKind::turn});
      pending.insert(pending.begin() + static_cast<std::ptrdiff_t>(k), {{t, 0}, {t, 1}});
    } else {
      std::size_t t = nodes.size();
      nodes.push_back({NodeKind::turn});
      connect(pending[k], {t, 0});
      connect(pending[k + 1], {t, 1});
      pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(k), pending.begin() + static_cast<std::ptrdiff_t>(k) + 2);
    }
  }
  for (int p = 0; p < strands_; ++p) connect(pending[static_cast<std::size_t>(p)], {closure_node[static_cast<std::size_t>(p)], 1});

  std::set<End> visited;
  std::vector<std::vector<Passage>> components;
  std::size_t loops_without_crossings = 0;

  auto walk = [&](End start) {
    std::vector<Passage> passages;
    End cur = start;
    do {
      visited.insert(cur);
      const Node& n = nodes[cur.first];
      if (n.kind == NodeKind::crossing) passages.push_back({cur.first, cur.second});
      End out{cur.first, through(n.kind, cur.second)};
      visited.insert(out);
      cur = link.at(out);
    } while (cur != start);
    return passages;
  };

  for (int p = 0; p < strands_; ++p) {
    End start{closure_node[static_cast<std::size_t>(p)], 1};
    if (visited.count(start)) continue;
    components.push_back(walk(start));
  }
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    if (nodes[n].kind != NodeKind::crossing) continue;
    for (int port = 0; port < 4; ++port) {
      if (visited.count({n, port})) continue;
      components.push_back(walk({n, port}));
    }
  }
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    if (nodes[n].kind != NodeKind::turn || visited.count({n, 0})) continue;
    auto passages = walk({n, 0});
    if (!passages.empty()) throw InternalError("tangle: unvisited loop through a crossing");
    ++loops_without_crossings;
  }

  LinkDiagram d;
  d.name = std::move(name);
  std::map<std::size_t, std::size_t> crossing_index;
  for (std::size_t n = 0; n < nodes.size(); ++n)
    if (nodes[n].kind == NodeKind::crossing) crossing_index.emplace(n, crossing_index.size());
  d.crossings.resize(crossing_index.size());

  // Per crossing: the two passages, to derive the sign once both are known.
  std::map<std::size_t, std::vector<int>> entered_ports;
  ArcId next_arc = 1;
  ComponentId comp = 0;
  for (const auto& passages : components) {
    ++comp;
    if (passages.empty()) {
      d.free_loops.push_back(comp);
      continue;
    }
    ArcId first = next_arc;
    std::size_t len = passages.size();
    for (std::size_t t = 0; t < len; ++t) {
      const Passage& p = passages[t];
      Crossing& x = d.crossings[crossing_index.at(p.node)];
      bool over = on_left_diagonal(p.entered) == (nodes[p.node].over == Over::left);
      ArcId in_arc = t == 0 ? first + static_cast<ArcId>(len) - 1 : first + static_cast<ArcId>(t) - 1;
      ArcId out_arc = first + static_cast<ArcId>(t);
      (over ? x.over_in : x.under_in) = in_arc;
      (over ? x.over_out : x.under_out) = out_arc;
      entered_ports[p.node].push_back(p.entered);
      d.arc_components[out_arc] = comp;
    }
    next_arc += static_cast<ArcId>(len);
  }
  for (std::size_t k = 0; k < loops_without_crossings; ++k) d.free_loops.push_back(++comp);
  d.m = comp;

  for (const auto& [node, ports] : entered_ports) {
    if (ports.size() != 2) throw InternalError("tangle: crossing not traversed twice");
    int over_port = on_left_diagonal(ports[0]) == (nodes[node].over == Over::left) ? ports[0] : ports[1];
    int under_port = over_port == ports[0] ? ports[1] : ports[0];
    auto [ox, oy] = direction(over_port);
    auto [ux, uy] = direction(under_port);
    d.crossings[crossing_index.at(node)].sign = ox * uy - oy * ux > 0 ? Sign::positive : Sign::negative;
  }
  return d;
}

}  // namespace lzero
