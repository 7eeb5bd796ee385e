#include "support.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "lzero/indexing.hpp"
#include "lzero/invariants.hpp"
#include "lzero/milnor.hpp"

namespace lzero::testing {

std::string fixture_path(const std::string& name) { return std::string(LZERO_FIXTURE_DIR) + "/" + name; }

LinkDiagram load_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream s;
  s << in.rdbuf();
  return parse_diagram(s.str());
}

std::vector<std::string> corpus() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(LZERO_FIXTURE_DIR))
    if (e.path().extension() == ".lz") out.push_back(e.path().filename().string());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct NaiveState {
  std::vector<Crossing> crossings;
  std::map<ArcId, ArcId> parent;
  int extra_loops = 0;

  ArcId find(ArcId a) {
    while (parent.at(a) != a) a = parent[a];
    return a;
  }
  void merge(ArcId a, ArcId b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::min(a, b)] = std::max(a, b);
  }
};

using Poly = std::map<int, std::int64_t>;

struct Walk {
  int components = 0;
  // crossing index whose first visit is under, lowest index; -1 if none
  int ascending = -1;
};

Walk walk(NaiveState& s) {
  // edge class -> (crossing, slot) of its head, and successor class
  std::map<ArcId, std::pair<std::size_t, bool>> head;
  std::map<ArcId, ArcId> next;
  for (std::size_t c = 0; c < s.crossings.size(); ++c) {
    const Crossing& x = s.crossings[c];
    head[s.find(x.under_in)] = {c, true};
    head[s.find(x.over_in)] = {c, false};
    next[s.find(x.under_in)] = s.find(x.under_out);
    next[s.find(x.over_in)] = s.find(x.over_out);
  }
  std::set<ArcId> classes;
  for (const auto& [a, p] : s.parent) classes.insert(s.find(a));
  Walk w;
  w.components = s.extra_loops;
  std::set<ArcId> seen;
  std::vector<bool> visited(s.crossings.size(), false);
  std::set<int> ascending;
  // cycles are entered from their largest class id
  for (auto it = classes.rbegin(); it != classes.rend(); ++it) {
    if (seen.count(*it)) continue;
    ++w.components;
    if (!head.count(*it)) {
      seen.insert(*it);
      continue;
    }
    ArcId cur = *it;
    while (!seen.count(cur)) {
      seen.insert(cur);
      auto [c, under] = head.at(cur);
      if (!visited[c]) {
        visited[c] = true;
        if (under) ascending.insert(static_cast<int>(c));
      }
      cur = next.at(cur);
    }
  }
  if (!ascending.empty()) w.ascending = *ascending.begin();
  return w;
}

Poly eval(NaiveState s) {
  Walk w = walk(s);
  if (w.ascending < 0) return w.components == 1 ? Poly{{0, 1}} : Poly{};
  auto c = static_cast<std::size_t>(w.ascending);
  const Crossing x = s.crossings[c];

  NaiveState switched = s;
  switched.crossings[c] = Crossing{flipped(x.sign), x.over_in, x.over_out, x.under_in, x.under_out};

  NaiveState smoothed = s;
  smoothed.crossings.erase(smoothed.crossings.begin() + static_cast<std::ptrdiff_t>(c));
  smoothed.merge(x.under_in, x.over_out);
  smoothed.merge(x.over_in, x.under_out);

  Poly out = eval(std::move(switched));
  int sign = x.sign == Sign::positive ? 1 : -1;
  for (const auto& [deg, v] : eval(std::move(smoothed))) out[deg + 1] += sign * v;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

std::map<int, std::int64_t> naive_conway(const LinkDiagram& d) {
  NaiveState s;
  s.crossings = d.crossings;
  for (const auto& [a, c] : d.arc_components) s.parent[a] = a;
  s.extra_loops = static_cast<int>(d.free_loops.size());
  return eval(std::move(s));
}

bool same_polynomial(const ConwayPolynomial& p, const std::map<int, std::int64_t>& q) {
  if (p.terms().size() != q.size()) return false;
  for (const auto& [deg, v] : q)
    if (p.coefficient(deg) != v) return false;
  return true;
}

ZeroSolveClass random_class(std::mt19937& rng, int m, int max_b) {
  ZeroSolveClass g = class_identity(m);
  std::uniform_int_distribution<int> bit(0, 1), b(-max_b, max_b);
  for (auto& v : g.a) v = bit(rng);
  for (auto& v : g.b) v = b(rng);
  for (auto& v : g.c) v = bit(rng);
  return g;
}

std::optional<MoveSite> random_r_move(const LinkDiagram& d, std::mt19937& rng) {
  if (d.crossings.empty()) return std::nullopt;
  auto pick = [&](const auto& v) { return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)]; };
  std::vector<ArcId> arcs;
  for (const auto& [a, c] : d.arc_components) arcs.push_back(a);
  for (int attempt = 0; attempt < 20; ++attempt) {
    switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
      case 0: {
        MoveSite s;
        s.kind = MoveKind::r1_add;
        s.arcs = {pick(arcs)};
        s.sign = rng() % 2 ? Sign::positive : Sign::negative;
        s.under_first = rng() % 2;
        return s;
      }
      case 1:
      case 2: {
        auto fs = faces(d);
        const Face& f = pick(fs);
        if (f.arcs.size() < 2) break;
        ArcId a = pick(f.arcs), b = pick(f.arcs);
        if (a == b) break;
        auto sites = r2_add_sites(d, a, b);
        if (!sites.empty()) return pick(sites);
        break;
      }
      default: {
        MoveKind k = std::array{MoveKind::r1_remove, MoveKind::r2_remove, MoveKind::r3}[rng() % 3];
        auto sites = find_sites(d, k);
        if (!sites.empty()) return pick(sites);
        break;
      }
    }
  }
  return std::nullopt;
}

void add_fingers(Tangle& t, int q, const std::vector<Over>& first_grid, bool second_over) {
  t.open(q);
  t.open(q + 4);
  int a = q + 1;
  t.cross(a + 1, first_grid.at(0)).cross(a, first_grid.at(1)).cross(a + 2, first_grid.at(2)).cross(a + 1, first_grid.at(3));
  Over o = second_over ? Over::left : Over::right;
  t.cross(a + 1, o).cross(a + 2, o).cross(a, o).cross(a + 1, o);
  t.close(q + 3);
  t.close(q + 1);
}

Tangle band_playground(std::mt19937& rng, int m, int fingers) {
  Tangle t(m);
  for (int n = 0; n < fingers; ++n) {
    t.append(representative_tangle(random_class(rng, m, 1)));
    // a random first grid may clasp the two bands; redraw until unlinked
    for (;;) {
      std::vector<Over> grid;
      for (int k = 0; k < 4; ++k) grid.push_back(rng() % 2 ? Over::left : Over::right);
      Tangle next = t;
      add_fingers(next, 1 + static_cast<int>(rng() % static_cast<unsigned>(m - 1)), grid, rng() % 2);
      if (linking_vanishes(linking_matrix(next.closure()))) {
        t = std::move(next);
        break;
      }
    }
  }
  t.append(representative_tangle(random_class(rng, m, 1)));
  return t;
}

}  // namespace lzero::testing
