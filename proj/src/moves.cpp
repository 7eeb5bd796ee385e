#include "lzero/moves.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "lzero/errors.hpp"
#include "lzero/rewire.hpp"

namespace lzero {

std::string_view kind_name(MoveKind kind) {
  switch (kind) {
    case MoveKind::r1_add: return "R1+";
    case MoveKind::r1_remove: return "R1-";
    case MoveKind::r2_add: return "R2+";
    case MoveKind::r2_remove: return "R2-";
    case MoveKind::r3: return "R3";
    case MoveKind::band_pass: return "BANDPASS";
  }
  return "?";
}

namespace {

[[noreturn]] void fail(const MoveSite& site, const std::string& why) {
  throw MoveError(std::string(kind_name(site.kind)) + ": " + why);
}

std::string cid(std::size_t c) { return "crossing " + std::to_string(c + 1); }

void need_crossings(const LinkDiagram& d, const MoveSite& site, std::size_t n) {
  if (site.crossings.size() != n) fail(site, "expects " + std::to_string(n) + " crossing ids");
  std::set<std::size_t> distinct(site.crossings.begin(), site.crossings.end());
  if (distinct.size() != n) fail(site, "crossing ids must be distinct");
  for (std::size_t c : site.crossings)
    if (c >= d.crossings.size()) fail(site, cid(c) + " does not exist");
}

void need_arc(const LinkDiagram& d, const MoveSite& site, ArcId a) {
  if (!d.arc_components.count(a)) fail(site, "arc " + std::to_string(a) + " does not exist");
}

// Arc from crossing p to crossing q (either direction), if any, with
// whether it runs p -> q.
struct Edge {
  ArcId arc = 0;
  bool forward = true;
};

bool is_over(const Crossing& x, ArcId a) { return x.over_in == a || x.over_out == a; }

LinkDiagram add_kink(const LinkDiagram& d, const MoveSite& site) {
  if (site.arcs.size() != 1) fail(site, "expects one host arc");
  ArcId a = site.arcs.front();
  need_arc(d, site, a);
  ArcIndex index(d);
  if (!index.contains(a)) fail(site, "arc " + std::to_string(a) + " belongs to a free loop");
  LinkDiagram out = d;
  ArcId base = max_arc_id(d);
  ArcId loop = base + 1;
  ArcId rest = base + 2;
  rewire::retarget_head(out, a, rest, out.crossings.size());
  Crossing x;
  x.sign = site.sign;
  if (site.under_first) x = {site.sign, a, loop, loop, rest};
  else x = {site.sign, loop, rest, a, loop};
  out.crossings.push_back(x);
  ComponentId comp = d.arc_components.at(a);
  out.arc_components[loop] = comp;
  out.arc_components[rest] = comp;
  return out;
}

LinkDiagram remove_kink(const LinkDiagram& d, const MoveSite& site) {
  need_crossings(d, site, 1);
  std::size_t c = site.crossings.front();
  const Crossing& x = d.crossings[c];
  if (x.under_out != x.over_in && x.over_out != x.under_in) fail(site, cid(c) + " has no loop arc");
  LinkDiagram out = d;
  rewire::remove_crossing_straight(out, c);
  return out;
}

LinkDiagram add_bigon(const LinkDiagram& d, const MoveSite& site) {
  if (site.arcs.size() != 2) fail(site, "expects two arcs (under, over)");
  ArcId a = site.arcs[0];
  ArcId b = site.arcs[1];
  need_arc(d, site, a);
  need_arc(d, site, b);
  if (a == b) fail(site, "arcs must differ");
  ArcIndex index(d);
  if (!index.contains(a) || !index.contains(b)) fail(site, "host arcs must not be free loops");
  LinkDiagram out = d;
  ArcId base = max_arc_id(d);
  ArcId a1 = base + 1, a2 = base + 2, b1 = base + 3, b2 = base + 4;
  rewire::retarget_head(out, a, a2, out.crossings.size());
  rewire::retarget_head(out, b, b2, out.crossings.size());
  Crossing x1{site.sign, a, a1, 0, 0};
  Crossing x2{flipped(site.sign), a1, a2, 0, 0};
  if (site.parallel) {
    x1.over_in = b, x1.over_out = b1;
    x2.over_in = b1, x2.over_out = b2;
  } else {
    x2.over_in = b, x2.over_out = b1;
    x1.over_in = b1, x1.over_out = b2;
  }
  out.crossings.push_back(x1);
  out.crossings.push_back(x2);
  out.arc_components[a1] = out.arc_components[a2] = d.arc_components.at(a);
  out.arc_components[b1] = out.arc_components[b2] = d.arc_components.at(b);
  if (is_planar(d) && !is_planar(out))
    fail(site, "arcs " + std::to_string(a) + " and " + std::to_string(b) +
                   " do not share a face compatible with this sign and orientation");
  return out;
}

// Pairs (X, Y) joined by one arc of the strand that is over at both and one
// arc of the strand that is under at both.
bool is_bigon(const LinkDiagram& d, std::size_t p, std::size_t q) {
  const Crossing& x = d.crossings[p];
  const Crossing& y = d.crossings[q];
  bool over_link = x.over_out == y.over_in || y.over_out == x.over_in;
  bool under_link = x.under_out == y.under_in || y.under_out == x.under_in;
  return over_link && under_link && x.sign != y.sign;
}

LinkDiagram remove_bigon(const LinkDiagram& d, const MoveSite& site) {
  need_crossings(d, site, 2);
  std::size_t p = site.crossings[0], q = site.crossings[1];
  if (!is_bigon(d, p, q))
    fail(site, cid(p) + " and " + cid(q) + " do not bound a bigon with one strand over at both");
  LinkDiagram out = d;
  rewire::remove_crossing_straight(out, std::max(p, q));
  rewire::remove_crossing_straight(out, std::min(p, q));
  return out;
}

std::optional<Face> face_on(const LinkDiagram& d, std::span<const std::size_t> crossings) {
  std::set<std::size_t> want(crossings.begin(), crossings.end());
  for (Face& f : faces(d)) {
    if (f.arcs.size() != crossings.size()) continue;
    std::set<std::size_t> have(f.crossings.begin(), f.crossings.end());
    if (have == want) return std::move(f);
  }
  return std::nullopt;
}

Slot in_slot(bool over) { return over ? Slot::over_in : Slot::under_in; }
Slot out_slot(bool over) { return over ? Slot::over_out : Slot::under_out; }

LinkDiagram triangle_move(const LinkDiagram& d, const MoveSite& site) {
  need_crossings(d, site, 3);
  auto face = face_on(d, site.crossings);
  if (!face) fail(site, "crossings do not bound a triangle face");
  ArcIndex index(d);
  struct Strand {
    ArcId edge;
    std::size_t tail, head;
    bool over_tail, over_head;
    ArcId before, after;
  };
  std::vector<Strand> strands;
  for (ArcId e : face->arcs) {
    const ArcEnds& ends = index.ends(e);
    Strand s{e, ends.tail_crossing, ends.head_crossing, ends.tail_slot == Slot::over_out,
             ends.head_slot == Slot::over_in, 0, 0};
    s.before = d.crossings[s.tail].at(in_slot(s.over_tail));
    s.after = d.crossings[s.head].at(out_slot(s.over_head));
    strands.push_back(s);
  }
  std::set<ArcId> distinct{strands[0].edge, strands[1].edge, strands[2].edge};
  if (distinct.size() != 3) fail(site, "triangle edges must be three distinct arcs");
  bool top = std::any_of(strands.begin(), strands.end(), [](const Strand& s) { return s.over_tail && s.over_head; });
  if (!top) fail(site, "no strand passes over at both of its triangle crossings");
  LinkDiagram out = d;
  for (const Strand& s : strands) {
    out.crossings[s.head].at(in_slot(s.over_head)) = s.before;
    out.crossings[s.head].at(out_slot(s.over_head)) = s.edge;
    out.crossings[s.tail].at(in_slot(s.over_tail)) = s.edge;
    out.crossings[s.tail].at(out_slot(s.over_tail)) = s.after;
  }
  return out;
}

std::optional<Edge> edge_between(const LinkDiagram& d, const ArcIndex& index, std::span<const ArcId> arcs,
                                 std::size_t p, std::size_t q) {
  for (ArcId a : arcs) {
    const ArcEnds& e = index.ends(a);
    if (e.tail_crossing == p && e.head_crossing == q) return Edge{a, true};
    if (e.tail_crossing == q && e.head_crossing == p) return Edge{a, false};
  }
  (void)d;
  return std::nullopt;
}

LinkDiagram band_pass(const LinkDiagram& d, const MoveSite& site) {
  need_crossings(d, site, 4);
  auto face = face_on(d, site.crossings);
  if (!face) fail(site, "crossings do not bound a square face");
  ArcIndex index(d);
  const auto& c = site.crossings;
  std::array<Edge, 4> edges;
  for (std::size_t k = 0; k < 4; ++k) {
    auto e = edge_between(d, index, face->arcs, c[k], c[(k + 1) % 4]);
    if (!e) fail(site, "no face edge joins " + cid(c[k]) + " and " + cid(c[(k + 1) % 4]) + "; list them in cyclic order");
    edges[k] = *e;
  }
  // Band A: edges 0 and 2; band B: edges 1 and 3.
  bool a_over = is_over(d.crossings[c[0]], edges[0].arc);
  for (std::size_t k : {0u, 2u}) {
    for (std::size_t end : {k, (k + 1) % 4}) {
      if (is_over(d.crossings[c[end]], edges[k].arc) != a_over)
        fail(site, "band through arcs " + std::to_string(edges[0].arc) + "," + std::to_string(edges[2].arc) +
                       " is not entirely " + (a_over ? "over" : "under") + " the other band");
    }
  }
  for (std::size_t k : {0u, 1u}) {
    ComponentId c1 = d.arc_components.at(edges[k].arc);
    ComponentId c2 = d.arc_components.at(edges[k + 2].arc);
    if (c1 != c2)
      fail(site, "both strands of each band must lie on one component (arcs " + std::to_string(edges[k].arc) +
                     " and " + std::to_string(edges[k + 2].arc) + " lie on components " + std::to_string(c1) +
                     " and " + std::to_string(c2) + ")");
    if (edges[k].forward != edges[k + 2].forward)
      fail(site, "strands of the band through arcs " + std::to_string(edges[k].arc) + " and " +
                     std::to_string(edges[k + 2].arc) + " are not oppositely oriented");
  }
  LinkDiagram out = d;
  for (std::size_t k : c) {
    Crossing& x = out.crossings[k];
    x = Crossing{flipped(x.sign), x.over_in, x.over_out, x.under_in, x.under_out};
  }
  return out;
}

}  // namespace

LinkDiagram apply_move(const LinkDiagram& d, const MoveSite& site) {
  switch (site.kind) {
    case MoveKind::r1_add: return add_kink(d, site);
    case MoveKind::r1_remove: return remove_kink(d, site);
    case MoveKind::r2_add: return add_bigon(d, site);
    case MoveKind::r2_remove: return remove_bigon(d, site);
    case MoveKind::r3: return triangle_move(d, site);
    case MoveKind::band_pass: return band_pass(d, site);
  }
  fail(site, "unknown move kind");
}

std::vector<MoveSite> find_sites(const LinkDiagram& d, MoveKind kind) {
  std::vector<MoveSite> sites;
  const std::size_t n = d.crossings.size();
  switch (kind) {
    case MoveKind::r1_remove:
      for (std::size_t c = 0; c < n; ++c) {
        const Crossing& x = d.crossings[c];
        if (x.under_out == x.over_in || x.over_out == x.under_in) sites.push_back({kind, {c}, {}});
      }
      break;
    case MoveKind::r2_remove:
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
          if (is_bigon(d, p, q)) sites.push_back({kind, {p, q}, {}});
      break;
    case MoveKind::r3:
    case MoveKind::band_pass: {
      std::size_t want = kind == MoveKind::r3 ? 3 : 4;
      std::set<std::vector<std::size_t>> seen;
      for (const Face& f : faces(d)) {
        if (f.arcs.size() != want) continue;
        std::set<std::size_t> distinct(f.crossings.begin(), f.crossings.end());
        if (distinct.size() != want) continue;
        std::vector<std::size_t> key(distinct.begin(), distinct.end());
        if (!seen.insert(key).second) continue;
        // face order: f.crossings[k] is the far end of f.arcs[k]
        MoveSite site{kind, f.crossings, {}};
        try {
          apply_move(d, site);
          sites.push_back(site);
        } catch (const MoveError&) {
        }
      }
      break;
    }
    case MoveKind::r1_add:
      for (const auto& [arc, comp] : d.arc_components)
        for (Sign s : {Sign::positive, Sign::negative})
          for (bool first : {true, false}) {
            MoveSite site{kind, {}, {arc}, s, first};
            sites.push_back(site);
          }
      break;
    case MoveKind::r2_add:
      throw MoveError("R2+: enumerate with r2_add_sites for a chosen arc pair");
  }
  return sites;
}

std::vector<MoveSite> r2_add_sites(const LinkDiagram& d, ArcId a, ArcId b) {
  std::vector<MoveSite> sites;
  if (a == b) return sites;
  for (auto [under, over] : {std::pair{a, b}, std::pair{b, a}}) {
    for (bool parallel : {true, false}) {
      for (Sign s : {Sign::positive, Sign::negative}) {
        MoveSite site{MoveKind::r2_add, {}, {under, over}, s, true, parallel};
        try {
          LinkDiagram out = apply_move(d, site);
          std::size_t x1 = out.crossings.size() - 2;
          std::array<std::size_t, 2> pair{x1, x1 + 1};
          if (!is_planar(out) || !face_on(out, pair)) continue;
          sites.push_back(site);
        } catch (const MoveError&) {
        }
      }
    }
  }
  return sites;
}

// ---------------------------------------------------------------------------
// text form

std::string to_string(const MoveSite& site) {
  std::ostringstream out;
  out << kind_name(site.kind);
  auto crossings = [&] {
    out << (site.crossings.size() == 1 ? " crossing=" : " crossings=");
    for (std::size_t k = 0; k < site.crossings.size(); ++k) out << (k ? "," : "") << site.crossings[k] + 1;
  };
  char sign = site.sign == Sign::positive ? '+' : '-';
  switch (site.kind) {
    case MoveKind::r1_add:
      out << " arc=" << (site.arcs.empty() ? 0 : site.arcs[0]) << " sign=" << sign
          << " first=" << (site.under_first ? "under" : "over");
      break;
    case MoveKind::r2_add:
      out << " under=" << (site.arcs.size() > 0 ? site.arcs[0] : 0) << " over=" << (site.arcs.size() > 1 ? site.arcs[1] : 0)
          << " sign=" << sign << " parallel=" << (site.parallel ? "yes" : "no");
      break;
    default:
      crossings();
  }
  return out.str();
}

namespace {

long long parse_number(std::string_view v, std::string_view key) {
  long long x = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || ptr != v.data() + v.size() || x <= 0)
    throw MoveError("move site: " + std::string(key) + " expects a positive integer, found '" + std::string(v) + "'");
  return x;
}

}  // namespace

MoveSite parse_move_site(std::string_view text) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    std::size_t s = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t') ++i;
    if (i > s) words.push_back(text.substr(s, i - s));
  }
  if (words.empty()) throw MoveError("move site: empty");
  MoveSite site;
  std::string_view kw = words[0];
  if (kw == "R1+") site.kind = MoveKind::r1_add;
  else if (kw == "R1-") site.kind = MoveKind::r1_remove;
  else if (kw == "R2+") site.kind = MoveKind::r2_add;
  else if (kw == "R2-") site.kind = MoveKind::r2_remove;
  else if (kw == "R3") site.kind = MoveKind::r3;
  else if (kw == "BANDPASS") site.kind = MoveKind::band_pass;
  else throw MoveError("move site: unknown kind '" + std::string(kw) + "'");

  ArcId under = 0, over = 0;
  for (std::size_t k = 1; k < words.size(); ++k) {
    auto eq = words[k].find('=');
    if (eq == std::string_view::npos) throw MoveError("move site: expected key=value, found '" + std::string(words[k]) + "'");
    std::string_view key = words[k].substr(0, eq);
    std::string_view val = words[k].substr(eq + 1);
    if (key == "crossing" || key == "crossings") {
      std::size_t p = 0;
      while (p <= val.size()) {
        std::size_t q = val.find(',', p);
        if (q == std::string_view::npos) q = val.size();
        site.crossings.push_back(static_cast<std::size_t>(parse_number(val.substr(p, q - p), key)) - 1);
        p = q + 1;
      }
    } else if (key == "arc") {
      site.arcs = {static_cast<ArcId>(parse_number(val, key))};
    } else if (key == "under") {
      under = static_cast<ArcId>(parse_number(val, key));
    } else if (key == "over") {
      over = static_cast<ArcId>(parse_number(val, key));
    } else if (key == "sign") {
      if (val == "+") site.sign = Sign::positive;
      else if (val == "-") site.sign = Sign::negative;
      else throw MoveError("move site: sign must be + or -");
    } else if (key == "first") {
      if (val == "under") site.under_first = true;
      else if (val == "over") site.under_first = false;
      else throw MoveError("move site: first must be under or over");
    } else if (key == "parallel") {
      if (val == "yes") site.parallel = true;
      else if (val == "no") site.parallel = false;
      else throw MoveError("move site: parallel must be yes or no");
    } else {
      throw MoveError("move site: unknown key '" + std::string(key) + "'");
    }
  }
  if (site.kind == MoveKind::r2_add) {
    if (!under || !over) throw MoveError("move site: R2+ needs under= and over=");
    site.arcs = {under, over};
  }
  std::size_t want = 0;
  switch (site.kind) {
    case MoveKind::r1_remove: want = 1; break;
    case MoveKind::r2_remove: want = 2; break;
    case MoveKind::r3: want = 3; break;
    case MoveKind::band_pass: want = 4; break;
    default: break;
  }
  if (site.crossings.size() != want)
    throw MoveError("move site: " + std::string(kw) + " takes " + std::to_string(want) + " crossing(s), found " +
                    std::to_string(site.crossings.size()));
  if (site.kind == MoveKind::r1_add && site.arcs.empty()) throw MoveError("move site: R1+ needs arc=");
  return site;
}

}  // namespace lzero
