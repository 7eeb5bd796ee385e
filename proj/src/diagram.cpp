#include "lzero/diagram.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "lzero/errors.hpp"
#include "lzero/rewire.hpp"

namespace lzero {

ArcId Crossing::at(Slot s) const noexcept {
  switch (s) {
    case Slot::under_in: return under_in;
    case Slot::under_out: return under_out;
    case Slot::over_in: return over_in;
    case Slot::over_out: return over_out;
  }
  return 0;
}

ArcId& Crossing::at(Slot s) noexcept {
  switch (s) {
    case Slot::under_in: return under_in;
    case Slot::under_out: return under_out;
    case Slot::over_in: return over_in;
    default: return over_out;
  }
}

ComponentId LinkDiagram::component_of(ArcId a) const {
  auto it = arc_components.find(a);
  if (it == arc_components.end()) throw DiagramError("arc " + std::to_string(a) + " has no component record");
  return it->second;
}

namespace {

constexpr std::array<Slot, 4> kSlots = {Slot::under_in, Slot::under_out, Slot::over_in, Slot::over_out};

bool is_input(Slot s) { return s == Slot::under_in || s == Slot::over_in; }

Slot partner(Slot s) {
  switch (s) {
    case Slot::under_in: return Slot::under_out;
    case Slot::under_out: return Slot::under_in;
    case Slot::over_in: return Slot::over_out;
    default: return Slot::over_in;
  }
}

const char* slot_name(Slot s) {
  switch (s) {
    case Slot::under_in: return "under_in";
    case Slot::under_out: return "under_out";
    case Slot::over_in: return "over_in";
    default: return "over_out";
  }
}

std::string crossing_label(std::size_t index) { return "crossing " + std::to_string(index + 1); }

}  // namespace

ArcIndex::ArcIndex(const LinkDiagram& d) : diagram_(&d) {
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    for (Slot s : kSlots) {
      ArcEnds& e = ends_[d.crossings[c].at(s)];
      if (is_input(s)) {
        e.head_crossing = c;
        e.head_slot = s;
      } else {
        e.tail_crossing = c;
        e.tail_slot = s;
      }
    }
  }
}

const ArcEnds& ArcIndex::ends(ArcId a) const {
  auto it = ends_.find(a);
  if (it == ends_.end()) throw DiagramError("arc " + std::to_string(a) + " does not occur in any crossing");
  return it->second;
}

ArcId ArcIndex::successor(ArcId a) const {
  const ArcEnds& e = ends(a);
  return diagram_->crossings[e.head_crossing].at(partner(e.head_slot));
}

std::vector<std::vector<ArcId>> arc_cycles(const LinkDiagram& d) {
  ArcIndex index(d);
  std::set<ArcId> seen;
  std::vector<std::vector<ArcId>> cycles;
  for (const auto& [arc, comp] : d.arc_components) {
    if (seen.count(arc) || !index.contains(arc)) continue;
    std::vector<ArcId> cycle;
    ArcId cur = arc;
    while (!seen.count(cur)) {
      seen.insert(cur);
      cycle.push_back(cur);
      cur = index.successor(cur);
    }
    cycles.push_back(std::move(cycle));
  }
  std::stable_sort(cycles.begin(), cycles.end(), [&](const auto& x, const auto& y) {
    return d.arc_components.at(x.front()) < d.arc_components.at(y.front());
  });
  return cycles;
}

ArcId max_arc_id(const LinkDiagram& d) {
  ArcId best = 0;
  for (const auto& [arc, comp] : d.arc_components) best = std::max(best, arc);
  for (const Crossing& c : d.crossings)
    for (Slot s : kSlots) best = std::max(best, c.at(s));
  return best;
}

// ---------------------------------------------------------------------------
// validation

std::vector<std::string> validate(const LinkDiagram& d) {
  std::vector<std::string> out;
  if (d.m < 1) out.push_back("components: count " + std::to_string(d.m) + " is not positive");

  std::map<ArcId, std::vector<std::size_t>> inputs, outputs;
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const Crossing& x = d.crossings[c];
    if (x.sign != Sign::positive && x.sign != Sign::negative)
      out.push_back(crossing_label(c) + ": sign is not +1 or -1");
    for (Slot s : kSlots) {
      ArcId a = x.at(s);
      if (a <= 0) out.push_back(crossing_label(c) + ": " + slot_name(s) + " arc " + std::to_string(a) + " is not positive");
      (is_input(s) ? inputs : outputs)[a].push_back(c);
    }
  }
  bool slots_ok = true;
  auto check_slots = [&](const std::map<ArcId, std::vector<std::size_t>>& table, const char* what) {
    for (const auto& [arc, where] : table) {
      if (where.size() > 1) {
        slots_ok = false;
        std::string msg = "arc " + std::to_string(arc) + " appears as an " + what + " slot " +
                          std::to_string(where.size()) + " times (";
        for (std::size_t k = 0; k < where.size(); ++k) msg += (k ? ", " : "") + crossing_label(where[k]);
        out.push_back(msg + ")");
      }
    }
  };
  check_slots(inputs, "input");
  check_slots(outputs, "output");
  for (const auto& [arc, where] : inputs) {
    if (!outputs.count(arc)) {
      slots_ok = false;
      out.push_back("arc " + std::to_string(arc) + " is dangling: it enters " + crossing_label(where.front()) +
                    " but never leaves a crossing");
    }
  }
  for (const auto& [arc, where] : outputs) {
    if (!inputs.count(arc)) {
      slots_ok = false;
      out.push_back("arc " + std::to_string(arc) + " is dangling: it leaves " + crossing_label(where.front()) +
                    " but never enters a crossing");
    }
  }

  bool labels_ok = true;
  for (const auto& [arc, where] : inputs) {
    if (!d.arc_components.count(arc)) {
      labels_ok = false;
      out.push_back("arc " + std::to_string(arc) + " has no component record");
    }
  }
  for (const auto& [arc, comp] : d.arc_components) {
    if (!inputs.count(arc) && !outputs.count(arc)) {
      labels_ok = false;
      out.push_back("arc " + std::to_string(arc) + " is dangling: labelled but used by no crossing");
    }
    if (comp < 1 || comp > d.m) {
      labels_ok = false;
      out.push_back("arc " + std::to_string(arc) + " is labelled with component " + std::to_string(comp) +
                    " outside 1.." + std::to_string(d.m));
    }
  }
  for (ComponentId comp : d.free_loops) {
    if (comp < 1 || comp > d.m) {
      labels_ok = false;
      out.push_back("free loop of component " + std::to_string(comp) + " is outside 1.." + std::to_string(d.m));
    }
  }
  if (!std::is_sorted(d.free_loops.begin(), d.free_loops.end()))
    out.push_back("free loops are not sorted by component");

  if (labels_ok) {
    for (std::size_t c = 0; c < d.crossings.size(); ++c) {
      const Crossing& x = d.crossings[c];
      auto comp = [&](ArcId a) { return d.arc_components.at(a); };
      if (comp(x.under_in) != comp(x.under_out))
        out.push_back(crossing_label(c) + ": under strand joins component " + std::to_string(comp(x.under_in)) +
                      " (arc " + std::to_string(x.under_in) + ") to component " + std::to_string(comp(x.under_out)) +
                      " (arc " + std::to_string(x.under_out) + ")");
      if (comp(x.over_in) != comp(x.over_out))
        out.push_back(crossing_label(c) + ": over strand joins component " + std::to_string(comp(x.over_in)) +
                      " (arc " + std::to_string(x.over_in) + ") to component " + std::to_string(comp(x.over_out)) +
                      " (arc " + std::to_string(x.over_out) + ")");
    }
  }

  if (slots_ok && labels_ok && d.m >= 1) {
    std::vector<int> owners(static_cast<std::size_t>(d.m) + 1, 0);
    for (const auto& cycle : arc_cycles(d)) {
      ComponentId first = d.arc_components.at(cycle.front());
      for (ArcId a : cycle) {
        if (d.arc_components.at(a) != first) {
          out.push_back("cycle through arc " + std::to_string(cycle.front()) + " mixes components " +
                        std::to_string(first) + " and " + std::to_string(d.arc_components.at(a)));
          break;
        }
      }
      ++owners[static_cast<std::size_t>(first)];
    }
    for (ComponentId comp : d.free_loops) ++owners[static_cast<std::size_t>(comp)];
    for (int comp = 1; comp <= d.m; ++comp) {
      int n = owners[static_cast<std::size_t>(comp)];
      if (n == 0) out.push_back("component " + std::to_string(comp) + " owns no cycle or free loop");
      if (n > 1)
        out.push_back("component " + std::to_string(comp) + " owns " + std::to_string(n) +
                      " cycles/free loops; a component is a single circle");
    }
  }
  return out;
}

void require_valid(const LinkDiagram& d) {
  auto violations = validate(d);
  if (violations.empty()) return;
  std::string msg = violations.front();
  for (std::size_t k = 1; k < violations.size(); ++k) msg += "; " + violations[k];
  throw DiagramError(msg);
}

// ---------------------------------------------------------------------------
// text format

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

int positive_int(const Token& t, std::size_t line, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size())
    throw ParseError(line, t.column, std::string("expected ") + what + ", found '" + std::string(t.text) + "'");
  if (value <= 0) throw ParseError(line, t.column, std::string(what) + " must be positive, found " + std::to_string(value));
  return value;
}

void expect_arity(const std::vector<Token>& tokens, std::size_t n, std::size_t line, std::string_view line_text,
                  const char* usage) {
  if (tokens.size() == n) return;
  std::size_t col = tokens.size() > n ? tokens[n].column : line_text.size() + 1;
  throw ParseError(line, col, std::string(tokens.size() > n ? "unexpected token" : "missing field") + "; expected '" +
                                  usage + "'");
}

}  // namespace

LinkDiagram parse_diagram(std::string_view text) {
  LinkDiagram d;
  bool have_m = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;

    auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    std::string_view kw = tokens[0].text;
    if (kw == "components") {
      expect_arity(tokens, 2, line_no, line, "components <m>");
      if (have_m) throw ParseError(line_no, tokens[0].column, "duplicate 'components' record");
      d.m = positive_int(tokens[1], line_no, "component count");
      have_m = true;
    } else if (kw == "x") {
      expect_arity(tokens, 6, line_no, line, "x <+|-> <under_in> <under_out> <over_in> <over_out>");
      Crossing c;
      if (tokens[1].text == "+") c.sign = Sign::positive;
      else if (tokens[1].text == "-") c.sign = Sign::negative;
      else throw ParseError(line_no, tokens[1].column, "crossing sign must be '+' or '-', found '" + std::string(tokens[1].text) + "'");
      c.under_in = positive_int(tokens[2], line_no, "arc id");
      c.under_out = positive_int(tokens[3], line_no, "arc id");
      c.over_in = positive_int(tokens[4], line_no, "arc id");
      c.over_out = positive_int(tokens[5], line_no, "arc id");
      d.crossings.push_back(c);
    } else if (kw == "a") {
      expect_arity(tokens, 3, line_no, line, "a <arc> <component>");
      ArcId arc = positive_int(tokens[1], line_no, "arc id");
      ComponentId comp = positive_int(tokens[2], line_no, "component id");
      if (!d.arc_components.emplace(arc, comp).second)
        throw DiagramError("line " + std::to_string(line_no) + ": arc " + std::to_string(arc) +
                           " has more than one component record");
    } else if (kw == "o") {
      expect_arity(tokens, 2, line_no, line, "o <component>");
      d.free_loops.push_back(positive_int(tokens[1], line_no, "component id"));
    } else {
      throw ParseError(line_no, tokens[0].column, "unknown record '" + std::string(kw) + "'");
    }
    if (end == text.size()) break;
  }
  if (!have_m) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'components <m>' record");
  std::sort(d.free_loops.begin(), d.free_loops.end());
  require_valid(d);
  return d;
}

std::string render_diagram(const LinkDiagram& d) {
  std::ostringstream out;
  if (d.name) out << "# " << *d.name << '\n';
  out << "components " << d.m << '\n';
  for (const Crossing& c : d.crossings)
    out << "x " << (c.sign == Sign::positive ? '+' : '-') << ' ' << c.under_in << ' ' << c.under_out << ' '
        << c.over_in << ' ' << c.over_out << '\n';
  for (const auto& [arc, comp] : d.arc_components) out << "a " << arc << ' ' << comp << '\n';
  for (ComponentId comp : d.free_loops) out << "o " << comp << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// structural operations

LinkDiagram sublink(const LinkDiagram& d, std::span<const ComponentId> keep) {
  if (keep.empty()) throw DiagramError("sublink: component set is empty");
  for (std::size_t k = 0; k < keep.size(); ++k) {
    if (keep[k] < 1 || keep[k] > d.m)
      throw DiagramError("sublink: component " + std::to_string(keep[k]) + " outside 1.." + std::to_string(d.m));
    if (k > 0 && keep[k] <= keep[k - 1]) throw DiagramError("sublink: component set is not strictly increasing");
  }
  std::vector<ComponentId> relabel(static_cast<std::size_t>(d.m) + 1, 0);
  for (std::size_t k = 0; k < keep.size(); ++k) relabel[static_cast<std::size_t>(keep[k])] = static_cast<int>(k) + 1;
  auto kept = [&](ArcId a) { return relabel[static_cast<std::size_t>(d.arc_components.at(a))] != 0; };

  LinkDiagram out = d;
  for (std::size_t c = out.crossings.size(); c-- > 0;) {
    const Crossing x = out.crossings[c];
    bool under = kept(x.under_in);
    bool over = kept(x.over_in);
    if (under && over) continue;
    std::vector<rewire::Join> joins;
    if (under) joins.push_back({x.under_in, x.under_out});
    if (over) joins.push_back({x.over_in, x.over_out});
    rewire::remove_crossing(out, c, joins);
  }
  std::map<ArcId, ComponentId> arcs;
  for (const auto& [arc, comp] : out.arc_components)
    if (ComponentId r = relabel[static_cast<std::size_t>(comp)]) arcs.emplace(arc, r);
  out.arc_components = std::move(arcs);
  std::vector<ComponentId> loops;
  for (ComponentId comp : out.free_loops)
    if (ComponentId r = relabel[static_cast<std::size_t>(comp)]) loops.push_back(r);
  std::sort(loops.begin(), loops.end());
  out.free_loops = std::move(loops);
  out.m = static_cast<int>(keep.size());
  return out;
}

LinkDiagram sublink(const LinkDiagram& d, std::initializer_list<ComponentId> keep) {
  return sublink(d, std::span<const ComponentId>(keep.begin(), keep.size()));
}

LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
  LinkDiagram out = a;
  ArcId shift = max_arc_id(a);
  for (Crossing c : b.crossings) {
    for (Slot s : kSlots) c.at(s) += shift;
    out.crossings.push_back(c);
  }
  for (const auto& [arc, comp] : b.arc_components) out.arc_components.emplace(arc + shift, comp + a.m);
  for (ComponentId comp : b.free_loops) out.free_loops.push_back(comp + a.m);
  std::sort(out.free_loops.begin(), out.free_loops.end());
  out.m = a.m + b.m;
  if (a.name && b.name) out.name = *a.name + "+" + *b.name;
  else out.name.reset();
  return out;
}

LinkDiagram mirror(const LinkDiagram& d) {
  LinkDiagram out = d;
  for (Crossing& c : out.crossings) {
    c = Crossing{flipped(c.sign), c.over_in, c.over_out, c.under_in, c.under_out};
  }
  return out;
}

// ---------------------------------------------------------------------------
// embedding data

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Counter-clockwise slot order around a crossing.
std::array<Slot, 4> rotation(Sign s) {
  if (s == Sign::positive) return {Slot::under_in, Slot::over_out, Slot::under_out, Slot::over_in};
  return {Slot::under_in, Slot::over_in, Slot::under_out, Slot::over_out};
}

Slot next_ccw(Sign sign, Slot s) {
  auto r = rotation(sign);
  for (std::size_t k = 0; k < 4; ++k)
    if (r[k] == s) return r[(k + 1) % 4];
  return s;
}

std::vector<std::size_t> piece_of_crossing(const LinkDiagram& d, const ArcIndex& index, std::size_t& pieces) {
  UnionFind uf(d.crossings.size());
  for (const auto& [arc, comp] : d.arc_components) {
    if (!index.contains(arc)) continue;
    const ArcEnds& e = index.ends(arc);
    uf.unite(e.tail_crossing, e.head_crossing);
  }
  std::map<std::size_t, std::size_t> roots;
  std::vector<std::size_t> piece(d.crossings.size());
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    auto [it, fresh] = roots.emplace(uf.find(c), roots.size());
    piece[c] = it->second;
  }
  pieces = roots.size();
  return piece;
}

}  // namespace

std::size_t split_pieces(const LinkDiagram& d) {
  ArcIndex index(d);
  std::size_t pieces = 0;
  piece_of_crossing(d, index, pieces);
  return pieces + d.free_loops.size();
}

std::vector<Face> faces(const LinkDiagram& d) {
  ArcIndex index(d);
  // Dart = (arc, forward). Forward darts run tail -> head.
  std::set<std::pair<ArcId, bool>> used;
  std::vector<Face> result;
  for (const auto& [arc0, comp] : d.arc_components) {
    if (!index.contains(arc0)) continue;
    for (bool fwd0 : {true, false}) {
      if (used.count({arc0, fwd0})) continue;
      Face f;
      ArcId arc = arc0;
      bool fwd = fwd0;
      while (!used.count({arc, fwd})) {
        used.insert({arc, fwd});
        f.arcs.push_back(arc);
        const ArcEnds& e = index.ends(arc);
        std::size_t c = fwd ? e.head_crossing : e.tail_crossing;
        Slot arrive = fwd ? e.head_slot : e.tail_slot;
        f.crossings.push_back(c);
        Slot leave = next_ccw(d.crossings[c].sign, arrive);
        arc = d.crossings[c].at(leave);
        fwd = !is_input(leave);
      }
      result.push_back(std::move(f));
    }
  }
  return result;
}

bool is_planar(const LinkDiagram& d) {
  ArcIndex index(d);
  std::size_t pieces = 0;
  auto piece = piece_of_crossing(d, index, pieces);
  std::vector<long> chi(pieces, 0);
  for (std::size_t c = 0; c < d.crossings.size(); ++c) chi[piece[c]] += 1 - 2;  // V - E with E = 2V
  for (const Face& f : faces(d)) chi[piece[f.crossings.front()]] += 1;
  return std::all_of(chi.begin(), chi.end(), [](long x) { return x == 2; });
}

}  // namespace lzero
