#include "lzero/conway.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

#include "lzero/errors.hpp"
#include "lzero/moves.hpp"
#include "lzero/rewire.hpp"

namespace lzero {

ConwayPolynomial ConwayPolynomial::constant(const Integer& c) { return monomial(0, c); }

ConwayPolynomial ConwayPolynomial::monomial(int degree, const Integer& c) {
  ConwayPolynomial p;
  p.add(degree, c);
  return p;
}

Integer ConwayPolynomial::coefficient(int degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? Integer(0) : it->second;
}

void ConwayPolynomial::add(int degree, const Integer& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(degree, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

ConwayPolynomial& ConwayPolynomial::operator+=(const ConwayPolynomial& rhs) {
  for (const auto& [deg, c] : rhs.terms_) add(deg, c);
  return *this;
}

ConwayPolynomial& ConwayPolynomial::operator-=(const ConwayPolynomial& rhs) {
  for (const auto& [deg, c] : rhs.terms_) add(deg, -c);
  return *this;
}

ConwayPolynomial ConwayPolynomial::times_z() const {
  ConwayPolynomial p;
  for (const auto& [deg, c] : terms_) p.terms_.emplace(deg + 1, c);
  return p;
}

std::string ConwayPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [deg, c] : terms_) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) out << (c < 0 ? "-" : "");
    else out << (c < 0 ? " - " : " + ");
    out << mag;
    if (deg == 1) out << "*z";
    else if (deg > 1) out << "*z^" << deg;
    first = false;
  }
  return out.str();
}

Integer coefficient(const ConwayPolynomial& p, int j) {
  if (j < 0) throw DiagramError("coefficient degree must be non-negative");
  return p.coefficient(j);
}

LinkDiagram switch_crossing(const LinkDiagram& d, std::size_t c) {
  if (c >= d.crossings.size()) throw DiagramError("crossing " + std::to_string(c + 1) + " does not exist");
  LinkDiagram out = d;
  Crossing& x = out.crossings[c];
  x = Crossing{flipped(x.sign), x.over_in, x.over_out, x.under_in, x.under_out};
  return out;
}

LinkDiagram smooth_crossing(const LinkDiagram& d, std::size_t c) {
  if (c >= d.crossings.size()) throw DiagramError("crossing " + std::to_string(c + 1) + " does not exist");
  LinkDiagram out = d;
  const Crossing x = d.crossings[c];
  const rewire::Join joins[] = {{x.under_in, x.over_out}, {x.over_in, x.under_out}};
  rewire::remove_crossing(out, c, joins);
  rewire::renumber_by_cycles(out);
  return out;
}

std::size_t first_ascending_crossing(const LinkDiagram& d) {
  ArcIndex index(d);
  std::vector<bool> seen(d.crossings.size(), false);
  for (const auto& cycle : arc_cycles(d)) {
    for (ArcId a : cycle) {
      const ArcEnds& e = index.ends(a);
      if (seen[e.head_crossing]) continue;
      seen[e.head_crossing] = true;
      if (e.head_slot == Slot::under_in) return e.head_crossing;
    }
  }
  return d.crossings.size();
}

LinkDiagram simplify(const LinkDiagram& d) {
  LinkDiagram cur = d;
  for (;;) {
    auto kinks = find_sites(cur, MoveKind::r1_remove);
    if (!kinks.empty()) {
      cur = apply_move(cur, kinks.front());
      continue;
    }
    auto bigons = find_sites(cur, MoveKind::r2_remove);
    if (!bigons.empty()) {
      cur = apply_move(cur, bigons.front());
      continue;
    }
    return cur;
  }
}

namespace {

std::vector<int> encode(const LinkDiagram& d, const ArcIndex& index, const std::vector<std::vector<ArcId>>& cycles,
                        const std::vector<std::size_t>& starts) {
  std::map<ArcId, int> label;
  int next = 0;
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    const auto& cyc = cycles[k];
    for (std::size_t t = 0; t < cyc.size(); ++t) label[cyc[(starts[k] + t) % cyc.size()]] = next++;
  }
  std::vector<int> code;
  code.reserve(static_cast<std::size_t>(next) * 3 + cycles.size() + 2);
  code.push_back(static_cast<int>(d.free_loops.size()));
  code.push_back(static_cast<int>(cycles.size()));
  for (const auto& cyc : cycles) code.push_back(static_cast<int>(cyc.size()));
  for (std::size_t k = 0; k < cycles.size(); ++k) {
    const auto& cyc = cycles[k];
    for (std::size_t t = 0; t < cyc.size(); ++t) {
      ArcId a = cyc[(starts[k] + t) % cyc.size()];
      const ArcEnds& e = index.ends(a);
      const Crossing& x = d.crossings[e.head_crossing];
      bool under = e.head_slot == Slot::under_in;
      code.push_back(under ? 0 : 1);
      code.push_back(to_int(x.sign));
      code.push_back(label.at(under ? x.over_in : x.under_in));
    }
  }
  return code;
}

struct CodeHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(static_cast<unsigned>(x))) * 1099511628211ull;
    return h;
  }
};

class Engine {
public:
  explicit Engine(SkeinStats* stats) : stats_(stats) {}

  ConwayPolynomial eval(const LinkDiagram& input) {
    if (stats_) ++stats_->nodes;
    LinkDiagram d = simplify(input);
    if (split_pieces(d) > 1) return {};
    if (d.crossings.empty()) return ConwayPolynomial::constant(1);
    auto key = canonical_code(d);
    if (auto it = memo_.find(key); it != memo_.end()) {
      if (stats_) ++stats_->cache_hits;
      return it->second;
    }
    std::size_t c = first_ascending_crossing(d);
    ConwayPolynomial result;
    if (c == d.crossings.size()) {
      result = d.m == 1 ? ConwayPolynomial::constant(1) : ConwayPolynomial{};
    } else {
      ConwayPolynomial switched = eval(switch_crossing(d, c));
      ConwayPolynomial smoothed = eval(smooth_crossing(d, c)).times_z();
      result = d.crossings[c].sign == Sign::positive ? switched + smoothed : switched - smoothed;
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

private:
  SkeinStats* stats_;
  std::unordered_map<std::vector<int>, ConwayPolynomial, CodeHash> memo_;
};

}  // namespace

std::vector<int> canonical_code(const LinkDiagram& d) {
  ArcIndex index(d);
  auto cycles = arc_cycles(d);
  std::stable_sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  std::vector<std::size_t> starts(cycles.size(), 0);
  if (cycles.empty()) return encode(d, index, cycles, starts);

  std::size_t product = 1;
  for (const auto& c : cycles) {
    product *= c.size();
    if (product > 4096) break;
  }
  std::vector<int> best;
  if (product <= 4096) {
    std::vector<std::size_t> cur(cycles.size(), 0);
    for (;;) {
      auto code = encode(d, index, cycles, cur);
      if (best.empty() || code < best) best = std::move(code);
      std::size_t k = 0;
      while (k < cycles.size() && ++cur[k] == cycles[k].size()) cur[k++] = 0;
      if (k == cycles.size()) break;
    }
  } else {
    for (std::size_t s = 0; s < cycles.front().size(); ++s) {
      starts[0] = s;
      auto code = encode(d, index, cycles, starts);
      if (best.empty() || code < best) best = std::move(code);
    }
  }
  return best;
}

ConwayPolynomial conway_polynomial(const LinkDiagram& d, SkeinStats* stats) {
  require_valid(d);
  Engine engine(stats);
  return engine.eval(d);
}

}  // namespace lzero
