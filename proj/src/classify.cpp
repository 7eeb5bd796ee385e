#include "lzero/classify.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "lzero/errors.hpp"
#include "lzero/indexing.hpp"
#include "lzero/invariants.hpp"
#include "lzero/milnor.hpp"

namespace lzero {

void check_class(const ZeroSolveClass& g) {
  if (g.m < 1) throw ClassError("class needs m >= 1, got " + std::to_string(g.m));
  if (g.a.size() != static_cast<std::size_t>(g.m))
    throw ClassError("a has " + std::to_string(g.a.size()) + " entries, expected " + std::to_string(g.m));
  if (g.b.size() != choose3(g.m))
    throw ClassError("b has " + std::to_string(g.b.size()) + " entries, expected " + std::to_string(choose3(g.m)));
  if (g.c.size() != choose2(g.m))
    throw ClassError("c has " + std::to_string(g.c.size()) + " entries, expected " + std::to_string(choose2(g.m)));
  auto bit = [](int v) { return v == 0 || v == 1; };
  if (!std::all_of(g.a.begin(), g.a.end(), bit)) throw ClassError("a entries must be 0 or 1");
  if (!std::all_of(g.c.begin(), g.c.end(), bit)) throw ClassError("c entries must be 0 or 1");
}

ZeroSolveClass class_identity(int m) {
  ZeroSolveClass g{m, std::vector<int>(static_cast<std::size_t>(std::max(m, 0)), 0),
                   std::vector<std::int64_t>(choose3(m), 0), std::vector<int>(choose2(m), 0)};
  check_class(g);
  return g;
}

namespace {

void check_same_m(const ZeroSolveClass& g, const ZeroSolveClass& h) {
  check_class(g);
  check_class(h);
  if (g.m != h.m) throw ClassError("classes over m=" + std::to_string(g.m) + " and m=" + std::to_string(h.m));
}

}  // namespace

ZeroSolveClass class_add(const ZeroSolveClass& g, const ZeroSolveClass& h) {
  check_same_m(g, h);
  ZeroSolveClass out = g;
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] ^= h.a[i];
  for (std::size_t i = 0; i < out.b.size(); ++i) out.b[i] += h.b[i];
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] ^= h.c[i];
  return out;
}

ZeroSolveClass class_neg(const ZeroSolveClass& g) {
  check_class(g);
  ZeroSolveClass out = g;
  for (auto& v : out.b) v = -v;
  return out;
}

std::optional<int> class_order(const ZeroSolveClass& g) {
  check_class(g);
  if (std::any_of(g.b.begin(), g.b.end(), [](auto v) { return v != 0; })) return std::nullopt;
  if (g == class_identity(g.m)) return 1;
  return 2;
}

std::string order_string(std::optional<int> order) { return order ? std::to_string(*order) : "infinite"; }

namespace {

void require_unlinked(const LinkDiagram& d) {
  auto lk = linking_matrix(d);
  for (const auto& [i, j] : component_pairs(d.m)) {
    auto v = lk[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    if (v != 0) throw InvariantUndefined(i, j, v);
  }
}

}  // namespace

ZeroSolveClass classify(const LinkDiagram& d) {
  require_valid(d);
  require_unlinked(d);
  ZeroSolveClass g;
  g.m = d.m;
  for (ComponentId i = 1; i <= d.m; ++i) g.a.push_back(arf(d, i));
  for (const auto& [i, j, k] : component_triples(d.m)) g.b.push_back(triple_linking(d, i, j, k));
  for (const auto& [i, j] : component_pairs(d.m)) g.c.push_back(sato_levine(d, i, j) % 2 == 0 ? 0 : 1);
  return g;
}

SolvabilityReport is_zero_solvable(const LinkDiagram& d) {
  require_valid(d);
  SolvabilityReport r;
  auto lk = linking_matrix(d);
  for (const auto& [i, j] : component_pairs(d.m)) {
    auto v = lk[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    if (v != 0) r.obstructions.push_back("lk(K_" + std::to_string(i) + ",K_" + std::to_string(j) + ")=" + std::to_string(v));
  }
  if (!r.obstructions.empty()) {
    for (ComponentId i = 1; i <= d.m; ++i)
      if (arf(d, i)) r.obstructions.push_back("Arf(K_" + std::to_string(i) + ")=1");
    return r;
  }
  ZeroSolveClass g = classify(d);
  for (int i = 1; i <= d.m; ++i)
    if (g.a[static_cast<std::size_t>(i - 1)]) r.obstructions.push_back("Arf(K_" + std::to_string(i) + ")=1");
  auto triples = component_triples(d.m);
  for (std::size_t t = 0; t < triples.size(); ++t)
    if (g.b[t] != 0)
      r.obstructions.push_back("mu" + index_label(triples[t]) + "=" + (g.b[t] > 0 ? "+" : "") + std::to_string(g.b[t]));
  auto pairs = component_pairs(d.m);
  for (std::size_t n = 0; n < pairs.size(); ++n)
    if (g.c[n]) {
      auto [i, j] = pairs[n];
      r.obstructions.push_back("mu(" + std::to_string(i) + "," + std::to_string(i) + "," + std::to_string(j) + "," +
                               std::to_string(j) + ")=1 mod 2");
    }
  r.solvable = r.obstructions.empty();
  r.grope_class_2 = r.solvable;
  r.whitney_order_2 = r.solvable;
  return r;
}

bool equivalent(const LinkDiagram& d1, const LinkDiagram& d2) {
  if (d1.m != d2.m)
    throw DiagramError("diagrams have " + std::to_string(d1.m) + " and " + std::to_string(d2.m) + " components");
  return classify(d1) == classify(d2);
}

namespace {

// Strand at position `from` slides left to `to`, passing over the strands in between.
void slide_left(Tangle& t, int from, int to) {
  for (int q = from - 1; q >= to; --q) t.cross(q, Over::right);
}

// Undoes slide_left(t, to, from).
void slide_back(Tangle& t, int from, int to) {
  for (int q = from; q < to; ++q) t.cross(q, Over::left);
}

void trefoil_gadget(Tangle& t, int i) {
  t.open(i + 1);
  for (int n = 0; n < 3; ++n) t.cross(i, Over::right);
  t.close(i + 1);
}

// Closure of (s1 s2^-1)^3, or of its inverse, on strands i, j, k.
void borromean_gadget(Tangle& t, int i, int j, int k, bool positive) {
  slide_left(t, j, i + 1);
  slide_left(t, k, i + 2);
  for (int n = 0; n < 3; ++n) {
    if (positive) {
      t.cross(i, Over::left);
      t.cross(i + 1, Over::right);
    } else {
      t.cross(i + 1, Over::left);
      t.cross(i, Over::right);
    }
  }
  slide_back(t, i + 2, k);
  slide_back(t, i + 1, j);
}

// Five-crossing Whitehead clasp: a three-strand braid whose third strand is
// strand j returning along a cap and cup to the right of the braid.
void whitehead_gadget(Tangle& t, int i, int j) {
  slide_left(t, j, i + 1);
  t.open(i + 2);
  t.cross(i, Over::left);
  t.cross(i + 1, Over::right);
  t.cross(i, Over::left);
  t.cross(i + 1, Over::right);
  t.cross(i, Over::left);
  t.close(i + 2);
  slide_back(t, i + 1, j);
}

}  // namespace

Tangle representative_tangle(const ZeroSolveClass& g) {
  check_class(g);
  Tangle t(g.m);
  for (int i = 1; i <= g.m; ++i)
    if (g.a[static_cast<std::size_t>(i - 1)]) trefoil_gadget(t, i);
  auto triples = component_triples(g.m);
  for (std::size_t n = 0; n < triples.size(); ++n) {
    auto [i, j, k] = triples[n];
    for (std::int64_t r = 0; r < (g.b[n] < 0 ? -g.b[n] : g.b[n]); ++r) borromean_gadget(t, i, j, k, g.b[n] > 0);
  }
  auto pairs = component_pairs(g.m);
  for (std::size_t n = 0; n < pairs.size(); ++n)
    if (g.c[n]) whitehead_gadget(t, pairs[n][0], pairs[n][1]);
  return t;
}

LinkDiagram representative(const ZeroSolveClass& g) { return representative_tangle(g).closure(to_string(g)); }

namespace {

std::string join_ints(const auto& v, bool plus) {
  std::string out;
  for (std::size_t n = 0; n < v.size(); ++n) {
    if (n) out += ",";
    if (plus && v[n] > 0) out += "+";
    out += std::to_string(v[n]);
  }
  return out;
}

class ClassParser {
public:
  explicit ClassParser(std::string_view s) : s_(s) {}

  ZeroSolveClass parse() {
    ZeroSolveClass g;
    g.m = static_cast<int>(scalar("m"));
    separator();
    for (auto v : list("a")) g.a.push_back(static_cast<int>(v));
    separator();
    g.b = list("b");
    separator();
    for (auto v : list("c")) g.c.push_back(static_cast<int>(v));
    skip_space();
    if (pos_ != s_.size()) fail("unexpected trailing text");
    try {
      check_class(g);
    } catch (const ClassError& e) {
      throw ParseError(1, 1, e.what());
    }
    return g;
  }

private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(1, pos_ + 1, what); }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void key(const char* name) {
    skip_space();
    std::string_view k(name);
    if (s_.substr(pos_, k.size()) != k) fail(std::string("expected field '") + name + "'");
    pos_ += k.size();
    expect('=');
  }

  void separator() { expect(';'); }

  std::int64_t number() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '+') ++pos_;
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc{} || (s_[start] == '+' && pos_ < s_.size() && s_[pos_] == '-')) {
      pos_ = start;
      fail("expected an integer");
    }
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }

  std::int64_t scalar(const char* name) {
    key(name);
    return number();
  }

  std::vector<std::int64_t> list(const char* name) {
    key(name);
    std::vector<std::int64_t> out;
    skip_space();
    if (pos_ == s_.size() || s_[pos_] == ';') return out;
    out.push_back(number());
    for (;;) {
      skip_space();
      if (pos_ >= s_.size() || s_[pos_] != ',') return out;
      ++pos_;
      out.push_back(number());
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const ZeroSolveClass& g) {
  return "m=" + std::to_string(g.m) + "; a=" + join_ints(g.a, false) + "; b=" + join_ints(g.b, true) +
         "; c=" + join_ints(g.c, false);
}

ZeroSolveClass parse_class(std::string_view text) { return ClassParser(text).parse(); }

nlohmann::ordered_json to_json(const ZeroSolveClass& g) {
  nlohmann::ordered_json j;
  j["m"] = g.m;
  j["a"] = g.a;
  j["b"] = g.b;
  j["c"] = g.c;
  return j;
}

ZeroSolveClass class_from_json(const nlohmann::json& j) {
  ZeroSolveClass g;
  try {
    g.m = j.at("m").get<int>();
    g.a = j.at("a").get<std::vector<int>>();
    g.b = j.at("b").get<std::vector<std::int64_t>>();
    g.c = j.at("c").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw ClassError(std::string("class JSON: ") + e.what());
  }
  check_class(g);
  return g;
}

}  // namespace lzero
