#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lzero/classify.hpp"
#include "lzero/conway.hpp"
#include "lzero/errors.hpp"
#include "lzero/indexing.hpp"
#include "lzero/invariants.hpp"
#include "lzero/milnor.hpp"
#include "lzero/moves.hpp"
#include "support.hpp"

using namespace lzero;
using namespace lzero::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Result {
  bool ok = true;
  std::string detail;
};

void expect(Result& r, bool cond, const std::string& what) {
  if (!cond && r.ok) {
    r.ok = false;
    r.detail = what;
  }
}

int failures = 0;

void run(int id, const std::string& title, double limit_seconds, const std::function<Result()>& body) {
  auto t0 = Clock::now();
  Result r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_seconds > 0 && secs >= limit_seconds && r.ok) r = {false, "took longer than the limit"};
  if (!r.ok) ++failures;
  std::printf("%s %d %s (%.3f s%s)%s%s\n", r.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
              limit_seconds > 0 ? (", limit " + std::to_string(static_cast<int>(limit_seconds)) + " s").c_str() : "",
              r.detail.empty() ? "" : ": ", r.detail.c_str());
  std::fflush(stdout);
}

Integer a(const LinkDiagram& d, int j) { return coefficient(conway_polynomial(d), j); }

ZeroSolveClass project(const ZeroSolveClass& g, const std::vector<ComponentId>& keep) {
  ZeroSolveClass out{static_cast<int>(keep.size()), {}, {}, {}};
  for (ComponentId c : keep) out.a.push_back(g.a[static_cast<std::size_t>(c - 1)]);
  auto triples = component_triples(g.m);
  for (const auto& t : component_triples(out.m)) {
    std::array<ComponentId, 3> orig{keep[static_cast<std::size_t>(t[0] - 1)], keep[static_cast<std::size_t>(t[1] - 1)],
                                    keep[static_cast<std::size_t>(t[2] - 1)]};
    for (std::size_t n = 0; n < triples.size(); ++n)
      if (triples[n] == orig) out.b.push_back(g.b[n]);
  }
  auto pairs = component_pairs(g.m);
  for (const auto& p : component_pairs(out.m)) {
    std::array<ComponentId, 2> orig{keep[static_cast<std::size_t>(p[0] - 1)], keep[static_cast<std::size_t>(p[1] - 1)]};
    for (std::size_t n = 0; n < pairs.size(); ++n)
      if (pairs[n] == orig) out.c.push_back(g.c[n]);
  }
  return out;
}

std::optional<ZeroSolveClass> class_if_defined(const LinkDiagram& d) {
  if (!linking_vanishes(linking_matrix(d))) return std::nullopt;
  return classify(d);
}

}  // namespace

int main() {
  run(1, "reference invariant values", 1.0, [] {
    Result r;
    auto trefoil = load_fixture("trefoil.lz");
    expect(r, a(trefoil, 2) == 1, "a2(trefoil) != 1");
    expect(r, arf(trefoil, 1) == 1, "Arf(trefoil) != 1");
    expect(r, a(load_fixture("fig8.lz"), 2) == -1, "a2(figure eight) != -1");
    auto w = load_fixture("whitehead.lz");
    expect(r, linking_number(w, 1, 2) == 0, "lk(Whitehead) != 0");
    expect(r, sato_levine(w, 1, 2) == 1, "mu(1122) of Whitehead != 1");
    auto b = load_fixture("borromean.lz");
    expect(r, linking_vanishes(linking_matrix(b)), "Borromean rings link pairwise");
    expect(r, triple_linking(b, 1, 2, 3) == 1, "mu(123) of Borromean != +1");
    return r;
  });

  run(2, "two-component classes enumerate Z2^2 + Z2", 5.0, [] {
    Result r;
    std::set<std::string> seen;
    std::vector<LinkDiagram> reps;
    for (int bits = 0; bits < 8; ++bits) {
      ZeroSolveClass g{2, {bits & 1, (bits >> 1) & 1}, {}, {(bits >> 2) & 1}};
      reps.push_back(representative(g));
      auto got = classify(reps.back());
      expect(r, got == g, "representative of " + to_string(g) + " classified as " + to_string(got));
      seen.insert(to_string(got));
    }
    expect(r, seen.size() == 8, "classes are not all distinct");
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j)
        expect(r, !equivalent(reps[i], reps[j]), "representatives " + std::to_string(i) + " and " +
                                                      std::to_string(j) + " are equivalent");
    return r;
  });

  run(3, "classify(representative(g)) = g, 120 random classes", 60.0, [] {
    Result r;
    std::mt19937 rng(3);
    for (int n = 0; n < 120; ++n) {
      auto g = random_class(rng, 1 + static_cast<int>(rng() % 4), 3);
      auto got = classify(representative(g));
      expect(r, got == g, to_string(g) + " came back as " + to_string(got));
    }
    return r;
  });

  run(4, "memoised Conway polynomial equals the naive evaluator on the corpus", 30.0, [] {
    Result r;
    int checked = 0;
    for (const auto& name : corpus()) {
      auto d = load_fixture(name);
      if (d.crossings.size() > 8) continue;
      ++checked;
      expect(r, same_polynomial(conway_polynomial(d), naive_conway(d)), name);
    }
    expect(r, checked >= 10, "too few corpus diagrams");
    r.detail += r.ok ? std::to_string(checked) + " diagrams" : "";
    return r;
  });

  run(5, "Reidemeister and band-pass invariance", 0.0, [] {
    Result r;
    std::mt19937 rng(5);
    int r_moves = 0;
    auto names = corpus();
    while (r_moves < 600) {
      for (const auto& name : names) {
        auto d = load_fixture(name);
        const auto poly = conway_polynomial(d);
        const auto tuple = invariant_tuple(d);
        const auto cls = class_if_defined(d);
        for (int step = 0; step < 6; ++step) {
          auto site = random_r_move(d, rng);
          if (!site) break;
          d = apply_move(d, *site);
          ++r_moves;
          std::string where = name + " after " + to_string(*site);
          expect(r, validate(d).empty() && is_planar(d), where + ": invalid diagram");
          expect(r, conway_polynomial(d) == poly, where + ": Conway polynomial changed");
          expect(r, invariant_tuple(d) == tuple, where + ": linking or mu-bar changed");
          expect(r, class_if_defined(d) == cls, where + ": class changed");
        }
      }
    }
    int passes = 0;
    for (int n = 0; passes < 60 && n < 200; ++n) {
      int m = 2 + static_cast<int>(rng() % 3);
      auto d = band_playground(rng, m, 2).closure();
      const auto cls = classify(d);
      for (int step = 0; step < 3; ++step) {
        auto sites = find_sites(d, MoveKind::band_pass);
        if (sites.empty()) break;
        auto site = sites[rng() % sites.size()];
        auto before = d;
        d = apply_move(d, site);
        ++passes;
        auto after = classify(d);
        expect(r, after == cls, to_string(cls) + " became " + to_string(after) + " after " + to_string(site));
        for (const auto& [i, j] : component_pairs(m)) {
          auto s0 = sato_levine(before, i, j), s1 = sato_levine(d, i, j);
          expect(r, ((s0 - s1) % 2) == 0, "Sato-Levine parity changed after " + to_string(site));
        }
      }
    }
    expect(r, r_moves >= 500, "fewer than 500 Reidemeister moves");
    expect(r, passes >= 50, "fewer than 50 band passes");
    if (r.ok) r.detail = std::to_string(r_moves) + " Reidemeister moves, " + std::to_string(passes) + " band passes";
    return r;
  });

  run(6, "degree-1 longitude coefficients equal linking numbers", 0.0, [] {
    Result r;
    for (const auto& name : corpus()) {
      auto d = load_fixture(name);
      auto p = wirtinger(d);
      auto images = magnus_expand(p);
      auto lk = linking_matrix(d);
      for (int k = 1; k <= d.m; ++k) {
        auto s = longitude_series(p, images, k);
        for (int j = 1; j <= d.m; ++j)
          expect(r, s.linear(j) == lk[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)],
                 name + ": longitude " + std::to_string(k) + " coefficient of h" + std::to_string(j));
      }
    }
    return r;
  });

  run(7, "stacked gadgets classify to class_add, 60 trials", 0.0, [] {
    Result r;
    std::mt19937 rng(7);
    for (int n = 0; n < 60; ++n) {
      int m = 1 + static_cast<int>(rng() % 4);
      auto g = random_class(rng, m, 3), h = random_class(rng, m, 3);
      Tangle t = representative_tangle(g);
      t.append(representative_tangle(h));
      auto got = classify(t.closure());
      expect(r, got == class_add(g, h), to_string(g) + " stacked on " + to_string(h) + " gave " + to_string(got));
    }
    return r;
  });

  run(8, "sublink classes are coordinate projections", 0.0, [] {
    Result r;
    int checked = 0;
    for (const auto& name : corpus()) {
      auto d = load_fixture(name);
      if (!linking_vanishes(linking_matrix(d))) continue;
      auto g = classify(d);
      for (unsigned mask = 1; mask < (1u << d.m); ++mask) {
        std::vector<ComponentId> keep;
        for (int c = 1; c <= d.m; ++c)
          if (mask & (1u << (c - 1))) keep.push_back(c);
        ++checked;
        expect(r, classify(sublink(d, keep)) == project(g, keep), name + " mask " + std::to_string(mask));
      }
    }
    if (r.ok) r.detail = std::to_string(checked) + " sublinks";
    return r;
  });

  run(9, "Conway polynomial of a 12-crossing diagram", 5.0, [] {
    Result r;
    auto k = load_fixture("knot-12.lz");
    expect(r, k.crossings.size() == 12, "knot-12 is not a 12-crossing diagram");
    auto p = conway_polynomial(k);
    expect(r, p.to_string() == "1 + 3*z^2 + 1*z^4", "knot-12 gave " + p.to_string());
    auto t = load_fixture("turks-head-12.lz");
    expect(r, t.crossings.size() == 12, "turks-head-12 is not a 12-crossing diagram");
    conway_polynomial(t);
    return r;
  });

  std::printf("%s: %d failing\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
