#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lzero/classify.hpp"
#include "lzero/conway.hpp"
#include "lzero/diagram.hpp"
#include "lzero/moves.hpp"
#include "lzero/tangle.hpp"

namespace lzero::testing {

std::string fixture_path(const std::string& name);
LinkDiagram load_fixture(const std::string& name);
/// File names of every shipped fixture, sorted.
std::vector<std::string> corpus();

/// Skein evaluation with no memo, no simplification and no split test.
/// Works on its own edge-merging representation, starts each cycle at its
/// largest arc and switches the lowest-numbered ascending crossing.
std::map<int, std::int64_t> naive_conway(const LinkDiagram& d);
bool same_polynomial(const ConwayPolynomial& p, const std::map<int, std::int64_t>& q);

ZeroSolveClass random_class(std::mt19937& rng, int m, int max_b);

/// A random applicable R1+/R1-/R2+/R2-/R3 site, or nothing for a
/// crossing-free diagram.
std::optional<MoveSite> random_r_move(const LinkDiagram& d, std::mt19937& rng);

/// Two fingers grown from the strands at positions q and q+1 pass through
/// each other and back: the first grid uses the given over choices, the
/// second grid keeps the right finger's band entirely over (or under), so
/// it is a band-pass site.
void add_fingers(Tangle& t, int q, const std::vector<Over>& first_grid, bool second_over);

/// Random gadgets on m strands interleaved with `fingers` finger pairs,
/// redrawn until all linking numbers vanish.
Tangle band_playground(std::mt19937& rng, int m, int fingers);

}  // namespace lzero::testing
