#pragma once

#include <cstddef>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "lzero/diagram.hpp"

namespace lzero {

using Integer = boost::multiprecision::cpp_int;

/// Exact integer polynomial in z. Zero coefficients are never stored.
class ConwayPolynomial {
public:
  ConwayPolynomial() = default;
  static ConwayPolynomial constant(const Integer& c);
  static ConwayPolynomial monomial(int degree, const Integer& c);

  const std::map<int, Integer>& terms() const noexcept { return terms_; }
  Integer coefficient(int degree) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  int degree() const noexcept { return terms_.empty() ? -1 : terms_.rbegin()->first; }

  ConwayPolynomial& operator+=(const ConwayPolynomial& rhs);
  ConwayPolynomial& operator-=(const ConwayPolynomial& rhs);
  /// Multiplies by z.
  ConwayPolynomial times_z() const;

  friend ConwayPolynomial operator+(ConwayPolynomial a, const ConwayPolynomial& b) { return a += b; }
  friend ConwayPolynomial operator-(ConwayPolynomial a, const ConwayPolynomial& b) { return a -= b; }
  friend bool operator==(const ConwayPolynomial&, const ConwayPolynomial&) = default;

  /// "c0 + c1*z + c2*z^2 + ..." without zero terms; "0" for the zero polynomial.
  std::string to_string() const;

private:
  void add(int degree, const Integer& c);
  std::map<int, Integer> terms_;
};

/// a_j: the coefficient of z^j (0 when absent).
Integer coefficient(const ConwayPolynomial& p, int j);

/// Changes crossing c between L+ and L-: the sign flips and the strands
/// exchange under/over slots.
LinkDiagram switch_crossing(const LinkDiagram& d, std::size_t c);

/// Orientation-respecting smoothing of crossing c (the L0 resolution):
/// under_in continues into over_out and over_in into under_out. Components
/// are renumbered so every resulting circle is its own component.
LinkDiagram smooth_crossing(const LinkDiagram& d, std::size_t c);

/// First crossing, along the arc cycles in component order from their
/// smallest arcs, whose first visit passes under. Returns crossings.size()
/// for a descending diagram.
std::size_t first_ascending_crossing(const LinkDiagram& d);

struct SkeinStats {
  std::size_t nodes = 0;
  std::size_t cache_hits = 0;
};

/// Conway polynomial by the skein relation
///   C(L+) - C(L-) = z C(L0),  C(unknot) = 1,  C(split) = 0,
/// switching crossings toward a descending diagram. Results are memoised
/// per call on a canonical relabelling of the diagram code, and kinks and
/// removable bigons are cleared before each step.
ConwayPolynomial conway_polynomial(const LinkDiagram& d, SkeinStats* stats = nullptr);

/// Canonical relabelling used as the memo key. Equal keys imply the codes
/// differ only by arc renaming and component order.
std::vector<int> canonical_code(const LinkDiagram& d);

/// Removes kinks (R1-) and bigons (R2-) until none remain.
LinkDiagram simplify(const LinkDiagram& d);

}  // namespace lzero
