#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lzero {

/// Noncommuting power series in h_1..h_m with integer coefficients,
/// truncated above total degree 2:
///   c0 + sum_j c_j h_j + sum_{j,k} c_jk h_j h_k.
/// Indices are 1-based.
class MagnusSeries {
public:
  explicit MagnusSeries(int variables);

  static MagnusSeries one(int variables);
  /// 1 + h_j, the image of the j-th meridian.
  static MagnusSeries meridian(int variables, int j);

  int variables() const noexcept { return m_; }
  std::int64_t constant() const noexcept { return c0_; }
  std::int64_t linear(int j) const;
  std::int64_t quadratic(int j, int k) const;

  void set_constant(std::int64_t v) noexcept { c0_ = v; }
  void set_linear(int j, std::int64_t v);
  void set_quadratic(int j, int k, std::int64_t v);

  MagnusSeries operator*(const MagnusSeries& rhs) const;
  /// Inverse of a unit series (constant term 1).
  MagnusSeries inverse() const;
  /// Integer power; negative exponents use the inverse.
  MagnusSeries pow(int e) const;

  friend bool operator==(const MagnusSeries&, const MagnusSeries&) = default;

  std::string to_string() const;

private:
  std::size_t idx(int j, int k) const;

  int m_;
  std::int64_t c0_ = 0;
  std::vector<std::int64_t> c1_;
  std::vector<std::int64_t> c2_;
};

}  // namespace lzero
