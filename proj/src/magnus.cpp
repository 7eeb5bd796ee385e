#include "lzero/magnus.hpp"

#include <sstream>

#include "lzero/errors.hpp"

namespace lzero {

MagnusSeries::MagnusSeries(int variables)
    : m_(variables), c1_(static_cast<std::size_t>(variables), 0),
      c2_(static_cast<std::size_t>(variables) * static_cast<std::size_t>(variables), 0) {
  if (variables < 0) throw InternalError("MagnusSeries: negative variable count");
}

MagnusSeries MagnusSeries::one(int variables) {
  MagnusSeries s(variables);
  s.c0_ = 1;
  return s;
}

MagnusSeries MagnusSeries::meridian(int variables, int j) {
  MagnusSeries s = one(variables);
  s.set_linear(j, 1);
  return s;
}

std::size_t MagnusSeries::idx(int j, int k) const {
  if (j < 1 || j > m_ || k < 1 || k > m_) throw InternalError("MagnusSeries: variable index out of range");
  return static_cast<std::size_t>(j - 1) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(k - 1);
}

std::int64_t MagnusSeries::linear(int j) const { return c1_[idx(j, j) / static_cast<std::size_t>(m_ + 1)]; }
std::int64_t MagnusSeries::quadratic(int j, int k) const { return c2_[idx(j, k)]; }
void MagnusSeries::set_linear(int j, std::int64_t v) { c1_[idx(j, j) / static_cast<std::size_t>(m_ + 1)] = v; }
void MagnusSeries::set_quadratic(int j, int k, std::int64_t v) { c2_[idx(j, k)] = v; }

MagnusSeries MagnusSeries::operator*(const MagnusSeries& rhs) const {
  if (rhs.m_ != m_) throw InternalError("MagnusSeries: variable counts differ");
  MagnusSeries out(m_);
  out.c0_ = c0_ * rhs.c0_;
  const auto n = static_cast<std::size_t>(m_);
  for (std::size_t j = 0; j < n; ++j) out.c1_[j] = c0_ * rhs.c1_[j] + c1_[j] * rhs.c0_;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      out.c2_[j * n + k] = c0_ * rhs.c2_[j * n + k] + c2_[j * n + k] * rhs.c0_ + c1_[j] * rhs.c1_[k];
  return out;
}

MagnusSeries MagnusSeries::inverse() const {
  if (c0_ != 1) throw InternalError("MagnusSeries: only series with constant term 1 are inverted");
  // (1 + u)^-1 = 1 - u + u^2 in degree <= 2
  MagnusSeries out(m_);
  out.c0_ = 1;
  const auto n = static_cast<std::size_t>(m_);
  for (std::size_t j = 0; j < n; ++j) out.c1_[j] = -c1_[j];
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) out.c2_[j * n + k] = -c2_[j * n + k] + c1_[j] * c1_[k];
  return out;
}

MagnusSeries MagnusSeries::pow(int e) const {
  MagnusSeries base = e < 0 ? inverse() : *this;
  MagnusSeries out = one(m_);
  for (int k = 0; k < (e < 0 ? -e : e); ++k) out = out * base;
  return out;
}

std::string MagnusSeries::to_string() const {
  std::ostringstream out;
  out << c0_;
  for (int j = 1; j <= m_; ++j)
    if (linear(j)) out << (linear(j) < 0 ? " - " : " + ") << (linear(j) < 0 ? -linear(j) : linear(j)) << "*h" << j;
  for (int j = 1; j <= m_; ++j)
    for (int k = 1; k <= m_; ++k) {
      auto c = quadratic(j, k);
      if (c) out << (c < 0 ? " - " : " + ") << (c < 0 ? -c : c) << "*h" << j << "*h" << k;
    }
  return out.str();
}

}  // namespace lzero
