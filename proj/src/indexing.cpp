#include "lzero/indexing.hpp"

namespace lzero {

std::vector<std::array<int, 2>> component_pairs(int m) {
  std::vector<std::array<int, 2>> out;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) out.push_back({i, j});
  return out;
}

std::vector<std::array<int, 3>> component_triples(int m) {
  std::vector<std::array<int, 3>> out;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      for (int k = j + 1; k <= m; ++k) out.push_back({i, j, k});
  return out;
}

std::size_t choose2(int m) { return m < 2 ? 0 : static_cast<std::size_t>(m) * static_cast<std::size_t>(m - 1) / 2; }

std::size_t choose3(int m) {
  return m < 3 ? 0 : static_cast<std::size_t>(m) * static_cast<std::size_t>(m - 1) * static_cast<std::size_t>(m - 2) / 6;
}

std::string index_label(const std::array<int, 2>& p) {
  return "(" + std::to_string(p[0]) + "," + std::to_string(p[1]) + ")";
}

std::string index_label(const std::array<int, 3>& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + ")";
}

}  // namespace lzero
