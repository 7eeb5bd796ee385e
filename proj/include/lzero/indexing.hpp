#pragma once

#include <array>
#include <string>
#include <vector>

namespace lzero {

/// Pairs i<j of 1..m in lexicographic order: (1,2), (1,3), ..., (m-1,m).
std::vector<std::array<int, 2>> component_pairs(int m);
/// Triples i<j<k of 1..m in lexicographic order.
std::vector<std::array<int, 3>> component_triples(int m);

std::size_t choose2(int m);
std::size_t choose3(int m);

/// "(1,2)" / "(1,2,3)".
std::string index_label(const std::array<int, 2>& p);
std::string index_label(const std::array<int, 3>& t);

}  // namespace lzero
