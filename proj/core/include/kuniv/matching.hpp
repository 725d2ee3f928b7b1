#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace kuniv {

// Bipartite graph with left vertices [0, left_size) and right vertices
// [0, right_size); adjacency[l] lists the right neighbours of l.
struct MatchingInstance {
  std::size_t left_size = 0;
  std::size_t right_size = 0;
  std::vector<std::vector<std::size_t>> adjacency;
};

// Maximum-cardinality matching as (left, right) pairs sorted by left vertex.
std::vector<std::pair<std::size_t, std::size_t>> hopcroft_karp(const MatchingInstance& inst);

}  // namespace kuniv
