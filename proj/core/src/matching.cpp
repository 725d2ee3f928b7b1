#include "kuniv/matching.hpp"

#include <limits>
#include <queue>
#include <stdexcept>

namespace kuniv {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const MatchingInstance& inst)
      : g_(inst), match_l_(inst.left_size, kNone), match_r_(inst.right_size, kNone),
        dist_(inst.left_size), cursor_(inst.left_size) {}

  void run() {
    while (bfs()) {
      std::fill(cursor_.begin(), cursor_.end(), 0);
      for (std::size_t l = 0; l < g_.left_size; ++l) {
        if (match_l_[l] == kNone) augment(l);
      }
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t l = 0; l < g_.left_size; ++l) {
      if (match_l_[l] != kNone) out.emplace_back(l, match_l_[l]);
    }
    return out;
  }

 private:
  // Layers free left vertices at distance 0; true iff a free right vertex is reachable.
  bool bfs() {
    std::queue<std::size_t> q;
    for (std::size_t l = 0; l < g_.left_size; ++l) {
      dist_[l] = match_l_[l] == kNone ? 0 : kNone;
      if (dist_[l] == 0) q.push(l);
    }
    bool found = false;
    while (!q.empty()) {
      const std::size_t l = q.front();
      q.pop();
      for (std::size_t r : g_.adjacency[l]) {
        const std::size_t next = match_r_[r];
        if (next == kNone) {
          found = true;
        } else if (dist_[next] == kNone) {
          dist_[next] = dist_[l] + 1;
          q.push(next);
        }
      }
    }
    return found;
  }

  // Iterative DFS along the BFS layering.
  bool augment(std::size_t root) {
    std::vector<std::size_t> stack{root};
    std::vector<std::size_t> via;  // right vertex used to leave stack[i]
    while (!stack.empty()) {
      const std::size_t l = stack.back();
      const auto& adj = g_.adjacency[l];
      bool advanced = false;
      while (cursor_[l] < adj.size()) {
        const std::size_t r = adj[cursor_[l]++];
        const std::size_t next = match_r_[r];
        if (next == kNone) {
          via.push_back(r);
          for (std::size_t i = 0; i < stack.size(); ++i) {
            match_l_[stack[i]] = via[i];
            match_r_[via[i]] = stack[i];
          }
          return true;
        }
        if (dist_[next] == dist_[l] + 1) {
          via.push_back(r);
          stack.push_back(next);
          advanced = true;
          break;
        }
      }
      if (!advanced) {
        dist_[l] = kNone;
        stack.pop_back();
        if (!via.empty()) via.pop_back();
      }
    }
    return false;
  }

  const MatchingInstance& g_;
  std::vector<std::size_t> match_l_, match_r_, dist_, cursor_;
};

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> hopcroft_karp(const MatchingInstance& inst) {
  if (inst.adjacency.size() != inst.left_size) {
    throw std::invalid_argument("adjacency size differs from left_size");
  }
  for (const auto& adj : inst.adjacency) {
    for (std::size_t r : adj) {
      if (r >= inst.right_size) throw std::invalid_argument("right vertex out of range");
    }
  }
  HopcroftKarp hk(inst);
  hk.run();
  return hk.pairs();
}

}  // namespace kuniv
