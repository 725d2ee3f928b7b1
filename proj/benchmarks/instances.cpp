#include "instances.hpp"

#include <algorithm>
#include <random>
#include <variant>

namespace kuniv::bench {

NormalizedNfa layered(std::size_t n, std::size_t sigma, std::size_t edges, std::size_t width,
                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Letter> letter(1, static_cast<Letter>(sigma));
  const std::size_t clusters = n / width;
  std::vector<Transition> t;
  for (std::size_t cl = 0; cl + 1 < clusters; ++cl) {
    t.push_back({static_cast<StateId>(cl * width), letter(rng), static_cast<StateId>((cl + 1) * width)});
  }
  while (t.size() < edges) {
    const std::size_t cl = rng() % clusters;
    const auto from = static_cast<StateId>(cl * width + rng() % width);
    if (rng() % 3 == 0) {
      const auto banned = static_cast<Letter>(1 + cl % sigma);
      Letter a = letter(rng);
      if (a == banned) a = static_cast<Letter>(a % sigma + 1);
      t.push_back({from, a, static_cast<StateId>(cl * width + rng() % width)});
    } else if (cl + 1 < clusters) {
      const std::size_t to = cl + 1 + rng() % std::min<std::size_t>(8, clusters - cl - 1);
      t.push_back({from, letter(rng), static_cast<StateId>(to * width + rng() % width)});
    }
  }
  const Nfa a(Alphabet(sigma), clusters * width, 0, {static_cast<StateId>(clusters * width - 1)},
              std::move(t));
  return std::get<NormalizedNfa>(normalize(a));
}

Nfa complete_dfa(std::size_t n, std::size_t sigma, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Transition> t;
  std::vector<StateId> finals;
  for (std::size_t q = 0; q < n; ++q) {
    if (rng() % 2 == 0 || q + 1 == n) finals.push_back(static_cast<StateId>(q));
    for (Letter a = 1; a <= sigma; ++a) {
      t.push_back({static_cast<StateId>(q), a, static_cast<StateId>(rng() % n)});
    }
  }
  return Nfa(Alphabet(sigma), n, 0, std::move(finals), std::move(t));
}

}  // namespace kuniv::bench
