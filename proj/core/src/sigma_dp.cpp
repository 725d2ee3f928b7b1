#include "kuniv/sigma_dp.hpp"

#include <algorithm>

#include "kuniv/errors.hpp"

namespace kuniv {

std::int32_t SigmaDpTable::at(std::size_t component, std::uint32_t rest_mask) const {
  const Row& r = rows_[component];
  auto it = std::lower_bound(r.begin(), r.end(), rest_mask,
                             [](const auto& cell, std::uint32_t m) { return cell.first < m; });
  return it != r.end() && it->first == rest_mask ? it->second : -1;
}

SigmaDpTable build_sigma_table(const NormalizedNfa& nfa, const SccDecomposition& d) {
  const std::size_t sigma = nfa.alphabet().size();
  if (sigma > kMaxSigmaDpLetters) {
    throw CapacityError("sigma algorithm supports at most " + std::to_string(kMaxSigmaDpLetters) +
                        " letters");
  }
  if (has_unbounded_universality(d, nfa.alphabet())) {
    throw InputError("sigma table requires bounded universality");
  }
  const std::uint32_t full = (std::uint32_t{1} << sigma) - 1;
  const std::size_t e = d.num_components();

  std::vector<std::uint32_t> v_masks(e);
  for (ComponentId c = 0; c < e; ++c) v_masks[c] = static_cast<std::uint32_t>(d.v_set(c).to_mask());

  SigmaDpTable table;
  table.rows_.resize(e);
  const ComponentId start = d.component_of(nfa.nfa().initial());
  table.rows_[start].emplace_back(v_masks[start], 0);

  // Dense scratch row, reset through the touched list after each component.
  std::vector<std::int32_t> scratch(std::size_t{full} + 1, -1);
  std::vector<std::uint32_t> touched;
  auto relax = [&](std::uint32_t mask, std::int32_t value) {
    if (scratch[mask] < 0) touched.push_back(mask);
    scratch[mask] = std::max(scratch[mask], value);
  };

  for (ComponentId i = start + 1; i < e; ++i) {
    const std::uint32_t vi = v_masks[i];
    for (const CrossEdge& in : d.incoming(i)) {
      const auto& source = table.rows_[in.from];
      if (source.empty()) continue;
      std::vector<std::uint32_t> label_bits;
      if (in.labels.epsilon) label_bits.push_back(0);
      for (Letter a : in.labels.letters.letters()) label_bits.push_back(std::uint32_t{1} << (a - 1));
      for (const auto& [rest, value] : source) {
        for (std::uint32_t bit : label_bits) {
          const std::uint32_t joined = rest | bit | vi;
          if (joined == full) {
            relax(vi, value + 1);
          } else {
            relax(joined, value);
          }
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    auto& row = table.rows_[i];
    row.reserve(touched.size());
    for (std::uint32_t mask : touched) {
      row.emplace_back(mask, scratch[mask]);
      scratch[mask] = -1;
    }
    touched.clear();
  }
  return table;
}

MaxIndex max_universality_sigma(const NormalizedNfa& nfa, const SccDecomposition& d) {
  if (has_unbounded_universality(d, nfa.alphabet())) return MaxIndex::unbounded();
  const SigmaDpTable table = build_sigma_table(nfa, d);
  const auto& last = table.row(d.component_of(nfa.final_state()));
  std::int32_t best = -1;
  for (const auto& cell : last) best = std::max(best, cell.second);
  // The final state is reachable, so its row is never empty.
  return MaxIndex::finite(static_cast<std::size_t>(std::max(best, 0)));
}

MaxIndex max_universality_sigma(const NormalizedNfa& nfa) {
  return max_universality_sigma(nfa, decompose(nfa));
}

bool k_esu_sigma(const NormalizedNfa& nfa, std::size_t k) {
  return max_universality_sigma(nfa).reaches(k);
}

}  // namespace kuniv
