#include "kuniv/counting.hpp"

#include <algorithm>
#include <deque>

#include "kuniv/errors.hpp"

namespace kuniv {

namespace {

void check_automaton(const Nfa& a, std::size_t k, CountSemantics semantics) {
  if (a.has_epsilon()) throw InputError("counting requires an epsilon-free automaton");
  if (k == 0) throw InputError("k must be at least 1");
  if (semantics == CountSemantics::Words && !a.is_deterministic()) {
    throw InputError("word counting requires a deterministic automaton; use path semantics");
  }
  if (a.alphabet().size() > kMaxCountLetters) {
    throw CapacityError("counting supports at most " + std::to_string(kMaxCountLetters) +
                        " letters");
  }
}

// One length layer of the tables.
struct Layer {
  std::vector<BigCount> t, sat, u;
};

class Engine {
 public:
  Engine(const Nfa& a, std::size_t k)
      : a_(a), n_(a.num_states()), k_(k), sigma_(a.alphabet().size()),
        full_((std::uint32_t{1} << sigma_) - 1) {}

  std::size_t layer_cells() const { return n_ * (k_ + 1) * (std::size_t{full_} + 1) + n_; }

  Layer blank() const {
    const std::size_t s = std::size_t{full_} + 1;
    return Layer{std::vector<BigCount>(n_ * k_ * s), std::vector<BigCount>(n_ * s),
                 std::vector<BigCount>(n_)};
  }

  Layer initial() const {
    Layer l = blank();
    l.t[t_index(a_.initial(), 0, 0)] = 1;
    return l;
  }

  std::size_t t_index(StateId q, std::size_t c, std::uint32_t r) const {
    return ((q * k_ + c) << sigma_) | r;
  }
  std::size_t sat_index(StateId q, std::uint32_t r) const { return (std::size_t{q} << sigma_) | r; }

  // Adds v paths at q whose label has arch state (c, r); c == k means saturated.
  void add(Layer& l, StateId q, std::size_t c, std::uint32_t r, const BigCount& v) const {
    if (c < k_) {
      l.t[t_index(q, c, r)] += v;
    } else {
      l.sat[sat_index(q, r)] += v;
      l.u[q] += v;
    }
  }

  Layer step(const Layer& prev) const {
    Layer next = blank();
    for (const Transition& tr : a_.transitions()) {
      const std::uint32_t bit = std::uint32_t{1} << (tr.label - 1);
      for (std::size_t c = 0; c < k_; ++c) {
        for (std::uint32_t r = 0; r < full_; ++r) {
          const BigCount& v = prev.t[t_index(tr.from, c, r)];
          if (v.is_zero()) continue;
          const std::uint32_t joined = r | bit;
          if (joined == full_) {
            add(next, tr.to, c + 1, 0, v);
          } else {
            next.t[t_index(tr.to, c, joined)] += v;
          }
        }
      }
      for (std::uint32_t r = 0; r < full_; ++r) {
        const BigCount& v = prev.sat[sat_index(tr.from, r)];
        if (v.is_zero()) continue;
        const std::uint32_t joined = r | bit;
        next.sat[sat_index(tr.to, joined == full_ ? 0 : joined)] += v;
      }
      if (!prev.u[tr.from].is_zero()) next.u[tr.to] += prev.u[tr.from];
    }
    return next;
  }

  BigCount accepted(const Layer& l, bool perfect) const {
    BigCount total = 0;
    for (StateId f : a_.finals()) total += perfect ? l.sat[sat_index(f, 0)] : l.u[f];
    return total;
  }

  std::uint32_t full() const { return full_; }

 private:
  const Nfa& a_;
  std::size_t n_, k_, sigma_;
  std::uint32_t full_;
};

void check_cells(std::size_t cells) {
  if (cells > kMaxTableCells) {
    throw CapacityError("counting table needs " + std::to_string(cells) + " cells, limit is " +
                        std::to_string(kMaxTableCells));
  }
}

// Saturating arch state of a word: (arches capped at k, rest bitmask).
struct ArchState {
  std::size_t c = 0;
  std::uint32_t r = 0;

  void push(Letter x, std::size_t k, std::uint32_t full) {
    r |= std::uint32_t{1} << (x - 1);
    if (r == full) {
      r = 0;
      c = std::min(c + 1, k);
    }
  }
};

// Counted words of length |w| below w, by injecting the prefix seeds into the
// layers at their lengths.
BigCount rank_exact(const Nfa& a, const Word& w, std::size_t k, bool perfect) {
  Engine e(a, k);
  check_cells(2 * e.layer_cells());
  const std::size_t n = a.num_states();
  std::vector<BigCount> reach(n);  // paths labelled w[1..i] ending at each state
  reach[a.initial()] = 1;
  ArchState prefix;
  Layer layer = e.blank();
  for (std::size_t i = 0; i < w.size(); ++i) {
    Layer next = i == 0 ? e.blank() : e.step(layer);
    for (Letter x = 1; x < w[i]; ++x) {
      ArchState s = prefix;
      s.push(x, k, e.full());
      for (const Transition& tr : a.transitions()) {
        if (tr.label == x && !reach[tr.from].is_zero()) e.add(next, tr.to, s.c, s.r, reach[tr.from]);
      }
    }
    std::vector<BigCount> moved(n);
    for (const Transition& tr : a.transitions()) {
      if (tr.label == w[i] && !reach[tr.from].is_zero()) moved[tr.to] += reach[tr.from];
    }
    reach = std::move(moved);
    prefix.push(w[i], k, e.full());
    layer = std::move(next);
  }
  return e.accepted(layer, perfect);
}

}  // namespace

const BigCount& PathTables::t(StateId q, std::size_t len, std::size_t arches,
                              std::uint32_t rest) const {
  const std::size_t s = std::size_t{1} << sigma_;
  if (q >= n_ || len > m_ || arches >= k_ || rest + 1 >= s) {
    throw InputError("path table index out of range");
  }
  return t_[((len * n_ + q) * k_ + arches) * s + rest];
}

const BigCount& PathTables::u(StateId q, std::size_t len) const {
  if (q >= n_ || len > m_) throw InputError("path table index out of range");
  return u_[len * n_ + q];
}

const BigCount& PathTables::sat(StateId q, std::size_t len, std::uint32_t rest) const {
  const std::size_t s = std::size_t{1} << sigma_;
  if (q >= n_ || len > m_ || rest + 1 >= s) throw InputError("path table index out of range");
  return sat_[(len * n_ + q) * s + rest];
}

PathTables build_tables(const Nfa& a, std::size_t m, std::size_t k) {
  check_automaton(a, k, CountSemantics::Paths);
  Engine e(a, k);
  check_cells((m + 1) * e.layer_cells());
  PathTables tables;
  tables.n_ = a.num_states();
  tables.m_ = m;
  tables.k_ = k;
  tables.sigma_ = a.alphabet().size();
  Layer layer = e.initial();
  for (std::size_t len = 0; len <= m; ++len) {
    if (len > 0) layer = e.step(layer);
    auto append = [](std::vector<BigCount>& dst, std::vector<BigCount>& src) {
      dst.insert(dst.end(), std::make_move_iterator(src.begin()),
                 std::make_move_iterator(src.end()));
    };
    Layer copy = layer;
    append(tables.t_, copy.t);
    append(tables.sat_, copy.sat);
    append(tables.u_, copy.u);
  }
  return tables;
}

BigCount count_exact(const Nfa& a, std::size_t m, std::size_t k, bool perfect,
                     CountSemantics semantics) {
  check_automaton(a, k, semantics);
  if (k * a.alphabet().size() > m) return 0;
  Engine e(a, k);
  check_cells(2 * e.layer_cells());
  Layer layer = e.initial();
  for (std::size_t len = 1; len <= m; ++len) layer = e.step(layer);
  return e.accepted(layer, perfect);
}

BigCount count_at_most(const Nfa& a, std::size_t m, std::size_t k, bool perfect,
                       CountSemantics semantics) {
  check_automaton(a, k, semantics);
  Engine e(a, k);
  check_cells(2 * e.layer_cells());
  BigCount total = 0;
  Layer layer = e.initial();
  for (std::size_t len = 0; len <= m; ++len) {
    if (len > 0) layer = e.step(layer);
    total += e.accepted(layer, perfect);
  }
  return total;
}

TotalCount count_total(const Nfa& a, std::size_t k, bool perfect, CountSemantics semantics) {
  check_automaton(a, k, semantics);
  const std::size_t sigma = a.alphabet().size();
  const std::uint32_t full = (std::uint32_t{1} << sigma) - 1;
  const std::size_t rests = std::size_t{full} + 1;
  const std::size_t levels = k + 1;
  check_cells(a.num_states() * levels * rests);

  // Product states (q, c, r) with c in [0, k]; at c = k the rest is kept only
  // for perfect counting.
  auto id = [&](StateId q, std::size_t c, std::uint32_t r) { return (q * levels + c) * rests + r; };
  const std::size_t total_ids = a.num_states() * levels * rests;
  std::vector<char> seen(total_ids, 0);
  std::vector<std::vector<std::size_t>> succ(total_ids), pred(total_ids);
  std::deque<std::tuple<StateId, std::size_t, std::uint32_t>> queue;
  const std::size_t start = id(a.initial(), 0, 0);
  seen[start] = 1;
  queue.emplace_back(a.initial(), 0, 0);
  std::vector<std::size_t> accepting;
  while (!queue.empty()) {
    const auto [q, c, r] = queue.front();
    queue.pop_front();
    const std::size_t from = id(q, c, r);
    if (a.is_final(q) && c == k && (!perfect || r == 0)) accepting.push_back(from);
    for (const Transition& tr : a.out_edges(q)) {
      ArchState s{c, r};
      s.push(tr.label, k, full);
      if (s.c == k && !perfect) s.r = 0;
      const std::size_t to = id(tr.to, s.c, s.r);
      succ[from].push_back(to);
      pred[to].push_back(from);
      if (!seen[to]) {
        seen[to] = 1;
        queue.emplace_back(tr.to, s.c, s.r);
      }
    }
  }
  // Keep co-accessible states only.
  std::vector<char> useful(total_ids, 0);
  std::vector<std::size_t> stack(accepting);
  for (std::size_t s : accepting) useful[s] = 1;
  while (!stack.empty()) {
    const std::size_t s = stack.back();
    stack.pop_back();
    for (std::size_t p : pred[s]) {
      if (!useful[p]) {
        useful[p] = 1;
        stack.push_back(p);
      }
    }
  }
  if (!useful[start]) return BigCount(0);

  // Kahn's algorithm on the trimmed product; leftover states lie on a cycle.
  std::vector<std::size_t> indegree(total_ids, 0), order;
  std::size_t live = 0;
  for (std::size_t s = 0; s < total_ids; ++s) {
    if (!useful[s]) continue;
    ++live;
    for (std::size_t t : succ[s]) indegree[t] += useful[t];
  }
  for (std::size_t s = 0; s < total_ids; ++s) {
    if (useful[s] && indegree[s] == 0) order.push_back(s);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t t : succ[order[i]]) {
      if (useful[t] && --indegree[t] == 0) order.push_back(t);
    }
  }
  if (order.size() != live) return Infinite{};

  std::vector<BigCount> paths(total_ids);
  paths[start] = 1;
  for (std::size_t s : order) {
    if (paths[s].is_zero()) continue;
    for (std::size_t t : succ[s]) {
      if (useful[t]) paths[t] += paths[s];
    }
  }
  BigCount total = 0;
  for (std::size_t s : accepting) total += paths[s];
  return total;
}

BigCount rank(const Nfa& a, const Word& w, std::size_t k, RankMode mode, bool perfect,
              CountSemantics semantics) {
  check_automaton(a, k, semantics);
  if (!(w.alphabet() == a.alphabet())) throw InputError("word and automaton use different alphabets");
  if (mode == RankMode::Total && std::holds_alternative<Infinite>(count_total(a, k, perfect, semantics))) {
    throw InputError("total rank is undefined: infinitely many counted words");
  }
  BigCount result = rank_exact(a, w, k, perfect);
  if (mode != RankMode::Exact && !w.empty()) {
    result += count_at_most(a, w.size() - 1, k, perfect, semantics);
  }
  return result;
}

std::vector<Word> prefix_set(const Word& w) {
  std::vector<Word> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (Letter x = 1; x < w[i]; ++x) {
      Word p = w.factor(0, i);
      p.push_back(x);
      out.push_back(std::move(p));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kuniv
