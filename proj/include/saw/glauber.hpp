#pragma once

// Single-cell-flip chain on Ω: pick a cell uniformly, flip its class, and
// move if the result is still a connected partition within the budget;
// otherwise stay. The transition matrix is symmetric, so the uniform law on
// Ω is stationary.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "saw/aztec.hpp"
#include "saw/error.hpp"
#include "saw/oracle.hpp"
#include "saw/rng.hpp"

namespace saw {

struct ChainState {
  Partition partition;
  std::uint64_t steps = 0;
  RngStream rng;
};

/// The partition with cell v moved to the other class, if that is in Ω.
inline std::optional<Partition> flip_cell(const Partition& p, std::size_t v, const OmegaParams& params) {
  const auto& g = aztec_geometry(p.k);
  const std::uint8_t own = p.label[v];
  bool touches_other = false;
  for (Direction d : kDirections) {
    const std::int32_t j = g.neighbor(v, d);
    if (j >= 0 && p.label[static_cast<std::size_t>(j)] != own) touches_other = true;
  }
  if (!touches_other) return std::nullopt;  // v would be cut off from its new class
  std::vector<std::uint8_t> label = p.label;
  label[v] = static_cast<std::uint8_t>(3 - own);
  if (label[g.anchor()] == 2)
    for (auto& c : label) c = static_cast<std::uint8_t>(3 - c);
  if (!detail::class_connected(g, label, 1) || !detail::class_connected(g, label, 2)) return std::nullopt;
  Partition q{p.k, std::move(label), 0, 0};
  q.boundary1 = detail::class_boundary(g, q.label, 1);
  q.boundary2 = detail::class_boundary(g, q.label, 2);
  const auto budget = params.budget(p.k);
  if (q.boundary1 > budget || q.boundary2 > budget) return std::nullopt;
  return q;
}

/// One chain step; returns true if the state moved.
inline bool glauber_step(ChainState& state, const OmegaParams& params) {
  const auto n = aztec_geometry(state.partition.k).dual_count();
  const auto v = static_cast<std::size_t>(state.rng.uniform_below(n));
  ++state.steps;
  auto next = flip_cell(state.partition, v, params);
  if (!next) return false;
  state.partition = std::move(*next);
  return true;
}

inline EnumerationResult<Partition> enumerate_omega(int k, const OmegaParams& params) {
  return enumerate_partitions(k, params);
}

/// Diagonal staircase cut from (-floor(k/2), -ceil(k/2)) to (ceil(k/2), floor(k/2)).
inline Partition staircase_start(int k) {
  const coord_t a = k / 2;
  Walk w{{-a, -(k - a)}, {}};
  for (int i = 0; i < k; ++i) {
    w.moves.push_back(Direction::U);
    w.moves.push_back(Direction::R);
  }
  return path_to_partition(k, w);
}

/// Endpoints of the interface walk satisfy x1 <= x2 and y1 <= y2. Partitions
/// cut by a closed curve have no endpoints and are never in this set.
inline bool endpoints_ordered(const Partition& p) {
  Walk w;
  try {
    w = partition_to_path(p);
  } catch (const invalid_argument&) {
    return false;
  }
  const Point a = w.start, b = w.end();
  return a.x <= b.x && a.y <= b.y;
}

/// Ω with its flip graph.
struct OmegaGraph {
  int k = 0;
  std::size_t cells = 0;  // proposal denominator
  std::vector<Partition> states;
  std::vector<std::vector<std::uint32_t>> neighbors;  // one entry per accepted flip
};

inline OmegaGraph build_omega_graph(int k, const OmegaParams& params) {
  OmegaGraph graph;
  graph.k = k;
  graph.cells = aztec_geometry(k).dual_count();
  graph.states = enumerate_omega(k, params).items;
  std::map<Partition, std::uint32_t> index;
  for (std::size_t i = 0; i < graph.states.size(); ++i) index.emplace(graph.states[i], static_cast<std::uint32_t>(i));
  graph.neighbors.resize(graph.states.size());
  for (std::size_t i = 0; i < graph.states.size(); ++i)
    for (std::size_t v = 0; v < graph.cells; ++v)
      if (auto q = flip_cell(graph.states[i], v, params)) {
        auto it = index.find(*q);
        if (it == index.end()) throw error("flip left the enumerated state space");
        graph.neighbors[i].push_back(it->second);
      }
  return graph;
}

/// P(x,y) * cells for every pair; symmetric iff the chain is reversible w.r.t. uniform.
inline bool transition_matrix_symmetric(const OmegaGraph& g) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> count;
  for (std::uint32_t i = 0; i < g.neighbors.size(); ++i)
    for (std::uint32_t j : g.neighbors[i]) ++count[{i, j}];
  for (const auto& [key, c] : count) {
    auto it = count.find({key.second, key.first});
    if (it == count.end() || it->second != c) return false;
  }
  return true;
}

struct CutReport {
  std::size_t cut_size = 0;   // |S| after the pi(S) <= 1/2 rule
  std::size_t omega_size = 0;
  bool complemented = false;
  mpq_class pi;      // pi(S)
  mpq_class flow;    // Q(S, S-bar)
  mpq_class ratio;   // flow / pi
  std::optional<mpq_class> mixing_lower_bound;  // 1 / (4 ratio); none when ratio = 0
};

inline CutReport conductance_of_cut(const OmegaGraph& g, const std::function<bool(const Partition&)>& cut) {
  const std::size_t m = g.states.size();
  std::vector<char> in(m, 0);
  std::size_t size = 0;
  for (std::size_t i = 0; i < m; ++i) size += (in[i] = cut(g.states[i]) ? 1 : 0);
  CutReport r;
  r.omega_size = m;
  if (2 * size > m) {
    r.complemented = true;
    for (auto& c : in) c = !c;
    size = m - size;
  }
  if (size == 0) throw invalid_argument("cut selects an empty set");
  std::size_t crossing = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (in[i])
      for (std::uint32_t j : g.neighbors[i]) crossing += in[j] ? 0 : 1;
  r.cut_size = size;
  r.pi = mpq_class(static_cast<unsigned long>(size), static_cast<unsigned long>(m));
  r.pi.canonicalize();
  r.flow = mpq_class(static_cast<unsigned long>(crossing), static_cast<unsigned long>(m) * g.cells);
  r.flow.canonicalize();
  r.ratio = r.flow / r.pi;
  if (r.ratio != 0) r.mixing_lower_bound = 1 / (4 * r.ratio);
  return r;
}

inline CutReport conductance_of_cut(int k, const OmegaParams& params, const std::function<bool(const Partition&)>& cut) {
  return conductance_of_cut(build_omega_graph(k, params), cut);
}

/// Communicating classes of the flip chain (connected components, since
/// moves are symmetric), largest first.
inline std::vector<std::vector<std::uint32_t>> communicating_classes(const OmegaGraph& g) {
  const std::size_t m = g.states.size();
  std::vector<char> seen(m, 0);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t s = 0; s < m; ++s) {
    if (seen[s]) continue;
    std::vector<std::uint32_t> members{s}, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      for (auto y : g.neighbors[x])
        if (!seen[y]) {
          seen[y] = 1;
          members.push_back(y);
          stack.push_back(y);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return out;
}

/// The chain restricted to a union of communicating classes.
inline OmegaGraph restrict_graph(const OmegaGraph& g, const std::vector<std::uint32_t>& keep) {
  std::vector<std::int64_t> index(g.states.size(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<std::int64_t>(i);
  OmegaGraph r;
  r.k = g.k;
  r.cells = g.cells;
  for (auto x : keep) {
    r.states.push_back(g.states[x]);
    std::vector<std::uint32_t> nb;
    for (auto y : g.neighbors[x]) {
      if (index[y] < 0) throw invalid_argument("kept states are not closed under moves");
      nb.push_back(static_cast<std::uint32_t>(index[y]));
    }
    r.neighbors.push_back(std::move(nb));
  }
  return r;
}

/// Smallest t with max_x TV(P^t(x,.), uniform) <= 1/4, by exact integer
/// arithmetic on A^t where P = A / cells; nullopt if not reached by max_t.
/// A reducible chain never mixes and gives nullopt at once.
inline std::optional<std::uint64_t> exact_mixing_time(const OmegaGraph& g, std::uint64_t max_t) {
  const std::size_t m = g.states.size();
  if (m == 0) throw invalid_argument("empty state space");
  if (m == 1) return 0;
  if (communicating_classes(g).size() > 1) return std::nullopt;
  const mpz_class big_m = static_cast<unsigned long>(m);
  std::vector<std::vector<mpz_class>> rows(m, std::vector<mpz_class>(m, 0));
  for (std::size_t x = 0; x < m; ++x) rows[x][x] = 1;
  mpz_class scale = 1;  // cells^t
  std::vector<mpz_class> next(m);
  for (std::uint64_t t = 0; t <= max_t; ++t) {
    bool mixed = true;
    for (std::size_t x = 0; x < m && mixed; ++x) {
      mpz_class dev = 0;
      for (std::size_t y = 0; y < m; ++y) dev += abs(big_m * rows[x][y] - scale);
      mixed = 2 * dev <= big_m * scale;
    }
    if (mixed) return t;
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        const auto stay = static_cast<unsigned long>(g.cells - g.neighbors[y].size());
        next[y] = rows[x][y] * stay;
      }
      for (std::size_t y = 0; y < m; ++y)
        for (std::uint32_t z : g.neighbors[y]) next[z] += rows[x][y];
      std::swap(rows[x], next);
    }
    scale *= static_cast<unsigned long>(g.cells);
  }
  return std::nullopt;
}

struct TraceRow {
  std::uint64_t step = 0;
  std::optional<Point> from, to;  // interface endpoints; absent for closed cuts
  bool in_s = false;
  std::size_t boundary1 = 0, boundary2 = 0;
};

struct ChainTrace {
  std::vector<TraceRow> rows;
  std::uint64_t accepted = 0;
  std::uint64_t crossings = 0;  // changes of membership in the ordered-endpoint set
};

/// Runs the chain, recording a row every `record_every` steps (and the start).
inline ChainTrace run_chain(const Partition& start, const OmegaParams& params, std::uint64_t steps, RngStream rng,
                            std::uint64_t record_every = 1) {
  if (!is_valid_partition(start) || !in_omega(start, params)) throw invalid_argument("start state is not in Omega");
  ChainState state{start, 0, std::move(rng)};
  ChainTrace trace;
  auto observe = [&]() {
    TraceRow row;
    row.step = state.steps;
    row.boundary1 = state.partition.boundary1;
    row.boundary2 = state.partition.boundary2;
    try {
      const Walk w = partition_to_path(state.partition);
      row.from = w.start;
      row.to = w.end();
      row.in_s = row.from->x <= row.to->x && row.from->y <= row.to->y;
    } catch (const invalid_argument&) {
    }
    return row;
  };
  TraceRow current = observe();
  trace.rows.push_back(current);
  for (std::uint64_t i = 0; i < steps; ++i) {
    if (glauber_step(state, params)) {
      ++trace.accepted;
      const bool was = current.in_s;
      current = observe();
      if (current.in_s != was) ++trace.crossings;
    }
    current.step = state.steps;
    if (record_every && state.steps % record_every == 0) trace.rows.push_back(current);
  }
  return trace;
}

}  // namespace saw
