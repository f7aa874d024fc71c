#pragma once

// Shortest-path extension machinery: bumping, the base-path map and the
// good-edge mapping between a walk and its base path.
//
// Move indices in an IndexSet are 1-based (index i names moves[i-1]); edge
// indices in a GoodEdgeMap are 0-based (edge j joins A_j and A_{j+1}).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "saw/error.hpp"
#include "saw/lattice.hpp"
#include "saw/rng.hpp"

namespace saw {

/// Sorted, duplicate-free 1-based move indices.
using IndexSet = std::vector<std::size_t>;

inline bool is_valid_index_set(const IndexSet& m, std::size_t len) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 1 || m[i] > len) return false;
    if (i > 0 && m[i] <= m[i - 1]) return false;
  }
  return true;
}

/// No two indices differ by exactly one.
inline bool is_non_adjacent(const IndexSet& m) {
  for (std::size_t i = 1; i < m.size(); ++i)
    if (m[i] - m[i - 1] == 1) return false;
  return true;
}

struct GoodEdgeMap {
  std::vector<std::size_t> target;  // base-path edge j -> walk edge target[j]

  friend bool operator==(const GoodEdgeMap&, const GoodEdgeMap&) = default;
};

inline bool is_monotone(const Walk& w) {
  return std::all_of(w.moves.begin(), w.moves.end(),
                     [](Direction d) { return d == Direction::R || d == Direction::U; });
}

/// Uniform monotone path from (0,0) to (n1,n2): a uniformly shuffled bag of
/// n1 R moves and n2 U moves.
inline Walk sample_shortest_path(RngStream& rng, std::size_t n1, std::size_t n2) {
  Walk w{{0, 0}, {}};
  w.moves.assign(n1, Direction::R);
  w.moves.insert(w.moves.end(), n2, Direction::U);
  for (std::size_t i = w.moves.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform_below(i));
    std::swap(w.moves[i - 1], w.moves[j]);
  }
  return w;
}

inline std::size_t straight_pair_count(const Walk& w) {
  std::size_t count = 0;
  for (std::size_t i = 1; i < w.moves.size(); ++i)
    if (w.moves[i] == w.moves[i - 1]) ++count;
  return count;
}

/// Number of corner points, counting the start and the end.
inline std::size_t corner_count(const Walk& w) {
  std::size_t turns = 0;
  for (std::size_t i = 1; i < w.moves.size(); ++i)
    if (w.moves[i] != w.moves[i - 1]) ++turns;
  return turns + 2;
}

/// Replaces each selected R by D,R,U and each selected U by L,U,R.
inline Walk bump(const Walk& w, const IndexSet& m) {
  if (!is_valid_index_set(m, w.length())) throw invalid_argument("bump: index out of range");
  Walk out{w.start, {}};
  out.moves.reserve(w.length() + 2 * m.size());
  std::size_t next = 0;
  for (std::size_t i = 0; i < w.moves.size(); ++i) {
    const Direction d = w.moves[i];
    if (next < m.size() && m[next] == i + 1) {
      ++next;
      if (d == Direction::R) {
        out.moves.insert(out.moves.end(), {Direction::D, Direction::R, Direction::U});
      } else if (d == Direction::U) {
        out.moves.insert(out.moves.end(), {Direction::L, Direction::U, Direction::R});
      } else {
        throw invalid_argument("bump: only R and U moves can be bumped");
      }
    } else {
      out.moves.push_back(d);
    }
  }
  return out;
}

/// Indices i >= 2 of a monotone path with moves_{i-1} == moves_i. Inside a
/// region other than Z^2, i is kept only if A_{i-1} and A_i are members that
/// are not on the region boundary.
inline IndexSet bumpable_indices(const Walk& w, const Region& region) {
  if (!is_monotone(w)) throw invalid_argument("bumpable_indices: walk is not monotone");
  const auto pts = points_of(w);
  auto interior = [&](Point p) { return region.contains(p) && !on_boundary(region, p); };
  IndexSet out;
  for (std::size_t i = 2; i <= w.moves.size(); ++i) {
    if (w.moves[i - 2] != w.moves[i - 1]) continue;
    if (!region.is_full() && !(interior(pts[i - 1]) && interior(pts[i]))) continue;
    out.push_back(i);
  }
  return out;
}

/// Replaces every L,U,R by U and every D,R,U by R, left to right.
inline Walk unbump(const Walk& w) {
  Walk out{w.start, {}};
  const auto& mv = w.moves;
  for (std::size_t i = 0; i < mv.size();) {
    const Direction d = mv[i];
    if (d == Direction::L || d == Direction::D) {
      const Direction mid = d == Direction::L ? Direction::U : Direction::R;
      const Direction last = d == Direction::L ? Direction::R : Direction::U;
      if (i + 2 >= mv.size() || mv[i + 1] != mid || mv[i + 2] != last)
        throw invalid_argument("unbump: not an unambiguous bump image");
      out.moves.push_back(mid);
      i += 3;
    } else {
      out.moves.push_back(d);
      ++i;
    }
  }
  return out;
}

namespace detail {

/// One piece of the base path: base edges [b_begin, b_end) are matched to
/// walk edges in [a_begin, a_end).
struct BaseSegment {
  std::size_t b_begin, b_end;
  std::size_t a_begin, a_end;
};

struct BaseDecomposition {
  Walk base;
  std::vector<BaseSegment> segments;
};

inline void append_moves(std::vector<Direction>& moves, Direction d, coord_t count) {
  moves.insert(moves.end(), static_cast<std::size_t>(count), d);
}

inline BaseDecomposition decompose(const Walk& a) {
  if (!is_self_avoiding(a)) throw invalid_argument("base_path: walk is not self-avoiding");
  const auto pts = points_of(a);
  const Point origin = pts.front();
  const Point target = pts.back();
  if (!dominated_by(origin, target)) throw invalid_argument("base_path: endpoint must dominate start");

  BaseDecomposition out{{origin, {}}, {}};
  auto& moves = out.base.moves;
  std::size_t idx = 0;
  Point r = origin;

  auto push_segment = [&](std::size_t b_from, std::size_t a_from, std::size_t a_to) {
    if (moves.size() > b_from) out.segments.push_back({b_from, moves.size(), a_from, a_to});
  };

  while (r != target) {
    const LatticeBox box(r, target);
    std::size_t j = idx + 1;
    while (!box.contains(pts[j])) ++j;
    const Point next = pts[j];
    const std::size_t b_from = moves.size();

    if (next != target) {
      // Shortest path along the box boundary from its lower-left corner.
      if (next.y == r.y) {
        append_moves(moves, Direction::R, next.x - r.x);
      } else if (next.x == r.x) {
        append_moves(moves, Direction::U, next.y - r.y);
      } else if (next.y == target.y) {
        append_moves(moves, Direction::U, target.y - r.y);
        append_moves(moves, Direction::R, next.x - r.x);
      } else if (next.x == target.x) {
        append_moves(moves, Direction::R, target.x - r.x);
        append_moves(moves, Direction::U, next.y - r.y);
      } else {
        throw error("base_path: re-entry point is interior to the box");
      }
      push_segment(b_from, idx, j);
      idx = j;
      r = next;
      continue;
    }

    if (r.x == target.x || r.y == target.y) {
      append_moves(moves, Direction::R, target.x - r.x);
      append_moves(moves, Direction::U, target.y - r.y);
      push_segment(b_from, idx, j);
    } else {
      // Corner rule: which of the lines y = n2, x = n1 the remaining walk meets first.
      std::size_t q = idx + 1;
      while (pts[q].y != target.y && pts[q].x != target.x) ++q;
      if (pts[q] == target) throw error("base_path: final piece meets neither line before the end");
      if (pts[q].y == target.y) {
        append_moves(moves, Direction::U, target.y - r.y);
        push_segment(b_from, idx, q);
        const std::size_t mid = moves.size();
        append_moves(moves, Direction::R, target.x - r.x);
        push_segment(mid, q, j);
      } else {
        append_moves(moves, Direction::R, target.x - r.x);
        push_segment(b_from, idx, q);
        const std::size_t mid = moves.size();
        append_moves(moves, Direction::U, target.y - r.y);
        push_segment(mid, q, j);
      }
    }
    break;
  }
  return out;
}

struct Reflection {
  bool flip_x = false;
  bool flip_y = false;
};

inline Direction reflect(Direction d, Reflection r) {
  if (r.flip_x && (d == Direction::L || d == Direction::R)) return reverse(d);
  if (r.flip_y && (d == Direction::U || d == Direction::D)) return reverse(d);
  return d;
}

/// Reflects the moves about the start point.
inline Walk reflect(const Walk& w, Reflection r) {
  Walk out{w.start, {}};
  out.moves.reserve(w.moves.size());
  for (Direction d : w.moves) out.moves.push_back(reflect(d, r));
  return out;
}

inline Reflection normalizing_reflection(const Walk& w) {
  const Point e = w.end();
  return {e.x < w.start.x, e.y < w.start.y};
}

}  // namespace detail

/// The base path of a self-avoiding walk whose end dominates its start.
inline Walk base_path(const Walk& w) { return detail::decompose(w).base; }

/// base_path for arbitrary endpoints: reflect into the first quadrant and back.
inline Walk base_path_any(const Walk& w) {
  const auto r = detail::normalizing_reflection(w);
  return detail::reflect(base_path(detail::reflect(w, r)), r);
}

/// Maps every base-path edge to the least super-parallel walk edge in its
/// segment that comes after the previous image.
inline GoodEdgeMap good_edge_map(const Walk& w) {
  const auto dec = detail::decompose(w);
  const auto a_pts = points_of(w);
  const auto b_pts = points_of(dec.base);
  GoodEdgeMap map;
  map.target.resize(dec.base.length());
  std::optional<std::size_t> previous;
  for (const auto& seg : dec.segments) {
    for (std::size_t j = seg.b_begin; j < seg.b_end; ++j) {
      const Direction d = dec.base.moves[j];
      const Point from = b_pts[j];
      std::size_t a = seg.a_begin;
      if (previous && *previous + 1 > a) a = *previous + 1;
      for (; a < seg.a_end; ++a) {
        if (w.moves[a] != d) continue;
        if (d == Direction::U ? a_pts[a].y == from.y : a_pts[a].x == from.x) break;
      }
      if (a >= seg.a_end) throw error("good_edge_map: no super-parallel edge available in segment");
      map.target[j] = a;
      previous = a;
    }
  }
  return map;
}

/// Checks injectivity, strict monotonicity and super-parallelism.
inline bool is_good_edge_mapping(const Walk& a, const Walk& b, const GoodEdgeMap& f) {
  if (f.target.size() != b.length()) return false;
  const auto a_pts = points_of(a);
  const auto b_pts = points_of(b);
  for (std::size_t j = 0; j < f.target.size(); ++j) {
    const std::size_t t = f.target[j];
    if (t >= a.length()) return false;
    if (j > 0 && t <= f.target[j - 1]) return false;
    const Direction d = b.moves[j];
    if (a.moves[t] != d) return false;
    if (d == Direction::U && a_pts[t].y != b_pts[j].y) return false;
    if (d == Direction::R && a_pts[t].x != b_pts[j].x) return false;
    if (d != Direction::U && d != Direction::R) return false;
  }
  return true;
}

/// Good forward edges (as 1-based move indices) whose single bump leaves a
/// self-avoiding walk inside the region; decided by direct simulation.
inline IndexSet bumpable_good_edges(const Walk& w, const Region& region) {
  const auto map = good_edge_map(w);
  IndexSet out;
  for (std::size_t edge : map.target) {
    const Walk bumped = bump(w, {edge + 1});
    if (!is_self_avoiding(bumped)) continue;
    const auto pts = points_of(bumped);
    if (!std::all_of(pts.begin(), pts.end(), [&](Point p) { return region.contains(p); })) continue;
    out.push_back(edge + 1);
  }
  return out;
}

}  // namespace saw
