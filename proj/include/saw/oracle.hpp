#pragma once

// Brute-force ground truth. Depth-first search always tries U, R, D, L in
// that order, so outputs are deterministic.

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "saw/aztec.hpp"
#include "saw/error.hpp"
#include "saw/lattice.hpp"

namespace saw {

inline constexpr std::size_t kDefaultEnumerationCap = 16;
inline constexpr int kPartitionEnumerationCap = 4;

template <typename T>
struct EnumerationResult {
  std::string instance;
  std::vector<T> items;

  std::size_t count() const noexcept { return items.size(); }
};

namespace detail {

enum class WalkRule { any, self_avoiding, low_girth };

inline EnumerationResult<Walk> enumerate(const Region& region, Point o, Point p, std::size_t length, WalkRule rule,
                                         int l, std::size_t cap, std::string instance) {
  if (length > cap) throw cap_exceeded("enumeration length " + std::to_string(length) + " exceeds cap " + std::to_string(cap));
  EnumerationResult<Walk> out{std::move(instance), {}};
  if (!region.contains(o) || !region.contains(p)) return out;
  const std::size_t gap = rule == WalkRule::low_girth ? static_cast<std::size_t>(2 * l) : length;
  std::vector<Point> pts{o};
  std::vector<Direction> moves;
  auto rec = [&](auto&& self) -> void {
    const Point q = pts.back();
    const std::size_t left = length - moves.size();
    if (static_cast<std::size_t>(l1_distance(q, p)) > left) return;
    if (left == 0) {
      if (q == p) out.items.push_back({o, moves});
      return;
    }
    for (Direction d : kDirections) {
      const Point r = step(q, d);
      if (!region.contains(r)) continue;
      if (rule != WalkRule::any) {
        // a revisit after s steps closes a cycle of length s
        bool bad = false;
        const std::size_t lookback = std::min(gap, pts.size());
        for (std::size_t s = 1; s <= lookback && !bad; ++s) bad = pts[pts.size() - s] == r;
        if (bad) continue;
      }
      pts.push_back(r);
      moves.push_back(d);
      self(self);
      pts.pop_back();
      moves.pop_back();
    }
  };
  rec(rec);
  return out;
}

inline std::string instance_name(const char* kind, Point o, Point p, std::size_t length) {
  return std::string(kind) + " " + to_string(o) + "->" + to_string(p) + " len " + std::to_string(length);
}

}  // namespace detail

inline EnumerationResult<Walk> enumerate_saws(const Region& region, Point o, Point p, std::size_t length,
                                              std::size_t cap = kDefaultEnumerationCap) {
  return detail::enumerate(region, o, p, length, detail::WalkRule::self_avoiding, 0, cap,
                           detail::instance_name("saw", o, p, length));
}

/// Walks in which no point recurs within 2l steps.
inline EnumerationResult<Walk> enumerate_low_girth_walks(const Region& region, Point o, Point p, std::size_t length,
                                                         int l, std::size_t cap = kDefaultEnumerationCap) {
  if (l < 1) throw invalid_argument("girth parameter l must be >= 1");
  return detail::enumerate(region, o, p, length, detail::WalkRule::low_girth, l, cap,
                           detail::instance_name("lowgirth", o, p, length) + " l " + std::to_string(l));
}

inline EnumerationResult<Walk> enumerate_walks(Point o, Point p, std::size_t length,
                                               std::size_t cap = kDefaultEnumerationCap) {
  return detail::enumerate(Region::full(), o, p, length, detail::WalkRule::any, 0, cap,
                           detail::instance_name("walks", o, p, length));
}

/// Every connected two-class partition of the order-k diamond by subset
/// search over the cells (anchor fixed in class 1); k <= 3.
inline EnumerationResult<Partition> enumerate_partitions_by_subsets(int k, const OmegaParams& params) {
  if (k < 1 || k > 3) throw cap_exceeded("subset enumeration supports 1 <= k <= 3");
  const auto& g = aztec_geometry(k);
  const std::size_t n = g.dual_count();
  const std::uint64_t budget = params.budget(k);
  std::vector<std::uint32_t> nb(n, 0);
  std::vector<std::uint32_t> outside(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (Direction d : kDirections) {
      const std::int32_t j = g.neighbor(i, d);
      if (j < 0) {
        ++outside[i];
      } else {
        nb[i] |= std::uint32_t{1} << j;
      }
    }
  const std::uint32_t all = n == 32 ? ~0u : (std::uint32_t{1} << n) - 1;
  auto connected = [&](std::uint32_t set) {
    std::uint32_t seen = set & (~set + 1);
    for (;;) {
      std::uint32_t grow = seen;
      for (std::uint32_t rest = seen; rest; rest &= rest - 1) grow |= nb[static_cast<std::size_t>(std::countr_zero(rest))];
      grow &= set;
      if (grow == seen) return seen == set;
      seen = grow;
    }
  };
  auto boundary = [&](std::uint32_t set) {
    std::uint64_t b = 0;
    for (std::uint32_t rest = set; rest; rest &= rest - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(rest));
      b += outside[i] + static_cast<std::uint64_t>(std::popcount(nb[i] & ~set));
    }
    return b;
  };
  EnumerationResult<Partition> out{"partitions k " + std::to_string(k) + " budget " + std::to_string(budget), {}};
  const std::uint64_t free_bits = n - 1;  // the anchor is bit 0
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << free_bits); ++m) {
    const auto s1 = static_cast<std::uint32_t>((m << 1) | 1u);
    const std::uint32_t s2 = all & ~s1;
    if (s2 == 0) continue;
    if (boundary(s1) > budget || boundary(s2) > budget) continue;
    if (!connected(s1) || !connected(s2)) continue;
    std::vector<std::uint8_t> label(n);
    for (std::size_t i = 0; i < n; ++i) label[i] = (s1 >> i) & 1u ? 1 : 2;
    out.items.push_back(make_partition(k, std::move(label)));
  }
  std::sort(out.items.begin(), out.items.end());
  return out;
}

/// Same set via planar duality: a connected two-class split is a simple
/// cycle in the graph of interior primal points plus one node for the whole
/// boundary. Those are boundary-to-boundary walks through interior points
/// (both ends may be the same boundary point), and cycles of interior points.
inline EnumerationResult<Partition> enumerate_partitions_by_cuts(int k, const OmegaParams& params) {
  if (k < 1 || k > kPartitionEnumerationCap) throw cap_exceeded("partition enumeration supports k <= " + std::to_string(kPartitionEnumerationCap));
  const auto& g = aztec_geometry(k);
  const auto budget = static_cast<std::int64_t>(params.budget(k));
  auto depth = [k](Point q) { return k - std::abs(q.x) - std::abs(q.y); };  // 0 on the boundary
  std::map<Partition, bool> found;
  auto accept = [&](const std::vector<std::pair<Point, Point>>& edges) {
    Partition p = partition_from_cut(k, edges);
    if (in_omega(p, params)) found.emplace(std::move(p), true);
  };

  // Boundary-to-boundary walks. Classes get t + 2d and t + 8k - 2d edges, so t <= budget - 4k.
  const std::int64_t max_path = budget - 4 * k;
  std::vector<Point> pts;
  std::vector<std::pair<Point, Point>> edges;
  PointSet on_path;
  auto walk = [&](auto&& self) -> void {
    const Point q = pts.back();
    for (Direction d : kDirections) {
      const Point r = step(q, d);
      if (!g.primal().contains(r)) continue;
      if (r == pts.front() && edges.size() >= 3) {
        // loop that touches the boundary only at its start
        edges.emplace_back(q, r);
        accept(edges);
        edges.pop_back();
        continue;
      }
      if (on_path.count(r)) continue;
      edges.emplace_back(q, r);
      if (depth(r) == 0) {
        if (pts.front() < r) accept(edges);
      } else if (static_cast<std::int64_t>(edges.size()) + depth(r) <= max_path) {
        pts.push_back(r);
        on_path.insert(r);
        self(self);
        on_path.erase(r);
        pts.pop_back();
      }
      edges.pop_back();
    }
  };
  if (max_path >= 1) {
    for (Point b : g.boundary_cycle()) {
      pts = {b};
      on_path = {b};
      walk(walk);
    }
  }

  // Interior cycles: the inner class has t boundary edges, the outer one 8k + t.
  const std::int64_t max_cycle = budget - 8 * k;
  if (max_cycle >= 4) {
    std::vector<Point> interior;
    for (Point q : g.primal().vertices())
      if (depth(q) > 0) interior.push_back(q);
    for (Point s : interior) {
      pts = {s};
      on_path = {s};
      edges.clear();
      auto cyc = [&](auto&& self) -> void {
        const Point q = pts.back();
        for (Direction d : kDirections) {
          const Point r = step(q, d);
          if (depth(r) <= 0 || r < s) continue;
          if (r == s && pts.size() >= 4) {
            // each cycle is seen in two directions; keep one
            if (pts[1] < q) {
              edges.emplace_back(q, r);
              accept(edges);
              edges.pop_back();
            }
            continue;
          }
          if (on_path.count(r) || static_cast<std::int64_t>(edges.size()) + 1 + l1_distance(r, s) > max_cycle) continue;
          edges.emplace_back(q, r);
          pts.push_back(r);
          on_path.insert(r);
          self(self);
          on_path.erase(r);
          pts.pop_back();
          edges.pop_back();
        }
      };
      cyc(cyc);
    }
  }

  EnumerationResult<Partition> out{"partitions k " + std::to_string(k) + " budget " + std::to_string(budget), {}};
  for (auto& [p, unused] : found) out.items.push_back(p);
  return out;
}

/// Ω for k <= 4: subset search up to k = 3, duality beyond.
inline EnumerationResult<Partition> enumerate_partitions(int k, const OmegaParams& params) {
  if (k < 1 || k > kPartitionEnumerationCap) throw cap_exceeded("partition enumeration supports k <= " + std::to_string(kPartitionEnumerationCap));
  return k <= 3 ? enumerate_partitions_by_subsets(k, params) : enumerate_partitions_by_cuts(k, params);
}

struct UniformityReport {
  std::size_t samples = 0;
  std::size_t support = 0;
  std::vector<std::size_t> counts;  // aligned with the support order
  double max_sigma = 0;             // max |p_hat - p| / sqrt(p(1-p)/N)
  double chi_square = 0;
  std::size_t dof = 0;
  double p_value = 1;
};

/// Frequencies of `samples` against the uniform law on `support`. A sample
/// outside the support is a hard error.
template <typename T, typename Less = std::less<T>>
UniformityReport uniformity_test(const std::vector<T>& samples, const std::vector<T>& support) {
  if (support.empty()) throw invalid_argument("uniformity test needs a nonempty support");
  std::map<T, std::size_t, Less> index;
  for (std::size_t i = 0; i < support.size(); ++i)
    if (!index.emplace(support[i], i).second) throw invalid_argument("support has duplicates");
  UniformityReport r;
  r.samples = samples.size();
  r.support = support.size();
  r.counts.assign(support.size(), 0);
  for (const T& s : samples) {
    auto it = index.find(s);
    if (it == index.end()) throw error("sample outside the support");
    ++r.counts[it->second];
  }
  r.dof = support.size() - 1;
  if (samples.empty() || support.size() == 1) return r;
  const double n = static_cast<double>(samples.size());
  const double p = 1.0 / static_cast<double>(support.size());
  const double sigma = std::sqrt(p * (1 - p) / n);
  const double expected = n * p;
  for (std::size_t c : r.counts) {
    const double ph = static_cast<double>(c) / n;
    r.max_sigma = std::max(r.max_sigma, std::abs(ph - p) / sigma);
    r.chi_square += (static_cast<double>(c) - expected) * (static_cast<double>(c) - expected) / expected;
  }
  boost::math::chi_squared dist(static_cast<double>(r.dof));
  r.p_value = boost::math::cdf(boost::math::complement(dist, r.chi_square));
  return r;
}

}  // namespace saw
