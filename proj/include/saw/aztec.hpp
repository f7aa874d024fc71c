#pragma once

// Aztec diamond of order k. The primal diamond is {|x|+|y| <= k}; the dual
// cells sit at half-integer points, stored doubled: (a,b) with a,b odd and
// |a|+|b| <= 2k. A primal walk cuts the dual cells it separates; a two-class
// partition of the cells corresponds to the walk along its interface.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "saw/error.hpp"
#include "saw/girth_dp.hpp"
#include "saw/lattice.hpp"
#include "saw/rng.hpp"
#include "saw/sampler.hpp"

namespace saw {

inline Region aztec_region(int k) {
  if (k < 1) throw invalid_argument("aztec order must be >= 1");
  return Region::predicate("aztec:" + std::to_string(k), LatticeBox{{-k, -k}, {k, k}},
                           [k](Point p) { return std::abs(p.x) + std::abs(p.y) <= k; });
}

/// Dual cells in doubled coordinates, lexicographic order.
inline std::vector<Point> dual_vertices(int k) {
  if (k < 1) throw invalid_argument("aztec order must be >= 1");
  std::vector<Point> out;
  for (coord_t a = -2 * k + 1; a <= 2 * k - 1; a += 2)
    for (coord_t b = -2 * k + 1; b <= 2 * k - 1; b += 2)
      if (std::abs(a) + std::abs(b) <= 2 * k) out.push_back({a, b});
  return out;
}

/// Dual edges leaving the diamond, counted by a direct scan.
inline std::size_t outer_boundary_edge_count(int k) {
  std::size_t count = 0;
  for (Point v : dual_vertices(k))
    for (Direction d : kDirections) {
      const Point u = v + displacement(d) + displacement(d);
      if (std::abs(u.x) + std::abs(u.y) > 2 * k) ++count;
    }
  return count;
}

/// Index tables for one diamond order.
class AztecGeometry {
 public:
  explicit AztecGeometry(int k) : k_(k), primal_(aztec_region(k)), dual_(dual_vertices(k)) {
    const auto side = static_cast<std::size_t>(4 * k + 1);
    grid_.assign(side * side, -1);
    for (std::size_t i = 0; i < dual_.size(); ++i) grid_[cell(dual_[i])] = static_cast<std::int32_t>(i);
    nbr_.resize(dual_.size());
    for (std::size_t i = 0; i < dual_.size(); ++i)
      for (Direction d : kDirections)
        nbr_[i][static_cast<int>(d)] = dual_index(dual_[i] + displacement(d) + displacement(d));

    // Boundary cycle, counter-clockwise from (k,0).
    const std::array<Point, 4> corners = {Point{k, 0}, Point{0, k}, Point{-k, 0}, Point{0, -k}};
    for (int side_i = 0; side_i < 4; ++side_i) {
      const Point a = corners[static_cast<std::size_t>(side_i)];
      const Point b = corners[static_cast<std::size_t>((side_i + 1) % 4)];
      const Point dir{(b.x - a.x) / k, (b.y - a.y) / k};
      for (int s = 0; s < k; ++s) cycle_.push_back({a.x + dir.x * s, a.y + dir.y * s});
    }
    for (std::size_t i = 0; i < cycle_.size(); ++i) cycle_pos_[cycle_[i]] = i;
  }

  int order() const noexcept { return k_; }
  const Region& primal() const noexcept { return primal_; }
  const std::vector<Point>& dual() const noexcept { return dual_; }
  std::size_t dual_count() const noexcept { return dual_.size(); }
  /// The lexicographically smallest cell; class 1 always contains it.
  std::size_t anchor() const noexcept { return 0; }

  std::int32_t dual_index(Point doubled) const {
    if (std::abs(doubled.x) + std::abs(doubled.y) > 2 * k_ || (doubled.x & 1) == 0 || (doubled.y & 1) == 0) return -1;
    return grid_[cell(doubled)];
  }

  /// Neighbour cell in direction d, or -1 outside the diamond.
  std::int32_t neighbor(std::size_t i, Direction d) const noexcept { return nbr_[i][static_cast<int>(d)]; }

  const std::vector<Point>& boundary_cycle() const noexcept { return cycle_; }
  std::optional<std::size_t> boundary_position(Point p) const {
    auto it = cycle_pos_.find(p);
    if (it == cycle_pos_.end()) return std::nullopt;
    return it->second;
  }

  /// The two cells separated by the primal unit edge {p, q}.
  std::pair<std::int32_t, std::int32_t> crossed_cells(Point p, Point q) const {
    if (l1_distance(p, q) != 1) throw invalid_argument("not a primal unit edge");
    if (p.y == q.y) {
      const coord_t x = std::min(p.x, q.x);
      return {dual_index({2 * x + 1, 2 * p.y - 1}), dual_index({2 * x + 1, 2 * p.y + 1})};
    }
    const coord_t y = std::min(p.y, q.y);
    return {dual_index({2 * p.x - 1, 2 * y + 1}), dual_index({2 * p.x + 1, 2 * y + 1})};
  }

  /// The primal unit edge crossing the dual edge between adjacent cells i, j.
  std::pair<Point, Point> crossing_edge(std::size_t i, std::size_t j) const {
    Point a = dual_[i], b = dual_[j];
    if (b < a) std::swap(a, b);
    if (a.x == b.x) {  // vertical dual edge, horizontal primal edge
      const coord_t x = (a.x - 1) / 2, y = (a.y + 1) / 2;
      return {{x, y}, {x + 1, y}};
    }
    const coord_t x = (a.x + 1) / 2, y = (a.y - 1) / 2;
    return {{x, y}, {x, y + 1}};
  }

 private:
  std::size_t cell(Point d) const {
    return static_cast<std::size_t>((d.x + 2 * k_) * (4 * k_ + 1) + (d.y + 2 * k_));
  }

  int k_;
  Region primal_;
  std::vector<Point> dual_;
  std::vector<std::int32_t> grid_;
  std::vector<std::array<std::int32_t, 4>> nbr_;
  std::vector<Point> cycle_;
  std::map<Point, std::size_t> cycle_pos_;
};

/// Shared, lazily built geometry for order k.
inline const AztecGeometry& aztec_geometry(int k) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<AztecGeometry>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[k];
  if (!slot) slot = std::make_unique<AztecGeometry>(k);
  return *slot;
}

struct Partition {
  int k = 0;
  std::vector<std::uint8_t> label;  // 1 or 2 per dual cell, geometry order
  std::size_t boundary1 = 0;
  std::size_t boundary2 = 0;

  friend bool operator==(const Partition& a, const Partition& b) { return a.k == b.k && a.label == b.label; }
  friend bool operator<(const Partition& a, const Partition& b) {
    return std::tie(a.k, a.label) < std::tie(b.k, b.label);
  }
};

struct OmegaParams {
  double C = 1.0;
  double eps = 0.5;
  std::optional<std::uint64_t> explicit_budget;  // overrides 6k + slack

  std::uint64_t slack(int k) const {
    if (C < 0 || eps <= 0 || eps > 1) throw invalid_argument("need C >= 0 and eps in (0,1]");
    return static_cast<std::uint64_t>(std::floor(C * std::pow(static_cast<double>(k), 1.0 - eps) + 1e-9));
  }
  std::uint64_t budget(int k) const { return explicit_budget ? *explicit_budget : 6 * static_cast<std::uint64_t>(k) + slack(k); }
};

namespace detail {

// Edges from cells of class c to anything outside class c.
inline std::size_t class_boundary(const AztecGeometry& g, const std::vector<std::uint8_t>& label, std::uint8_t c) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (label[i] != c) continue;
    for (Direction d : kDirections) {
      const std::int32_t j = g.neighbor(i, d);
      if (j < 0 || label[static_cast<std::size_t>(j)] != c) ++count;
    }
  }
  return count;
}

inline bool class_connected(const AztecGeometry& g, const std::vector<std::uint8_t>& label, std::uint8_t c) {
  std::vector<std::size_t> stack;
  std::vector<char> seen(label.size(), 0);
  std::size_t members = 0;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (label[i] != c) continue;
    ++members;
    if (stack.empty() && !seen[i]) {
      stack.push_back(i);
      seen[i] = 1;
    }
  }
  if (members == 0) return false;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    ++reached;
    for (Direction d : kDirections) {
      const std::int32_t j = g.neighbor(i, d);
      if (j >= 0 && !seen[static_cast<std::size_t>(j)] && label[static_cast<std::size_t>(j)] == c) {
        seen[static_cast<std::size_t>(j)] = 1;
        stack.push_back(static_cast<std::size_t>(j));
      }
    }
  }
  return reached == members;
}

}  // namespace detail

/// Validates labels, moves the anchor into class 1 and fills boundary sizes.
inline Partition make_partition(int k, std::vector<std::uint8_t> label) {
  const auto& g = aztec_geometry(k);
  if (label.size() != g.dual_count()) throw invalid_argument("invalid partition: wrong label count");
  for (auto& c : label)
    if (c != 1 && c != 2) throw invalid_argument("invalid partition: labels must be 1 or 2");
  if (label[g.anchor()] == 2)
    for (auto& c : label) c = static_cast<std::uint8_t>(3 - c);
  if (!detail::class_connected(g, label, 1) || !detail::class_connected(g, label, 2))
    throw invalid_argument("invalid partition: a class is empty or disconnected");
  Partition p{k, std::move(label), 0, 0};
  p.boundary1 = detail::class_boundary(g, p.label, 1);
  p.boundary2 = detail::class_boundary(g, p.label, 2);
  return p;
}

inline bool is_valid_partition(const Partition& p) {
  if (p.k < 1) return false;
  const auto& g = aztec_geometry(p.k);
  return p.label.size() == g.dual_count() && p.label[g.anchor()] == 1 && detail::class_connected(g, p.label, 1) &&
         detail::class_connected(g, p.label, 2);
}

/// Splits the cells along the given primal unit edges; exactly two pieces
/// must remain.
inline Partition partition_from_cut(int k, const std::vector<std::pair<Point, Point>>& edges) {
  const auto& g = aztec_geometry(k);
  std::vector<std::array<bool, 4>> blocked(g.dual_count(), {false, false, false, false});
  for (const auto& [p, q] : edges) {
    if (!g.primal().contains(p) || !g.primal().contains(q)) throw invalid_argument("cut edge leaves the diamond");
    const auto [i, j] = g.crossed_cells(p, q);
    if (i < 0 || j < 0) throw invalid_argument("cut edge does not separate two cells");
    for (Direction d : kDirections) {
      if (g.neighbor(static_cast<std::size_t>(i), d) == j) blocked[static_cast<std::size_t>(i)][static_cast<int>(d)] = true;
      if (g.neighbor(static_cast<std::size_t>(j), d) == i) blocked[static_cast<std::size_t>(j)][static_cast<int>(d)] = true;
    }
  }
  std::vector<int> comp(g.dual_count(), -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < g.dual_count(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (Direction d : kDirections) {
        const std::int32_t j = g.neighbor(i, d);
        if (j < 0 || blocked[i][static_cast<int>(d)] || comp[static_cast<std::size_t>(j)] >= 0) continue;
        comp[static_cast<std::size_t>(j)] = ncomp;
        stack.push_back(static_cast<std::size_t>(j));
      }
    }
    ++ncomp;
  }
  if (ncomp != 2) throw invalid_argument("walk does not induce a 2-partition");
  std::vector<std::uint8_t> label(g.dual_count());
  for (std::size_t i = 0; i < label.size(); ++i) label[i] = comp[i] == comp[g.anchor()] ? 1 : 2;
  return make_partition(k, std::move(label));
}

inline Partition path_to_partition(int k, const Walk& w) {
  if (w.length() == 0) throw invalid_argument("walk must have at least one edge");
  if (!is_self_avoiding(w)) throw invalid_argument("walk is not self-avoiding");
  const auto pts = points_of(w);
  std::vector<std::pair<Point, Point>> edges;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) edges.emplace_back(pts[i], pts[i + 1]);
  return partition_from_cut(k, edges);
}

/// Canonical interface walk of a partition, starting at the smaller endpoint.
inline Walk partition_to_path(const Partition& p) {
  if (!is_valid_partition(p)) throw invalid_argument("invalid partition");
  const auto& g = aztec_geometry(p.k);
  std::map<Point, std::vector<Point>> adj;
  std::size_t nedges = 0;
  for (std::size_t i = 0; i < g.dual_count(); ++i)
    for (Direction d : {Direction::U, Direction::R}) {
      const std::int32_t j = g.neighbor(i, d);
      if (j < 0 || p.label[i] == p.label[static_cast<std::size_t>(j)]) continue;
      const auto [a, b] = g.crossing_edge(i, static_cast<std::size_t>(j));
      adj[a].push_back(b);
      adj[b].push_back(a);
      ++nedges;
    }
  std::vector<Point> ends;
  for (const auto& [q, nb] : adj) {
    if (nb.size() == 1) {
      ends.push_back(q);
    } else if (nb.size() != 2) {
      throw invalid_argument("invalid partition: interface is not a single path");
    }
  }
  if (ends.size() != 2) throw invalid_argument("invalid partition: interface is not a single path");
  std::vector<Point> pts{std::min(ends[0], ends[1])};
  Point prev = pts.front();
  Point cur = adj[prev].front();
  pts.push_back(cur);
  while (adj[cur].size() == 2) {
    const Point nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = nxt;
    pts.push_back(cur);
  }
  if (pts.size() != nedges + 1) throw invalid_argument("invalid partition: interface is not a single path");
  return walk_from_points(pts);
}

inline std::size_t edge_boundary_size(const Partition& p, int class_id) {
  if (class_id != 1 && class_id != 2) throw invalid_argument("class id must be 1 or 2");
  return detail::class_boundary(aztec_geometry(p.k), p.label, static_cast<std::uint8_t>(class_id));
}

inline bool in_omega(const Partition& p, const OmegaParams& params) {
  const auto b = params.budget(p.k);
  return edge_boundary_size(p, 1) <= b && edge_boundary_size(p, 2) <= b;
}

/// Steps along the boundary cycle between two boundary points, the short way
/// or the long way (whichever is larger).
inline std::size_t boundary_arc_max(const AztecGeometry& g, Point a, Point b) {
  const auto pa = g.boundary_position(a), pb = g.boundary_position(b);
  if (!pa || !pb) throw invalid_argument("points must lie on the diamond boundary");
  const std::size_t n = g.boundary_cycle().size();
  const std::size_t d = (*pa + n - *pb) % n;
  return std::max(d, n - d);
}

/// Longest interface walk between boundary points a, b whose two classes both
/// stay within the budget; negative when no length works. A walk of length t
/// gives classes with boundaries t + 2d and t + 8k - 2d, d the arc length.
inline std::int64_t max_cut_length(int k, std::uint64_t budget, Point a, Point b) {
  const auto& g = aztec_geometry(k);
  return static_cast<std::int64_t>(budget) - 2 * static_cast<std::int64_t>(boundary_arc_max(g, a, b));
}

struct WidthCertificate {
  bool ok = false;
  std::uint64_t s = 0;          // claimed width bound 16*ell + 4*slack
  std::size_t boundary_in_box = 0;
  std::string violation;        // empty when ok
};

inline WidthCertificate width_certificate(int k, const OmegaParams& params, Point p1, Point p2, std::uint64_t ell) {
  const auto& g = aztec_geometry(k);
  if (!g.boundary_position(p1) || !g.boundary_position(p2)) throw invalid_argument("endpoints must lie on the diamond boundary");
  WidthCertificate cert;
  cert.s = 16 * ell + 4 * params.slack(k);
  const auto box = LatticeBox::spanning(p1, p2).expanded(static_cast<coord_t>(ell));
  cert.boundary_in_box = boundary_points_in_box(g.primal(), box);
  if (max_cut_length(k, params.budget(k), p1, p2) < l1_distance(p1, p2)) {
    cert.violation = "endpoint pair admits no partition within the budget";
  } else if (cert.boundary_in_box > cert.s) {
    cert.violation = "box holds " + std::to_string(cert.boundary_in_box) + " boundary points, more than " +
                     std::to_string(cert.s);
  }
  cert.ok = cert.violation.empty();
  return cert;
}

struct PartitionSample {
  Partition partition;
  Walk path;
  std::uint64_t attempts = 0;
};

struct PartitionSamplerOptions {
  std::uint64_t max_attempts = 100000;
  std::string cache_dir;  // empty: keep nothing on disk
  std::size_t tables_in_memory = 8;
  TableOptions table;
};

/// Partition sampler: one count table per target boundary point with
/// every lexicographically smaller boundary point as a source, a joint exact
/// draw over (pair, length), then rejection of non-paths and of walks that do
/// not give a partition in the budget.
class PartitionSampler {
 public:
  PartitionSampler(int k, OmegaParams params, int l, PartitionSamplerOptions opt = {})
      : k_(k), params_(params), l_(l), budget_(params.budget(k)), opt_(std::move(opt)) {
    // From 8k + 4 on, Omega also holds partitions cut by a closed curve,
    // which no boundary-to-boundary walk produces.
    if (budget_ >= 8 * static_cast<std::uint64_t>(k) + 4)
      throw invalid_argument("budget " + std::to_string(budget_) + " admits closed interfaces; the walk sampler needs budget < 8k + 4");
    const auto& g = aztec_geometry(k);
    std::vector<Point> bnd = g.boundary_cycle();
    std::sort(bnd.begin(), bnd.end());
    for (std::size_t t = 0; t < bnd.size(); ++t) {
      TableSpec spec{g.primal(), bnd[t], {}, l_};
      for (std::size_t s = 0; s < t; ++s) {
        const std::int64_t cap = max_cut_length(k, budget_, bnd[s], bnd[t]);
        if (cap >= l1_distance(bnd[s], bnd[t])) spec.sources.push_back({bnd[s], static_cast<std::uint64_t>(cap)});
      }
      if (spec.sources.empty()) continue;
      const auto table = load_or_build(spec);
      const std::size_t ti = specs_.size();
      specs_.push_back(spec);
      for (std::size_t s = 0; s < spec.sources.size(); ++s)
        for (std::uint64_t len : table->start_lengths(s)) {
          const BigNat c = table->start_count(s, len);
          if (c == 0) continue;
          total_ += c;
          entries_.push_back({ti, s, len});
          cumulative_.push_back(total_);
        }
      remember(ti, table);
    }
    if (total_ == 0) throw invalid_argument("no boundary walk fits the budget");
  }

  int order() const noexcept { return k_; }
  std::uint64_t budget() const noexcept { return budget_; }
  const BigNat& total_walks() const noexcept { return total_; }

  PartitionSample sample(RngStream& rng) {
    for (std::uint64_t attempt = 1; attempt <= opt_.max_attempts; ++attempt) {
      const BigNat pick = uniform_bignat(rng, total_);
      const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), pick);
      const FamilyDraw& e = entries_[static_cast<std::size_t>(it - cumulative_.begin())];
      const auto table = table_for(e.table);
      Walk w = sample_low_girth_walk(*table, rng, e.length, e.source);
      if (!is_self_avoiding(w)) continue;
      Partition p;
      try {
        p = path_to_partition(k_, w);
      } catch (const invalid_argument&) {
        continue;
      }
      if (!in_omega(p, params_)) continue;
      return {std::move(p), std::move(w), attempt};
    }
    throw sampling_budget_exhausted(opt_.max_attempts);
  }

 private:
  std::string cache_key(const TableSpec& spec) const {
    return "aztec_k" + std::to_string(k_) + "_l" + std::to_string(l_) + "_b" + std::to_string(budget_) + "_x" +
           std::to_string(spec.target.x) + "_y" + std::to_string(spec.target.y);
  }

  std::shared_ptr<const CountTable> load_or_build(const TableSpec& spec) {
    if (opt_.cache_dir.empty()) return std::make_shared<const CountTable>(CountTable::build(spec, opt_.table));
    namespace fs = std::filesystem;
    const std::string key = cache_key(spec);
    const fs::path file = fs::path(opt_.cache_dir) / (key + ".tbl");
    if (fs::exists(file)) {
      std::ifstream in(file, std::ios::binary);
      try {
        return std::make_shared<const CountTable>(CountTable::load(in, spec, key));
      } catch (const error&) {
        // stale or damaged; rebuild below
      }
    }
    auto table = std::make_shared<const CountTable>(CountTable::build(spec, opt_.table));
    fs::create_directories(opt_.cache_dir);
    const fs::path tmp = file.string() + ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      table->save(out, key);
    }
    fs::rename(tmp, file);
    return table;
  }

  std::shared_ptr<const CountTable> table_for(std::size_t ti) {
    for (auto it = lru_.begin(); it != lru_.end(); ++it)
      if (it->first == ti) {
        lru_.splice(lru_.begin(), lru_, it);
        return it->second;
      }
    auto table = load_or_build(specs_[ti]);
    remember(ti, table);
    return table;
  }

  void remember(std::size_t ti, std::shared_ptr<const CountTable> table) {
    lru_.emplace_front(ti, std::move(table));
    while (lru_.size() > std::max<std::size_t>(1, opt_.tables_in_memory)) lru_.pop_back();
  }

  int k_;
  OmegaParams params_;
  int l_;
  std::uint64_t budget_;
  PartitionSamplerOptions opt_;
  std::vector<TableSpec> specs_;
  std::vector<FamilyDraw> entries_;
  std::vector<BigNat> cumulative_;
  BigNat total_ = 0;
  std::list<std::pair<std::size_t, std::shared_ptr<const CountTable>>> lru_;
};

inline PartitionSample sample_partition(int k, const OmegaParams& params, int l, RngStream& rng,
                                        PartitionSamplerOptions opt = {}) {
  PartitionSampler sampler(k, params, l, std::move(opt));
  return sampler.sample(rng);
}

}  // namespace saw
