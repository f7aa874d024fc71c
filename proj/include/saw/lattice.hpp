#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "saw/error.hpp"

namespace saw {

using coord_t = std::int64_t;

struct Point {
  coord_t x = 0;
  coord_t y = 0;

  friend constexpr auto operator<=>(const Point&, const Point&) = default;

  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
};

/// Componentwise order: a <= b in both coordinates.
constexpr bool dominated_by(Point a, Point b) { return a.x <= b.x && a.y <= b.y; }

constexpr coord_t l1_distance(Point a, Point b) {
  const coord_t dx = a.x > b.x ? a.x - b.x : b.x - a.x;
  const coord_t dy = a.y > b.y ? a.y - b.y : b.y - a.y;
  return dx + dy;
}

struct PointHash {
  std::size_t operator()(Point p) const noexcept {
    auto h = static_cast<std::uint64_t>(p.x) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(p.y) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

using PointSet = std::unordered_set<Point, PointHash>;

// Enumeration order U, R, D, L is also the fixed depth-first order of the
// brute-force enumerators.
enum class Direction : std::uint8_t { U = 0, R = 1, D = 2, L = 3 };

inline constexpr std::array<Direction, 4> kDirections = {Direction::U, Direction::R,
                                                         Direction::D, Direction::L};

constexpr Direction reverse(Direction d) {
  return static_cast<Direction>((static_cast<int>(d) + 2) & 3);
}

constexpr Point displacement(Direction d) {
  switch (d) {
    case Direction::U: return {0, 1};
    case Direction::R: return {1, 0};
    case Direction::D: return {0, -1};
    case Direction::L: return {-1, 0};
  }
  return {0, 0};
}

constexpr Point step(Point p, Direction d) { return p + displacement(d); }

constexpr char to_char(Direction d) {
  constexpr std::array<char, 4> names = {'U', 'R', 'D', 'L'};
  return names[static_cast<int>(d)];
}

inline Direction direction_from_char(char c) {
  switch (c) {
    case 'U': return Direction::U;
    case 'R': return Direction::R;
    case 'D': return Direction::D;
    case 'L': return Direction::L;
    default: throw invalid_argument(std::string("not a move character: '") + c + "'");
  }
}

/// Direction of the unit step a -> b.
inline Direction direction_between(Point a, Point b) {
  const Point d = b - a;
  for (Direction dir : kDirections) {
    if (displacement(dir) == d) return dir;
  }
  throw invalid_argument("points are not lattice neighbours");
}

/// A lattice walk stored as a start point plus its move sequence.
struct Walk {
  Point start;
  std::vector<Direction> moves;

  std::size_t length() const noexcept { return moves.size(); }

  Point end() const {
    Point p = start;
    for (Direction d : moves) p = step(p, d);
    return p;
  }

  friend bool operator==(const Walk&, const Walk&) = default;
  friend auto operator<=>(const Walk& a, const Walk& b) {
    if (auto c = a.start <=> b.start; c != 0) return c;
    return std::lexicographical_compare_three_way(a.moves.begin(), a.moves.end(),
                                                  b.moves.begin(), b.moves.end());
  }
};

inline std::vector<Direction> parse_moves(std::string_view text) {
  std::vector<Direction> moves;
  moves.reserve(text.size());
  for (char c : text) moves.push_back(direction_from_char(c));
  return moves;
}

inline std::string moves_to_string(std::span<const Direction> moves) {
  std::string out;
  out.reserve(moves.size());
  for (Direction d : moves) out.push_back(to_char(d));
  return out;
}

inline Walk make_walk(Point start, std::string_view moves) { return {start, parse_moves(moves)}; }

/// Visited points A_0..A_len.
inline std::vector<Point> points_of(const Walk& w) {
  std::vector<Point> pts;
  pts.reserve(w.moves.size() + 1);
  pts.push_back(w.start);
  for (Direction d : w.moves) pts.push_back(step(pts.back(), d));
  return pts;
}

/// Inverse of points_of: consecutive points must be lattice neighbours.
inline Walk walk_from_points(std::span<const Point> pts) {
  if (pts.empty()) throw invalid_argument("walk needs at least one point");
  Walk w{pts.front(), {}};
  w.moves.reserve(pts.size() - 1);
  for (std::size_t i = 1; i < pts.size(); ++i) w.moves.push_back(direction_between(pts[i - 1], pts[i]));
  return w;
}

inline bool is_self_avoiding(const Walk& w) {
  PointSet seen;
  seen.reserve(w.moves.size() + 1);
  Point p = w.start;
  seen.insert(p);
  for (Direction d : w.moves) {
    p = step(p, d);
    if (!seen.insert(p).second) return false;
  }
  return true;
}

/// Text codec: "(x,y)" followed by the move string, e.g. "(0,0)RRU".
inline std::string to_string(Point p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

inline std::string to_string(const Walk& w) { return to_string(w.start) + moves_to_string(w.moves); }

inline Point parse_point(std::string_view text, std::size_t* consumed = nullptr) {
  auto fail = [&] { throw invalid_argument("malformed point: '" + std::string(text) + "'"); };
  if (text.empty() || text.front() != '(') fail();
  const auto comma = text.find(',');
  const auto close = text.find(')');
  if (comma == std::string_view::npos || close == std::string_view::npos || comma > close) fail();
  auto parse_int = [&](std::string_view s) -> coord_t {
    if (s.empty()) fail();
    std::size_t pos = 0;
    coord_t v = 0;
    try {
      v = std::stoll(std::string(s), &pos);
    } catch (const std::exception&) {
      fail();
    }
    if (pos != s.size()) fail();
    return v;
  };
  Point p{parse_int(text.substr(1, comma - 1)), parse_int(text.substr(comma + 1, close - comma - 1))};
  if (consumed) *consumed = close + 1;
  return p;
}

inline Walk parse_walk(std::string_view text) {
  std::size_t used = 0;
  Point start = parse_point(text, &used);
  return {start, parse_moves(text.substr(used))};
}

/// Axis-aligned box {q : lo <= q <= hi}.
class LatticeBox {
 public:
  LatticeBox(Point lo, Point hi) : lo_(lo), hi_(hi) {
    if (!dominated_by(lo, hi)) throw invalid_argument("lattice box requires lo <= hi componentwise");
  }

  Point lo() const noexcept { return lo_; }
  Point hi() const noexcept { return hi_; }
  coord_t width() const noexcept { return hi_.x - lo_.x + 1; }
  coord_t height() const noexcept { return hi_.y - lo_.y + 1; }
  std::uint64_t size() const noexcept {
    return static_cast<std::uint64_t>(width()) * static_cast<std::uint64_t>(height());
  }
  bool contains(Point p) const noexcept { return dominated_by(lo_, p) && dominated_by(p, hi_); }

  /// Smallest box containing both points (no ordering required).
  static LatticeBox spanning(Point a, Point b) {
    return {{std::min(a.x, b.x), std::min(a.y, b.y)}, {std::max(a.x, b.x), std::max(a.y, b.y)}};
  }

  LatticeBox expanded(coord_t margin) const {
    return {{lo_.x - margin, lo_.y - margin}, {hi_.x + margin, hi_.y + margin}};
  }

  std::optional<LatticeBox> intersect(const LatticeBox& o) const {
    Point lo{std::max(lo_.x, o.lo_.x), std::max(lo_.y, o.lo_.y)};
    Point hi{std::min(hi_.x, o.hi_.x), std::min(hi_.y, o.hi_.y)};
    if (!dominated_by(lo, hi)) return std::nullopt;
    return LatticeBox{lo, hi};
  }

  friend bool operator==(const LatticeBox&, const LatticeBox&) = default;

 private:
  Point lo_;
  Point hi_;
};

/// An induced subset of Z^2 given by a membership predicate. Immutable and
/// cheap to copy.
class Region {
 public:
  using Predicate = std::function<bool(Point)>;

  /// The whole lattice.
  static Region full() { return Region(std::make_shared<Impl>(Impl{"Z2", std::nullopt, {}})); }

  static Region box(const LatticeBox& b) {
    return Region(std::make_shared<Impl>(Impl{"box", b, [b](Point p) { return b.contains(p); }}));
  }

  static Region points(std::vector<Point> pts) {
    if (pts.empty()) throw invalid_argument("explicit point region must be nonempty");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    Point lo = pts.front(), hi = pts.front();
    for (Point p : pts) {
      lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
      hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
    }
    auto shared = std::make_shared<const std::vector<Point>>(std::move(pts));
    return Region(std::make_shared<Impl>(
        Impl{"points", LatticeBox{lo, hi},
             [shared](Point p) { return std::binary_search(shared->begin(), shared->end(), p); }}));
  }

  /// A bounded region described by a predicate; members must lie in `bounds`.
  static Region predicate(std::string name, const LatticeBox& bounds, Predicate member) {
    return Region(std::make_shared<Impl>(Impl{std::move(name), bounds, std::move(member)}));
  }

  bool contains(Point p) const {
    if (!impl_->bounds) return true;
    return impl_->bounds->contains(p) && impl_->member(p);
  }

  bool is_full() const noexcept { return !impl_->bounds; }
  bool is_bounded() const noexcept { return impl_->bounds.has_value(); }
  const std::optional<LatticeBox>& bounding_box() const noexcept { return impl_->bounds; }
  const std::string& name() const noexcept { return impl_->name; }

  /// Members of a bounded region in lexicographic order.
  std::vector<Point> vertices() const {
    if (!is_bounded()) throw invalid_argument("vertex set requires bounded region");
    std::vector<Point> out;
    const auto& b = *impl_->bounds;
    for (coord_t x = b.lo().x; x <= b.hi().x; ++x)
      for (coord_t y = b.lo().y; y <= b.hi().y; ++y)
        if (impl_->member({x, y})) out.push_back({x, y});
    return out;
  }

  /// This region restricted to a box; the result is always bounded.
  Region restricted_to(const LatticeBox& b) const {
    if (!is_bounded()) return box(b);
    auto inter = impl_->bounds->intersect(b);
    if (!inter) throw invalid_argument("restriction box does not meet the region");
    auto self = *this;
    return predicate(name() + "&box", *inter, [self](Point p) { return self.contains(p); });
  }

 private:
  struct Impl {
    std::string name;
    std::optional<LatticeBox> bounds;  // nullopt == full lattice
    Predicate member;
  };

  explicit Region(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

/// Member with at least one of its four neighbours outside the region.
inline bool on_boundary(const Region& region, Point p) {
  if (!region.contains(p)) return false;
  for (Direction d : kDirections)
    if (!region.contains(step(p, d))) return true;
  return false;
}

inline std::vector<Point> boundary(const Region& region) {
  if (!region.is_bounded()) throw invalid_argument("boundary requires bounded region");
  std::vector<Point> out;
  for (Point p : region.vertices())
    if (on_boundary(region, p)) out.push_back(p);
  return out;
}

inline std::size_t boundary_points_in_box(const Region& region, const LatticeBox& box) {
  if (!region.is_bounded()) throw invalid_argument("boundary requires bounded region");
  std::size_t count = 0;
  auto inter = region.bounding_box()->intersect(box);
  if (!inter) return 0;
  for (coord_t x = inter->lo().x; x <= inter->hi().x; ++x)
    for (coord_t y = inter->lo().y; y <= inter->hi().y; ++y)
      if (on_boundary(region, {x, y})) ++count;
  return count;
}

/// Shortest-path distance inside a bounded region; -1 if unreachable.
inline std::int64_t bfs_distance(const Region& region, Point from, Point to) {
  if (!region.is_bounded()) throw invalid_argument("bfs_distance requires bounded region");
  if (!region.contains(from) || !region.contains(to)) return -1;
  std::unordered_map<Point, std::int64_t, PointHash> dist{{from, 0}};
  std::deque<Point> queue{from};
  while (!queue.empty()) {
    const Point p = queue.front();
    queue.pop_front();
    if (p == to) return dist[p];
    for (Direction d : kDirections) {
      const Point q = step(p, d);
      if (region.contains(q) && dist.emplace(q, dist[p] + 1).second) queue.push_back(q);
    }
  }
  return -1;
}

}  // namespace saw

template <>
struct std::hash<saw::Point> : saw::PointHash {};
