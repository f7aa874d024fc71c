#pragma once

// Exact counts of walks that close no cycle of length <= 2l.
//
// A state is (Q, window, t): the current point, the trailing moves that end
// at Q, and the number of steps left. Stepping onto any of the last 2l
// visited points would close a short cycle, and those points are fixed by the
// last 2l-1 moves, so windows hold at most 2l-1 moves.
//
// Layers t = 0..T are filled bottom-up; each layer stores one fixed-width
// limb block per (point, full window). Only states that can lie on a counted
// walk are stored; anything else is recomputed on demand.

#include <gmp.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "saw/bignat.hpp"
#include "saw/error.hpp"
#include "saw/lattice.hpp"

namespace saw {

/// All self-avoiding move suffixes of length <= 2l-1, with the step table.
/// Ids [0, full_count()) are the windows of maximal length.
class WindowSet {
 public:
  static constexpr int kMaxGirth = 6;

  explicit WindowSet(int l) : l_(l), max_moves_(2 * l - 1) {
    if (l < 1) throw invalid_argument("girth parameter l must be >= 1");
    if (l > kMaxGirth) throw invalid_argument("girth parameter l too large to enumerate windows");
    std::vector<Key> found{{0, 0}};
    std::unordered_map<std::uint64_t, std::size_t> seen{{pack({0, 0}), 0}};
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (Direction d : kDirections) {
        if (!allowed(found[i], d)) continue;
        Key nk = extend(found[i], d);
        if (seen.emplace(pack(nk), found.size()).second) found.push_back(nk);
      }
    }
    // Full-length windows first, then shorter ones; stable within each group.
    std::stable_sort(found.begin(), found.end(),
                     [&](const Key& a, const Key& b) { return a.len > b.len; });
    keys_ = std::move(found);
    full_ = static_cast<std::size_t>(
        std::count_if(keys_.begin(), keys_.end(), [&](const Key& k) { return k.len == max_moves_; }));
    for (std::size_t i = 0; i < keys_.size(); ++i) index_[pack(keys_[i])] = static_cast<std::uint32_t>(i);
    next_.resize(keys_.size());
    for (std::size_t i = 0; i < keys_.size(); ++i)
      for (Direction d : kDirections)
        next_[i][static_cast<int>(d)] =
            allowed(keys_[i], d) ? static_cast<std::int32_t>(index_.at(pack(extend(keys_[i], d)))) : -1;
  }

  int girth() const noexcept { return l_; }
  int max_moves() const noexcept { return max_moves_; }
  std::size_t size() const noexcept { return keys_.size(); }
  std::size_t full_count() const noexcept { return full_; }
  bool is_full(std::uint32_t id) const noexcept { return id < full_; }
  std::uint32_t empty_id() const { return index_.at(0); }

  /// Window after stepping in direction d, or -1 if the step closes a short cycle.
  std::int32_t next(std::uint32_t id, Direction d) const noexcept { return next_[id][static_cast<int>(d)]; }

  /// Id of the window formed by the trailing moves; nullopt if they self-intersect.
  std::optional<std::uint32_t> find(std::span<const Direction> moves) const {
    if (moves.size() > static_cast<std::size_t>(max_moves_)) moves = moves.last(static_cast<std::size_t>(max_moves_));
    Key k{0, 0};
    for (Direction d : moves) {
      k.code = k.code * 4 + static_cast<std::uint64_t>(d);
      ++k.len;
    }
    auto it = index_.find(pack(k));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::vector<Direction> moves(std::uint32_t id) const {
    const Key& k = keys_.at(id);
    std::vector<Direction> out(static_cast<std::size_t>(k.len));
    std::uint64_t c = k.code;
    for (int i = k.len - 1; i >= 0; --i, c /= 4) out[static_cast<std::size_t>(i)] = static_cast<Direction>(c % 4);
    return out;
  }

 private:
  struct Key {
    int len;
    std::uint64_t code;  // oldest move in the most significant digit
  };

  static std::uint64_t pack(Key k) { return (static_cast<std::uint64_t>(k.len) << 40) | k.code; }

  Key extend(Key k, Direction d) const {
    k.code = k.code * 4 + static_cast<std::uint64_t>(d);
    if (k.len == max_moves_) {
      k.code %= std::uint64_t{1} << (2 * max_moves_);
    } else {
      ++k.len;
    }
    return k;
  }

  // Points of the window relative to its end (the current point is the origin).
  static bool allowed(Key k, Direction d) {
    const Point target = displacement(d);
    Point p{0, 0};
    std::uint64_t c = k.code;
    for (int i = 0; i < k.len; ++i, c /= 4) {
      p = p - displacement(static_cast<Direction>(c % 4));
      if (p == target) return false;
    }
    return true;
  }

  int l_;
  int max_moves_;
  std::vector<Key> keys_;
  std::size_t full_ = 0;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<std::array<std::int32_t, 4>> next_;
};

/// A walk start together with the longest walk length wanted from it.
struct Source {
  Point origin;
  std::uint64_t max_length = 0;

  friend bool operator==(const Source&, const Source&) = default;
};

struct TableSpec {
  Region region;  // bounded; every walk point must be a member
  Point target;
  std::vector<Source> sources;
  int l = 1;
};

struct TableOptions {
  std::uint64_t memory_cap_bytes = std::uint64_t{2} << 30;
  bool reverse_fill_order = false;  // only for checking order independence
};

/// Upper bound for the bytes a table would take, from the stored-state
/// layout and the bound 3^t on counts with a full window.
std::uint64_t estimate_table_bytes(const TableSpec& spec);

class CountTable {
 public:
  static CountTable build(TableSpec spec, TableOptions opt = {});

  int girth() const noexcept { return spec_.l; }
  const Region& region() const noexcept { return spec_.region; }
  Point target() const noexcept { return spec_.target; }
  const std::vector<Source>& sources() const noexcept { return spec_.sources; }
  const TableSpec& spec() const noexcept { return spec_; }
  std::uint64_t max_length() const noexcept { return max_len_; }
  const WindowSet& windows() const noexcept { return *windows_; }
  std::uint64_t memory_bytes() const noexcept;

  /// Number of admissible t-step continuations from q with the given window.
  BigNat count_state(Point q, std::uint32_t window, std::uint64_t t) const {
    if (!spec_.region.contains(q)) return 0;
    return count_rec(q, window, t, nullptr);
  }

  /// Walks of the given length from sources()[i]; 0 when the length is
  /// unreachable or exceeds the source's maximum.
  BigNat start_count(std::size_t i, std::uint64_t length) const {
    const auto& s = spec_.sources.at(i);
    auto it = start_counts_.find({i, length});
    if (it != start_counts_.end()) return it->second;
    if (length > s.max_length) throw invalid_argument("length exceeds the table's range for this source");
    return 0;
  }

  /// Nonzero-able start lengths of a source, ascending.
  std::vector<std::uint64_t> start_lengths(std::size_t i) const {
    const auto& s = spec_.sources.at(i);
    std::vector<std::uint64_t> out;
    const auto d = static_cast<std::uint64_t>(l1_distance(s.origin, spec_.target));
    for (std::uint64_t len = d; len <= s.max_length; len += 2) out.push_back(len);
    return out;
  }

  /// Serializes the table; `tag` is an opaque caller key checked by load.
  void save(std::ostream& out, const std::string& tag = {}) const;
  static CountTable load(std::istream& in, TableSpec spec, const std::string& tag = {});

 private:
  struct Layer {
    Point lo{0, 0};
    coord_t w = 0, h = 0;
    std::vector<std::int32_t> slot;  // dense over the layer box; -1 = not stored
    std::vector<Point> points;
    std::size_t width = 0;  // limbs per entry
    std::vector<mp_limb_t> limbs;

    std::int32_t find(Point q) const {
      if (q.x < lo.x || q.y < lo.y || q.x >= lo.x + w || q.y >= lo.y + h) return -1;
      return slot[static_cast<std::size_t>((q.x - lo.x) * h + (q.y - lo.y))];
    }

    void index_points() {
      slot.assign(static_cast<std::size_t>(w * h), -1);
      for (std::size_t i = 0; i < points.size(); ++i)
        slot[static_cast<std::size_t>((points[i].x - lo.x) * h + (points[i].y - lo.y))] = static_cast<std::int32_t>(i);
    }
  };

  struct MemoKey {
    Point q;
    std::uint32_t window;
    std::uint64_t t;
    friend bool operator<(const MemoKey& a, const MemoKey& b) {
      return std::tie(a.q, a.window, a.t) < std::tie(b.q, b.window, b.t);
    }
  };
  using Memo = std::map<MemoKey, BigNat>;

  explicit CountTable(TableSpec spec) : spec_(std::move(spec)) {}

  void init_geometry();
  void compute_start_counts();
  std::vector<Point> stored_points(std::uint64_t t) const;

  const mp_limb_t* entry(std::uint64_t t, std::int32_t slot, std::uint32_t window) const {
    const Layer& layer = layers_[t];
    return layer.limbs.data() + (static_cast<std::size_t>(slot) * windows_->full_count() + window) * layer.width;
  }

  static BigNat from_limbs(const mp_limb_t* p, std::size_t n) {
    while (n > 0 && p[n - 1] == 0) --n;
    BigNat out;
    mpz_import(out.get_mpz_t(), n, -1, sizeof(mp_limb_t), 0, 0, p);
    return out;
  }

  BigNat count_rec(Point q, std::uint32_t window, std::uint64_t t, Memo* memo) const;

  TableSpec spec_;
  std::shared_ptr<const WindowSet> windows_;
  std::uint64_t max_len_ = 0;
  LatticeBox bounds_{{0, 0}, {0, 0}};
  std::vector<std::int64_t> reach_;  // per bounds_ cell: max over sources of (L_s - d(s,q)), or -1
  std::vector<Layer> layers_;
  std::map<std::pair<std::size_t, std::uint64_t>, BigNat> start_counts_;

  friend std::uint64_t estimate_table_bytes(const TableSpec& spec);

  std::int64_t reach(Point q) const {
    if (!bounds_.contains(q)) return -1;
    return reach_[static_cast<std::size_t>((q.x - bounds_.lo().x) * bounds_.height() + (q.y - bounds_.lo().y))];
  }
};

inline void CountTable::init_geometry() {
  if (!spec_.region.is_bounded()) throw invalid_argument("count table needs a bounded region");
  if (spec_.sources.empty()) throw invalid_argument("count table needs at least one source");
  if (!spec_.region.contains(spec_.target)) throw invalid_argument("target point outside region");
  for (const auto& s : spec_.sources)
    if (!spec_.region.contains(s.origin)) throw invalid_argument("source point outside region");
  bounds_ = *spec_.region.bounding_box();
  max_len_ = 0;
  for (const auto& s : spec_.sources) max_len_ = std::max(max_len_, s.max_length);
  reach_.assign(bounds_.size(), -1);
  for (coord_t x = bounds_.lo().x; x <= bounds_.hi().x; ++x)
    for (coord_t y = bounds_.lo().y; y <= bounds_.hi().y; ++y) {
      const Point q{x, y};
      if (!spec_.region.contains(q)) continue;
      std::int64_t best = -1;
      for (const auto& s : spec_.sources)
        best = std::max(best, static_cast<std::int64_t>(s.max_length) - l1_distance(s.origin, q));
      reach_[static_cast<std::size_t>((x - bounds_.lo().x) * bounds_.height() + (y - bounds_.lo().y))] = best;
    }
}

// Points that can sit on a counted walk with t steps left.
inline std::vector<Point> CountTable::stored_points(std::uint64_t t) const {
  std::vector<Point> out;
  const auto tt = static_cast<std::int64_t>(t);
  const Point p = spec_.target;
  const coord_t r = static_cast<coord_t>(t);
  const coord_t x0 = std::max(bounds_.lo().x, p.x - r), x1 = std::min(bounds_.hi().x, p.x + r);
  for (coord_t x = x0; x <= x1; ++x) {
    const coord_t span = r - (x > p.x ? x - p.x : p.x - x);
    const coord_t y0 = std::max(bounds_.lo().y, p.y - span), y1 = std::min(bounds_.hi().y, p.y + span);
    for (coord_t y = y0; y <= y1; ++y) {
      const Point q{x, y};
      if ((tt - l1_distance(q, p)) % 2 != 0) continue;
      if (reach(q) < tt) continue;
      out.push_back(q);
    }
  }
  return out;
}

inline std::uint64_t estimate_table_bytes(const TableSpec& spec) {
  CountTable probe(spec);
  probe.init_geometry();
  std::uint64_t windows = 0;
  if (spec.l > WindowSet::kMaxGirth) {
    windows = std::uint64_t{2} << (4 * std::min(spec.l, 15));  // 2 * 16^l
  } else {
    windows = WindowSet(spec.l).full_count();
  }
  long double total = 0;
  for (std::uint64_t t = 0; t <= probe.max_len_; ++t) {
    const auto pts = probe.stored_points(t);
    const long double bits = std::ceil(static_cast<long double>(t) * 1.5849625007211562L) + 1;
    const long double limbs = std::ceil(bits / (8 * sizeof(mp_limb_t)));
    total += static_cast<long double>(pts.size()) * static_cast<long double>(windows) * limbs * sizeof(mp_limb_t);
    total += static_cast<long double>(pts.size()) * (sizeof(Point) + 2 * sizeof(std::int32_t));
  }
  if (total > 1.8e19L) return UINT64_MAX;
  return static_cast<std::uint64_t>(total);
}

inline CountTable CountTable::build(TableSpec spec, TableOptions opt) {
  if (spec.l < 1) throw invalid_argument("girth parameter l must be >= 1");
  const std::uint64_t need = estimate_table_bytes(spec);
  if (need > opt.memory_cap_bytes) throw resource_error("count table exceeds memory cap", need, opt.memory_cap_bytes);

  CountTable table(std::move(spec));
  table.init_geometry();
  table.windows_ = std::make_shared<const WindowSet>(table.spec_.l);
  const WindowSet& ws = *table.windows_;
  const std::size_t nwin = ws.full_count();
  const Region& region = table.spec_.region;

  table.layers_.resize(table.max_len_ + 1);
  std::vector<mp_limb_t> scratch;
  for (std::uint64_t t = 0; t <= table.max_len_; ++t) {
    Layer& layer = table.layers_[t];
    layer.points = table.stored_points(t);
    if (opt.reverse_fill_order) std::reverse(layer.points.begin(), layer.points.end());
    if (layer.points.empty()) {
      layer.width = 1;
      continue;
    }
    Point lo = layer.points.front(), hi = layer.points.front();
    for (Point q : layer.points) {
      lo = {std::min(lo.x, q.x), std::min(lo.y, q.y)};
      hi = {std::max(hi.x, q.x), std::max(hi.y, q.y)};
    }
    layer.lo = lo;
    layer.w = hi.x - lo.x + 1;
    layer.h = hi.y - lo.y + 1;
    layer.index_points();

    if (t == 0) {
      layer.width = 1;
      layer.limbs.assign(layer.points.size() * nwin, 0);
      for (std::size_t i = 0; i < layer.points.size(); ++i)
        if (layer.points[i] == table.spec_.target)
          std::fill_n(layer.limbs.begin() + static_cast<std::ptrdiff_t>(i * nwin), nwin, mp_limb_t{1});
      continue;
    }

    const Layer& prev = table.layers_[t - 1];
    const std::size_t pw = prev.width;
    const std::size_t wide = pw + 1;
    scratch.assign(layer.points.size() * nwin * wide, 0);
    std::size_t used = 1;
    for (std::size_t i = 0; i < layer.points.size(); ++i) {
      const Point q = layer.points[i];
      std::array<std::int32_t, 4> nb{};
      for (Direction d : kDirections) {
        const Point r = step(q, d);
        nb[static_cast<int>(d)] = region.contains(r) ? prev.find(r) : -1;
      }
      for (std::uint32_t w = 0; w < nwin; ++w) {
        mp_limb_t* out = scratch.data() + (i * nwin + w) * wide;
        for (Direction d : kDirections) {
          const std::int32_t s = nb[static_cast<int>(d)];
          if (s < 0) continue;
          const std::int32_t nw = ws.next(w, d);
          if (nw < 0) continue;
          const mp_limb_t* src = prev.limbs.data() + (static_cast<std::size_t>(s) * nwin + static_cast<std::size_t>(nw)) * pw;
          out[pw] += mpn_add_n(out, out, src, static_cast<mp_size_t>(pw));
        }
        std::size_t n = wide;
        while (n > used && out[n - 1] == 0) --n;
        used = std::max(used, n);
      }
    }
    layer.width = used;
    if (used == wide) {
      layer.limbs = std::move(scratch);
      scratch = {};
    } else {
      layer.limbs.resize(layer.points.size() * nwin * used);
      for (std::size_t e = 0; e < layer.points.size() * nwin; ++e)
        std::memcpy(layer.limbs.data() + e * used, scratch.data() + e * wide, used * sizeof(mp_limb_t));
    }
  }
  table.compute_start_counts();
  return table;
}

inline BigNat CountTable::count_rec(Point q, std::uint32_t window, std::uint64_t t, Memo* memo) const {
  if (t == 0) return q == spec_.target ? 1 : 0;
  const auto dist = static_cast<std::uint64_t>(l1_distance(q, spec_.target));
  if (dist > t || (t - dist) % 2 != 0) return 0;
  if (windows_->is_full(window) && t < layers_.size()) {
    const std::int32_t s = layers_[t].find(q);
    if (s >= 0) return from_limbs(entry(t, s, window), layers_[t].width);
  }
  const MemoKey key{q, window, t};
  if (memo) {
    auto it = memo->find(key);
    if (it != memo->end()) return it->second;
  }
  Memo local;
  if (!memo && windows_->is_full(window)) memo = &local;  // deep fallback: avoid exponential rework
  BigNat total = 0;
  for (Direction d : kDirections) {
    const std::int32_t nw = windows_->next(window, d);
    if (nw < 0) continue;
    const Point r = step(q, d);
    if (!spec_.region.contains(r)) continue;
    total += count_rec(r, static_cast<std::uint32_t>(nw), t - 1, memo);
  }
  if (memo) memo->emplace(key, total);
  return total;
}

inline void CountTable::compute_start_counts() {
  start_counts_.clear();
  const std::uint32_t empty = windows_->empty_id();
  for (std::size_t i = 0; i < spec_.sources.size(); ++i)
    for (std::uint64_t len : start_lengths(i))
      start_counts_[{i, len}] = count_rec(spec_.sources[i].origin, empty, len, nullptr);
}

inline std::uint64_t CountTable::memory_bytes() const noexcept {
  std::uint64_t total = 0;
  for (const auto& layer : layers_)
    total += layer.limbs.size() * sizeof(mp_limb_t) + layer.slot.size() * sizeof(std::int32_t) +
             layer.points.size() * sizeof(Point);
  return total;
}

namespace detail {

inline constexpr char kTableMagic[8] = {'S', 'A', 'W', 'C', 'N', 'T', '0', '1'};
inline constexpr std::uint32_t kTableVersion = 1;

template <typename T>
void put(std::ostream& out, const T& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw error("table cache: truncated file");
  return v;
}

}  // namespace detail

inline void CountTable::save(std::ostream& out, const std::string& tag) const {
  using detail::put;
  out.write(detail::kTableMagic, sizeof(detail::kTableMagic));
  put(out, detail::kTableVersion);
  put<std::uint64_t>(out, tag.size());
  out.write(tag.data(), static_cast<std::streamsize>(tag.size()));
  put<std::int32_t>(out, spec_.l);
  put(out, spec_.target.x);
  put(out, spec_.target.y);
  put<std::uint64_t>(out, spec_.sources.size());
  for (const auto& s : spec_.sources) {
    put(out, s.origin.x);
    put(out, s.origin.y);
    put(out, s.max_length);
  }
  put<std::uint64_t>(out, layers_.size());
  for (const auto& layer : layers_) {
    put(out, layer.lo.x);
    put(out, layer.lo.y);
    put(out, layer.w);
    put(out, layer.h);
    put<std::uint64_t>(out, layer.width);
    put<std::uint64_t>(out, layer.points.size());
    for (Point q : layer.points) {
      put(out, q.x);
      put(out, q.y);
    }
    put<std::uint64_t>(out, layer.limbs.size());
    out.write(reinterpret_cast<const char*>(layer.limbs.data()),
              static_cast<std::streamsize>(layer.limbs.size() * sizeof(mp_limb_t)));
  }
  if (!out) throw error("table cache: write failed");
}

inline CountTable CountTable::load(std::istream& in, TableSpec spec, const std::string& tag) {
  using detail::get;
  char magic[sizeof(detail::kTableMagic)];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, detail::kTableMagic, sizeof(magic)) != 0) throw error("table cache: bad magic");
  if (get<std::uint32_t>(in) != detail::kTableVersion) throw error("table cache: unsupported version");
  std::string stored_tag(get<std::uint64_t>(in), '\0');
  in.read(stored_tag.data(), static_cast<std::streamsize>(stored_tag.size()));
  if (!in || stored_tag != tag) throw error("table cache: key mismatch");
  CountTable table(std::move(spec));
  if (get<std::int32_t>(in) != table.spec_.l) throw error("table cache: girth mismatch");
  const Point target{get<coord_t>(in), get<coord_t>(in)};
  if (target != table.spec_.target) throw error("table cache: target mismatch");
  const auto nsrc = get<std::uint64_t>(in);
  if (nsrc != table.spec_.sources.size()) throw error("table cache: source mismatch");
  for (const auto& s : table.spec_.sources) {
    const Point o{get<coord_t>(in), get<coord_t>(in)};
    const auto len = get<std::uint64_t>(in);
    if (o != s.origin || len != s.max_length) throw error("table cache: source mismatch");
  }
  table.init_geometry();
  table.windows_ = std::make_shared<const WindowSet>(table.spec_.l);
  const auto nlayers = get<std::uint64_t>(in);
  if (nlayers != table.max_len_ + 1) throw error("table cache: layer count mismatch");
  table.layers_.resize(nlayers);
  for (auto& layer : table.layers_) {
    layer.lo = {get<coord_t>(in), get<coord_t>(in)};
    layer.w = get<coord_t>(in);
    layer.h = get<coord_t>(in);
    layer.width = get<std::uint64_t>(in);
    layer.points.resize(get<std::uint64_t>(in));
    for (auto& q : layer.points) q = {get<coord_t>(in), get<coord_t>(in)};
    layer.limbs.resize(get<std::uint64_t>(in));
    in.read(reinterpret_cast<char*>(layer.limbs.data()),
            static_cast<std::streamsize>(layer.limbs.size() * sizeof(mp_limb_t)));
    if (!in) throw error("table cache: truncated file");
    if (layer.limbs.size() != layer.points.size() * table.windows_->full_count() * layer.width)
      throw error("table cache: corrupt layer");
    if (!layer.points.empty()) layer.index_points();
  }
  table.compute_start_counts();
  return table;
}

/// Table for walks from o to p of lengths d(o,p) + 2j, j <= k, confined to
/// the box spanned by o and p grown by k, intersected with the region.
inline CountTable build_table(const Region& region, Point o, Point p, int l, std::uint64_t k,
                              TableOptions opt = {}) {
  if (!region.contains(o) || !region.contains(p)) throw invalid_argument("endpoints must lie in the region");
  const auto box = LatticeBox::spanning(o, p).expanded(static_cast<coord_t>(k));
  TableSpec spec{region.restricted_to(box), p,
                 {{o, static_cast<std::uint64_t>(l1_distance(o, p)) + 2 * k}}, l};
  return CountTable::build(std::move(spec), opt);
}

/// Low-girth walk count for a given length from the table's first source.
inline BigNat low_girth_walk_count(const CountTable& table, std::uint64_t length) {
  const auto& s = table.sources().front();
  const auto d = static_cast<std::uint64_t>(l1_distance(s.origin, table.target()));
  if (length < d || (length - d) % 2 != 0 || length > s.max_length)
    throw invalid_argument("length has the wrong parity or is outside the table's range");
  return table.start_count(0, length);
}

/// Continuations of length t from q, where `window` lists the moves that led
/// to q (only the last 2l-1 matter).
inline BigNat completion_count(const CountTable& table, Point q, std::span<const Direction> window,
                               std::uint64_t t) {
  auto id = table.windows().find(window);
  if (!id) throw invalid_argument("window is not self-avoiding");
  return table.count_state(q, *id, t);
}

}  // namespace saw
