#pragma once

#include <cstdint>
#include <vector>

#include "saw/bignat.hpp"
#include "saw/error.hpp"
#include "saw/girth_dp.hpp"
#include "saw/lattice.hpp"
#include "saw/rng.hpp"

namespace saw {

struct SampleReport {
  std::uint64_t length = 0;
  std::uint64_t attempts = 0;
  Walk walk;

  double acceptance_estimate() const { return attempts ? 1.0 / static_cast<double>(attempts) : 0.0; }
};

inline constexpr std::uint64_t kDefaultMaxAttempts = 1000;

/// Uniform low-girth walk of the given length from sources()[source] to the
/// target, chosen step by step in proportion to exact completion counts.
inline Walk sample_low_girth_walk(const CountTable& table, RngStream& rng, std::uint64_t length,
                                  std::size_t source = 0) {
  const Point origin = table.sources().at(source).origin;
  if (table.start_count(source, length) == 0) throw invalid_argument("no low-girth walk of this length");
  const WindowSet& ws = table.windows();
  Walk w{origin, {}};
  w.moves.reserve(length);
  Point q = origin;
  std::uint32_t window = ws.empty_id();
  std::array<BigNat, 4> weight;
  std::array<std::int32_t, 4> next{};
  for (std::uint64_t remaining = length; remaining > 0; --remaining) {
    BigNat total = 0;
    for (Direction d : kDirections) {
      const int i = static_cast<int>(d);
      next[i] = ws.next(window, d);
      weight[i] = next[i] < 0 ? BigNat(0)
                              : table.count_state(step(q, d), static_cast<std::uint32_t>(next[i]), remaining - 1);
      total += weight[i];
    }
    if (total == 0) throw error("sampler reached a dead state");
    BigNat pick = uniform_bignat(rng, total);
    Direction chosen = Direction::U;
    for (Direction d : kDirections) {
      const BigNat& wd = weight[static_cast<int>(d)];
      if (pick < wd) {
        chosen = d;
        break;
      }
      pick -= wd;
    }
    w.moves.push_back(chosen);
    q = step(q, chosen);
    window = static_cast<std::uint32_t>(next[static_cast<int>(chosen)]);
  }
  return w;
}

/// Repeats sample_low_girth_walk until the walk is self-avoiding.
inline SampleReport sample_saw(const CountTable& table, RngStream& rng, std::uint64_t length,
                               std::uint64_t max_attempts = kDefaultMaxAttempts, std::size_t source = 0) {
  SampleReport report;
  report.length = length;
  while (report.attempts < max_attempts) {
    ++report.attempts;
    Walk w = sample_low_girth_walk(table, rng, length, source);
    if (is_self_avoiding(w)) {
      report.walk = std::move(w);
      return report;
    }
  }
  throw sampling_budget_exhausted(report.attempts);
}

/// Position of one draw inside an indexed family of tables.
struct FamilyDraw {
  std::size_t table = 0;
  std::size_t source = 0;
  std::uint64_t length = 0;
};

/// Draws (table, source, length) with probability proportional to its
/// low-girth walk count, summed exactly over the whole family.
inline FamilyDraw draw_family_entry(const std::vector<const CountTable*>& tables, RngStream& rng) {
  BigNat total = 0;
  for (const CountTable* t : tables)
    for (std::size_t s = 0; s < t->sources().size(); ++s)
      for (std::uint64_t len : t->start_lengths(s)) total += t->start_count(s, len);
  if (total == 0) throw invalid_argument("every count in the family is zero");
  BigNat pick = uniform_bignat(rng, total);
  for (std::size_t i = 0; i < tables.size(); ++i)
    for (std::size_t s = 0; s < tables[i]->sources().size(); ++s)
      for (std::uint64_t len : tables[i]->start_lengths(s)) {
        const BigNat c = tables[i]->start_count(s, len);
        if (pick < c) return {i, s, len};
        pick -= c;
      }
  throw error("family draw fell off the end");
}

struct FamilySample {
  FamilyDraw draw;
  Point from;
  Point to;
  Walk walk;
};

/// Uniform over all (table, source, length, walk) combinations in the family.
inline FamilySample sample_length_then_walk(const std::vector<const CountTable*>& tables, RngStream& rng) {
  const FamilyDraw d = draw_family_entry(tables, rng);
  const CountTable& t = *tables[d.table];
  return {d, t.sources()[d.source].origin, t.target(), sample_low_girth_walk(t, rng, d.length, d.source)};
}

}  // namespace saw
