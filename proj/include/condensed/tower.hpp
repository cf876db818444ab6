#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "condensed/finset.hpp"
#include "condensed/smallcat.hpp"

namespace condensed {

/// A truncated light profinite set: finite levels S_0..S_D with surjective
/// transitions t_n : S_{n+1} -> S_n. All statements about a tower are
/// certified up to its depth D.
struct Tower {
  std::string name;
  std::vector<FinSet> levels;
  std::vector<FinMap> transitions;  // transitions[n] : levels[n+1] -> levels[n]

  std::size_t depth() const { return levels.size() - 1; }
  const FinSet& top() const { return levels.back(); }

  /// Composite transition levels[from] -> levels[to], from >= to.
  FinMap composite(std::size_t from, std::size_t to) const;
};

/// A point of the truncated limit: one coordinate per level, compatible
/// with transitions. With surjective transitions, determined by coords[D].
struct Thread {
  std::vector<std::size_t> coords;

  friend bool operator==(const Thread& a, const Thread& b) { return a.coords == b.coords; }
};

/// A level-aligned map of towers: level_maps[k] : src.levels[k+offset] ->
/// dst.levels[k], squares with transitions commuting. This is the class of
/// maps representable at depth D.
struct TowerMap {
  Tower src;
  Tower dst;
  std::size_t offset = 0;
  std::vector<FinMap> level_maps;  // one per dst level

  static TowerMap identity(const Tower& t);
  Thread apply(const Thread& x) const;
};

ValidationReport validate_tower(const Tower& t);
ValidationReport validate_tower_map(const TowerMap& m);

/// All threads, ordered by top coordinate (bijective with the top level).
std::vector<Thread> thread_set(const Tower& t);
Thread thread_from_top(const Tower& t, std::size_t top_element);

/// A cone over the levels of a tower: legs[n] : apex -> levels[n].
struct LevelCone {
  FinSet apex;
  std::vector<FinMap> legs;
};

/// Each compatible cone must factor uniquely through the thread set via its
/// top leg. Throws IncompatibleCone on a leg family that does not commute
/// with the transitions.
bool verify_limit_cone(const Tower& t, const std::vector<LevelCone>& test_cones);

struct ClopenSubtower {
  Tower tower;
  TowerMap inclusion;
  bool empty = false;
};

/// The clopen subset of the (truncated) limit cut out by `subset` at the
/// given level: preimages above, images below, elements relabeled in order.
ClopenSubtower clopen_subtower(const Tower& t, std::size_t level,
                               const std::vector<std::size_t>& subset);

Tower cantor_tower(std::size_t depth);
Tower point_tower(std::size_t depth);
Tower eventually_constant_tower(std::size_t k, std::size_t depth);

}  // namespace condensed
