#pragma once

#include <cstddef>
#include <vector>

#include "condensed/finset.hpp"
#include "condensed/quotients.hpp"
#include "condensed/tower.hpp"

namespace condensed {

/// A locally constant map out of a tower, stored as a finite-level
/// factorization. Construction normalizes to the minimal level, so map
/// equality is structural comparison.
struct LocConstMap {
  Tower src;
  FinSet target;
  std::size_t level = 0;
  std::vector<std::size_t> table;  // src.levels[level] -> target

  friend bool operator==(const LocConstMap& a, const LocConstMap& b) {
    return a.target == b.target && a.level == b.level && a.table == b.table;
  }
};

/// Builds a locally constant map and eagerly descends it to its minimal
/// level (the same descent test as dq_canonicalize on the fibre partition).
LocConstMap lc_make(const Tower& src, const FinSet& target, std::size_t level,
                    const std::vector<std::size_t>& table);

LocConstMap lc_constant(const Tower& src, const FinSet& target, std::size_t value);

std::size_t lc_eval(const LocConstMap& f, const Thread& x);

/// The map's value table on the top level.
std::vector<std::size_t> lc_top_table(const LocConstMap& f);

struct Fibre {
  std::size_t value = 0;  // the attained target element
  ClopenSubtower subtower;
};

/// Nonempty fibres in increasing order of attained value; they exhaust the
/// threads pairwise disjointly.
std::vector<Fibre> lc_fibres(const LocConstMap& f);

/// The projection of a canonical discrete quotient as a locally constant map.
LocConstMap dq_projection(const DiscreteQuotient& q);

/// Minimal factorization: the coarsest canonical quotient q with
/// f = g . projection(q); g is injective.
std::pair<DiscreteQuotient, FinMap> lc_factor_minimal(const LocConstMap& f);

/// Precomposition with a tower map g : T -> S (f defined on S).
LocConstMap lc_precompose(const LocConstMap& f, const TowerMap& g);

/// Restriction to a clopen subtower (precomposition with the inclusion).
LocConstMap lc_restrict(const LocConstMap& f, const TowerMap& inclusion);

/// All locally constant maps src -> target, in lexicographic top-table order.
std::vector<LocConstMap> lc_enumerate(const Tower& src, const FinSet& target);

}  // namespace condensed
