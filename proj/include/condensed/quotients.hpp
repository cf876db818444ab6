#pragma once

#include <cstddef>
#include <vector>

#include "condensed/finset.hpp"
#include "condensed/smallcat.hpp"
#include "condensed/tower.hpp"

namespace condensed {

/// A discrete quotient of a tower in canonical form: a partition of the
/// minimal level it is representable at. The quotient set is the block set.
struct DiscreteQuotient {
  Tower tower;
  std::size_t level = 0;
  Partition partition;  // of tower.levels[level]

  FinSet quotient_set() const { return FinSet(partition.num_blocks()); }

  friend bool operator==(const DiscreteQuotient& a, const DiscreteQuotient& b) {
    return a.level == b.level && a.partition == b.partition;
  }
};

bool same_tower(const Tower& a, const Tower& b);

/// Block vector of q's partition pulled back to `level` >= q.level. Not
/// relabeled, so block indices stay aligned with q's own blocks.
std::vector<std::size_t> dq_lift_blocks(const DiscreteQuotient& q, std::size_t level);

/// Descends the partition to the minimal level it is a pullback from.
DiscreteQuotient dq_canonicalize(const Tower& t, std::size_t level, const Partition& p);

Order dq_compare(const DiscreteQuotient& a, const DiscreteQuotient& b);
DiscreteQuotient dq_inf(const DiscreteQuotient& a, const DiscreteQuotient& b);

/// For a <= b, the induced map on quotient sets (Hasse-edge triangle map).
FinMap dq_induced_map(const DiscreteQuotient& a, const DiscreteQuotient& b);

/// The projection evaluated on threads: thread e (indexed by top element)
/// goes to its block.
FinMap dq_projection_on_threads(const DiscreteQuotient& q);

/// All canonical discrete quotients representable at depth <= D, ordered by
/// (level, partition). Throws BoundExceeded when the top level is too big.
std::vector<DiscreteQuotient> dq_enumerate(const Tower& t,
                                           std::size_t bound = kDefaultPartitionBound);

struct DqDiagram {
  std::vector<DiscreteQuotient> quotients;
  SetDiagram diagram;              // index: thin poset category of the quotients
  FinSet cone_point;               // the thread set
  std::vector<FinMap> cone_legs;   // projection per quotient
};

/// The diagram of quotient sets over the dq poset together with its cone
/// from the thread set.
DqDiagram dq_diagram(const Tower& t, std::size_t bound = kDefaultPartitionBound);

}  // namespace condensed
