#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace condensed {

/// A finite set with elements 0..size-1 and optional display labels.
struct FinSet {
  std::size_t size = 0;
  std::vector<std::string> labels;  // empty, or one label per element

  FinSet() = default;
  explicit FinSet(std::size_t n) : size(n) {}
  FinSet(std::size_t n, std::vector<std::string> lbl) : size(n), labels(std::move(lbl)) {}

  std::string label(std::size_t i) const;

  friend bool operator==(const FinSet& a, const FinSet& b) { return a.size == b.size; }
};

/// A function between finite sets, given by its value table.
struct FinMap {
  FinSet dom;
  FinSet cod;
  std::vector<std::size_t> table;  // table[i] < cod.size, length dom.size

  FinMap() = default;
  FinMap(FinSet d, FinSet c, std::vector<std::size_t> t);

  std::size_t operator()(std::size_t i) const { return table[i]; }

  static FinMap identity(const FinSet& s);
  /// Constant map dom -> cod hitting `value`.
  static FinMap constant(const FinSet& dom, const FinSet& cod, std::size_t value);

  bool is_surjective() const;
  bool is_injective() const;
  bool is_bijective() const { return dom.size == cod.size && is_injective(); }

  friend bool operator==(const FinMap& a, const FinMap& b) {
    return a.dom == b.dom && a.cod == b.cod && a.table == b.table;
  }
};

/// g after f.
FinMap compose(const FinMap& g, const FinMap& f);

/// A set partition in restricted-growth form: block indices appear in
/// first-occurrence order, so equality and ordering are plain list comparison.
struct Partition {
  FinSet ground;
  std::vector<std::size_t> block_of;  // length ground.size

  Partition() = default;
  Partition(FinSet g, std::vector<std::size_t> blocks);

  std::size_t num_blocks() const;
  bool is_discrete() const;  // every element its own block

  static Partition discrete(const FinSet& g);
  static Partition trivial(const FinSet& g);  // one block (or zero, if empty)

  /// Relabels blocks into restricted-growth form.
  static std::vector<std::size_t> canonicalize(const std::vector<std::size_t>& blocks);

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.ground == b.ground && a.block_of == b.block_of;
  }
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.block_of < b.block_of;
  }
};

enum class Order { le, ge, eq, incomparable };

std::pair<FinSet, std::vector<FinMap>> product_with_projections(const std::vector<FinSet>& factors);
std::pair<FinSet, std::vector<FinMap>> coproduct_with_inclusions(const std::vector<FinSet>& summands);

inline constexpr std::size_t kDefaultPartitionBound = 10;

/// All partitions of `ground` in lexicographic restricted-growth order;
/// count is the Bell number of the size. Throws BoundExceeded above `bound`.
std::vector<Partition> enumerate_partitions(const FinSet& ground,
                                            std::size_t bound = kDefaultPartitionBound);

/// Common refinement (intersection of the equivalence relations).
Partition partition_meet(const Partition& p, const Partition& q);

/// p <= q iff every block of p is contained in a block of q.
Order partition_compare(const Partition& p, const Partition& q);

/// For p <= q, the unique map blocks(p) -> blocks(q) commuting with both
/// projections from the ground set.
FinMap induced_quotient_map(const Partition& p, const Partition& q);

}  // namespace condensed
