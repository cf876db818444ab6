#include "condensed/quotients.hpp"

#include <algorithm>
#include <optional>

#include "condensed/errors.hpp"

namespace condensed {

bool same_tower(const Tower& a, const Tower& b) {
  if (a.levels.size() != b.levels.size()) return false;
  for (std::size_t n = 0; n < a.levels.size(); ++n)
    if (!(a.levels[n] == b.levels[n])) return false;
  for (std::size_t n = 0; n < a.transitions.size(); ++n)
    if (a.transitions[n].table != b.transitions[n].table) return false;
  return true;
}

std::vector<std::size_t> dq_lift_blocks(const DiscreteQuotient& q, std::size_t level) {
  FinMap down = q.tower.composite(level, q.level);
  std::vector<std::size_t> out(q.tower.levels[level].size);
  for (std::size_t e = 0; e < out.size(); ++e) out[e] = q.partition.block_of[down(e)];
  return out;
}

DiscreteQuotient dq_canonicalize(const Tower& t, std::size_t level, const Partition& p) {
  if (p.block_of.size() != t.levels[level].size)
    throw MalformedInput("dq_canonicalize: partition ground != declared level");
  std::vector<std::size_t> blocks = p.block_of;
  std::size_t n = level;
  while (n > 0) {
    // descends iff the block is constant on each fibre of t_{n-1}
    const FinMap& tr = t.transitions[n - 1];
    std::vector<std::optional<std::size_t>> below(t.levels[n - 1].size);
    bool ok = true;
    for (std::size_t e = 0; e < blocks.size() && ok; ++e) {
      auto& slot = below[tr(e)];
      if (!slot)
        slot = blocks[e];
      else if (*slot != blocks[e])
        ok = false;
    }
    if (!ok) break;
    std::vector<std::size_t> descended(t.levels[n - 1].size);
    for (std::size_t e = 0; e < descended.size(); ++e) descended[e] = *below[e];
    blocks = std::move(descended);
    --n;
  }
  DiscreteQuotient q;
  q.tower = t;
  q.level = n;
  q.partition = Partition(t.levels[n], Partition::canonicalize(blocks));
  return q;
}

namespace {

// relation comparison on raw block vectors over a common ground
Order compare_blocks(const std::vector<std::size_t>& p, const std::vector<std::size_t>& q) {
  auto refines = [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j)
        if (a[i] == a[j] && b[i] != b[j]) return false;
    return true;
  };
  const bool le = refines(p, q);
  const bool ge = refines(q, p);
  if (le && ge) return Order::eq;
  if (le) return Order::le;
  if (ge) return Order::ge;
  return Order::incomparable;
}

}  // namespace

Order dq_compare(const DiscreteQuotient& a, const DiscreteQuotient& b) {
  if (!same_tower(a.tower, b.tower)) throw TowerMismatch("dq_compare: different towers");
  const std::size_t lift = std::max(a.level, b.level);
  return compare_blocks(dq_lift_blocks(a, lift), dq_lift_blocks(b, lift));
}

DiscreteQuotient dq_inf(const DiscreteQuotient& a, const DiscreteQuotient& b) {
  if (!same_tower(a.tower, b.tower)) throw TowerMismatch("dq_inf: different towers");
  const std::size_t lift = std::max(a.level, b.level);
  auto pa = dq_lift_blocks(a, lift);
  auto pb = dq_lift_blocks(b, lift);
  std::size_t nb = 1 + (pb.empty() ? 0 : *std::max_element(pb.begin(), pb.end()));
  std::vector<std::size_t> combined(pa.size());
  for (std::size_t i = 0; i < pa.size(); ++i) combined[i] = pa[i] * nb + pb[i];
  Partition meet(a.tower.levels[lift], Partition::canonicalize(combined));
  return dq_canonicalize(a.tower, lift, meet);
}

FinMap dq_induced_map(const DiscreteQuotient& a, const DiscreteQuotient& b) {
  const Order ord = dq_compare(a, b);
  if (ord != Order::le && ord != Order::eq)
    throw NotComparable("dq_induced_map: first quotient does not refine second");
  const std::size_t lift = std::max(a.level, b.level);
  auto pa = dq_lift_blocks(a, lift);
  auto pb = dq_lift_blocks(b, lift);
  FinSet dom = a.quotient_set();
  FinSet cod = b.quotient_set();
  std::vector<std::size_t> t(dom.size);
  for (std::size_t e = 0; e < pa.size(); ++e) t[pa[e]] = pb[e];
  return FinMap(dom, cod, std::move(t));
}

FinMap dq_projection_on_threads(const DiscreteQuotient& q) {
  auto blocks = dq_lift_blocks(q, q.tower.depth());
  return FinMap(FinSet(q.tower.top().size), q.quotient_set(), std::move(blocks));
}

std::vector<DiscreteQuotient> dq_enumerate(const Tower& t, std::size_t bound) {
  auto partitions = enumerate_partitions(t.top(), bound);
  std::vector<DiscreteQuotient> out;
  out.reserve(partitions.size());
  for (const auto& p : partitions) out.push_back(dq_canonicalize(t, t.depth(), p));
  std::sort(out.begin(), out.end(), [](const DiscreteQuotient& a, const DiscreteQuotient& b) {
    if (a.level != b.level) return a.level < b.level;
    return a.partition < b.partition;
  });
  return out;
}

DqDiagram dq_diagram(const Tower& t, std::size_t bound) {
  DqDiagram out;
  out.quotients = dq_enumerate(t, bound);
  const std::size_t n = out.quotients.size();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Order ord = dq_compare(out.quotients[i], out.quotients[j]);
      le[i][j] = (ord == Order::le || ord == Order::eq);
    }
  out.diagram.index = FinCat::from_relation(le);
  for (const auto& q : out.quotients) out.diagram.value_sets.push_back(q.quotient_set());
  for (const auto& ar : out.diagram.index.arrows)
    out.diagram.value_maps.push_back(dq_induced_map(out.quotients[ar.src], out.quotients[ar.dst]));
  out.cone_point = FinSet(t.top().size);
  for (const auto& q : out.quotients) out.cone_legs.push_back(dq_projection_on_threads(q));
  return out;
}

}  // namespace condensed
