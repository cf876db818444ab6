#include "condensed/finset.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "condensed/errors.hpp"

namespace condensed {

std::string FinSet::label(std::size_t i) const {
  if (i < labels.size()) return labels[i];
  return std::to_string(i);
}

FinMap::FinMap(FinSet d, FinSet c, std::vector<std::size_t> t)
    : dom(std::move(d)), cod(std::move(c)), table(std::move(t)) {
  if (table.size() != dom.size) throw MalformedInput("FinMap: table length != domain size");
  for (std::size_t v : table)
    if (v >= cod.size) throw MalformedInput("FinMap: table entry out of codomain range");
}

FinMap FinMap::identity(const FinSet& s) {
  std::vector<std::size_t> t(s.size);
  for (std::size_t i = 0; i < s.size; ++i) t[i] = i;
  return FinMap(s, s, std::move(t));
}

FinMap FinMap::constant(const FinSet& dom, const FinSet& cod, std::size_t value) {
  return FinMap(dom, cod, std::vector<std::size_t>(dom.size, value));
}

bool FinMap::is_surjective() const {
  std::vector<bool> hit(cod.size, false);
  for (std::size_t v : table) hit[v] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool FinMap::is_injective() const {
  std::vector<bool> hit(cod.size, false);
  for (std::size_t v : table) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

FinMap compose(const FinMap& g, const FinMap& f) {
  if (f.cod.size != g.dom.size) throw MalformedInput("compose: domain/codomain mismatch");
  std::vector<std::size_t> t(f.table.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = g.table[f.table[i]];
  return FinMap(f.dom, g.cod, std::move(t));
}

Partition::Partition(FinSet g, std::vector<std::size_t> blocks)
    : ground(std::move(g)), block_of(std::move(blocks)) {
  if (block_of.size() != ground.size) throw MalformedInput("Partition: block list length != ground size");
  // enforce restricted growth
  std::size_t next = 0;
  for (std::size_t b : block_of) {
    if (b > next) throw MalformedInput("Partition: not in restricted-growth form");
    if (b == next) ++next;
  }
}

std::size_t Partition::num_blocks() const {
  if (block_of.empty()) return 0;
  return *std::max_element(block_of.begin(), block_of.end()) + 1;
}

bool Partition::is_discrete() const { return num_blocks() == ground.size; }

Partition Partition::discrete(const FinSet& g) {
  std::vector<std::size_t> b(g.size);
  for (std::size_t i = 0; i < g.size; ++i) b[i] = i;
  return Partition(g, std::move(b));
}

Partition Partition::trivial(const FinSet& g) {
  return Partition(g, std::vector<std::size_t>(g.size, 0));
}

std::vector<std::size_t> Partition::canonicalize(const std::vector<std::size_t>& blocks) {
  std::vector<std::size_t> relabel;
  std::vector<std::size_t> out(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    auto it = std::find(relabel.begin(), relabel.end(), blocks[i]);
    if (it == relabel.end()) {
      out[i] = relabel.size();
      relabel.push_back(blocks[i]);
    } else {
      out[i] = static_cast<std::size_t>(it - relabel.begin());
    }
  }
  return out;
}

std::pair<FinSet, std::vector<FinMap>> product_with_projections(const std::vector<FinSet>& factors) {
  std::size_t total = 1;
  for (const auto& f : factors) total *= f.size;
  FinSet prod(total);
  // mixed-radix: last factor varies fastest
  std::vector<FinMap> projections;
  projections.reserve(factors.size());
  std::size_t stride = total;
  for (const auto& f : factors) {
    stride = (f.size == 0) ? 0 : stride / f.size;
    std::vector<std::size_t> t(total);
    if (f.size > 0)
      for (std::size_t i = 0; i < total; ++i) t[i] = (i / stride) % f.size;
    projections.emplace_back(prod, f, std::move(t));
  }
  return {prod, std::move(projections)};
}

std::pair<FinSet, std::vector<FinMap>> coproduct_with_inclusions(const std::vector<FinSet>& summands) {
  std::size_t total = 0;
  for (const auto& s : summands) total += s.size;
  FinSet sum(total);
  std::vector<FinMap> inclusions;
  inclusions.reserve(summands.size());
  std::size_t offset = 0;
  for (const auto& s : summands) {
    std::vector<std::size_t> t(s.size);
    for (std::size_t i = 0; i < s.size; ++i) t[i] = offset + i;
    offset += s.size;
    inclusions.emplace_back(s, sum, std::move(t));
  }
  return {sum, std::move(inclusions)};
}

std::vector<Partition> enumerate_partitions(const FinSet& ground, std::size_t bound) {
  if (ground.size > bound)
    throw BoundExceeded("enumerate_partitions: ground size " + std::to_string(ground.size) +
                        " exceeds bound " + std::to_string(bound));
  std::vector<Partition> out;
  std::vector<std::size_t> rg(ground.size, 0);
  // backtracking over restricted-growth strings, lexicographic by construction
  auto rec = [&](auto&& self, std::size_t pos, std::size_t maxb) -> void {
    if (pos == ground.size) {
      out.emplace_back(ground, rg);
      return;
    }
    for (std::size_t b = 0; b <= maxb; ++b) {
      rg[pos] = b;
      self(self, pos + 1, std::max(maxb, b + 1));
    }
  };
  if (ground.size == 0) {
    out.emplace_back(ground, std::vector<std::size_t>{});
  } else {
    rg[0] = 0;
    rec(rec, 1, 1);
  }
  return out;
}

Partition partition_meet(const Partition& p, const Partition& q) {
  if (!(p.ground == q.ground)) throw GroundMismatch("partition_meet: different ground sets");
  const std::size_t n = p.ground.size;
  std::vector<std::size_t> combined(n);
  const std::size_t qb = q.num_blocks();
  for (std::size_t i = 0; i < n; ++i) combined[i] = p.block_of[i] * (qb ? qb : 1) + q.block_of[i];
  return Partition(p.ground, Partition::canonicalize(combined));
}

Order partition_compare(const Partition& p, const Partition& q) {
  if (!(p.ground == q.ground)) throw GroundMismatch("partition_compare: different ground sets");
  const std::size_t n = p.ground.size;
  // p <= q iff block_of[p] refines block_of[q]: same p-block implies same q-block
  auto refines = [n](const Partition& a, const Partition& b) {
    std::vector<std::optional<std::size_t>> image(a.num_blocks());
    for (std::size_t i = 0; i < n; ++i) {
      auto& img = image[a.block_of[i]];
      if (!img)
        img = b.block_of[i];
      else if (*img != b.block_of[i])
        return false;
    }
    return true;
  };
  const bool le = refines(p, q);
  const bool ge = refines(q, p);
  if (le && ge) return Order::eq;
  if (le) return Order::le;
  if (ge) return Order::ge;
  return Order::incomparable;
}

FinMap induced_quotient_map(const Partition& p, const Partition& q) {
  const Order ord = partition_compare(p, q);
  if (ord != Order::le && ord != Order::eq)
    throw NotComparable("induced_quotient_map: first partition does not refine second");
  FinSet dom(p.num_blocks());
  FinSet cod(q.num_blocks());
  std::vector<std::size_t> t(dom.size);
  for (std::size_t i = 0; i < p.ground.size; ++i) t[p.block_of[i]] = q.block_of[i];
  return FinMap(dom, cod, std::move(t));
}

}  // namespace condensed
