#include "condensed/locconst.hpp"

#include <algorithm>
#include <optional>

#include "condensed/errors.hpp"

namespace condensed {

LocConstMap lc_make(const Tower& src, const FinSet& target, std::size_t level,
                    const std::vector<std::size_t>& table) {
  if (level >= src.levels.size()) throw MalformedInput("lc_make: level beyond tower depth");
  if (table.size() != src.levels[level].size)
    throw MalformedInput("lc_make: table length != level size");
  for (std::size_t v : table)
    if (v >= target.size) throw MalformedInput("lc_make: table value outside target");
  std::vector<std::size_t> values = table;
  std::size_t n = level;
  while (n > 0) {
    // the map descends iff its value is constant on each transition fibre
    const FinMap& tr = src.transitions[n - 1];
    std::vector<std::optional<std::size_t>> below(src.levels[n - 1].size);
    bool ok = true;
    for (std::size_t e = 0; e < values.size() && ok; ++e) {
      auto& slot = below[tr(e)];
      if (!slot)
        slot = values[e];
      else if (*slot != values[e])
        ok = false;
    }
    if (!ok) break;
    std::vector<std::size_t> descended(src.levels[n - 1].size);
    for (std::size_t e = 0; e < descended.size(); ++e) descended[e] = *below[e];
    values = std::move(descended);
    --n;
  }
  LocConstMap f;
  f.src = src;
  f.target = target;
  f.level = n;
  f.table = std::move(values);
  return f;
}

LocConstMap lc_constant(const Tower& src, const FinSet& target, std::size_t value) {
  return lc_make(src, target, 0,
                 std::vector<std::size_t>(src.levels[0].size, value));
}

std::size_t lc_eval(const LocConstMap& f, const Thread& x) {
  return f.table[x.coords[f.level]];
}

std::vector<std::size_t> lc_top_table(const LocConstMap& f) {
  FinMap down = f.src.composite(f.src.depth(), f.level);
  std::vector<std::size_t> out(f.src.top().size);
  for (std::size_t e = 0; e < out.size(); ++e) out[e] = f.table[down(e)];
  return out;
}

std::vector<Fibre> lc_fibres(const LocConstMap& f) {
  std::vector<Fibre> out;
  for (std::size_t v = 0; v < f.target.size; ++v) {
    std::vector<std::size_t> subset;
    for (std::size_t e = 0; e < f.table.size(); ++e)
      if (f.table[e] == v) subset.push_back(e);
    if (subset.empty()) continue;
    Fibre fib;
    fib.value = v;
    fib.subtower = clopen_subtower(f.src, f.level, subset);
    out.push_back(std::move(fib));
  }
  return out;
}

LocConstMap dq_projection(const DiscreteQuotient& q) {
  return lc_make(q.tower, q.quotient_set(), q.level, q.partition.block_of);
}

std::pair<DiscreteQuotient, FinMap> lc_factor_minimal(const LocConstMap& f) {
  // f is already at its minimal level; the fibre partition there cannot
  // descend further (the values separate exactly what the blocks separate)
  std::vector<std::size_t> blocks = Partition::canonicalize(f.table);
  DiscreteQuotient q;
  q.tower = f.src;
  q.level = f.level;
  q.partition = Partition(f.src.levels[f.level], blocks);
  FinSet dom = q.quotient_set();
  std::vector<std::size_t> table(dom.size);
  for (std::size_t e = 0; e < blocks.size(); ++e) table[blocks[e]] = f.table[e];
  FinMap g(dom, f.target, std::move(table));
  if (!g.is_injective()) throw MalformedInput("lc_factor_minimal: factor not injective");
  return {std::move(q), std::move(g)};
}

LocConstMap lc_precompose(const LocConstMap& f, const TowerMap& g) {
  if (!same_tower(f.src, g.dst)) throw TowerMismatch("lc_precompose: map lands elsewhere");
  // f factors at dst level n, so f.g factors at src level n + offset
  const std::size_t n = f.level;
  const FinMap& at = g.level_maps[n];
  std::vector<std::size_t> table(at.dom.size);
  for (std::size_t e = 0; e < table.size(); ++e) table[e] = f.table[at(e)];
  return lc_make(g.src, f.target, n + g.offset, table);
}

LocConstMap lc_restrict(const LocConstMap& f, const TowerMap& inclusion) {
  return lc_precompose(f, inclusion);
}

std::vector<LocConstMap> lc_enumerate(const Tower& src, const FinSet& target) {
  std::vector<LocConstMap> out;
  const std::size_t n = src.top().size;
  std::vector<std::size_t> table(n, 0);
  if (target.size == 0 && n > 0) return out;
  while (true) {
    out.push_back(lc_make(src, target, src.depth(), table));
    std::size_t i = n;
    while (i > 0 && table[i - 1] + 1 == target.size) table[--i] = 0;
    if (i == 0) break;
    ++table[i - 1];
  }
  return out;
}

}  // namespace condensed
