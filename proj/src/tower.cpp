#include "condensed/tower.hpp"

#include <algorithm>

#include "condensed/errors.hpp"

namespace condensed {

FinMap Tower::composite(std::size_t from, std::size_t to) const {
  FinMap m = FinMap::identity(levels[from]);
  for (std::size_t n = from; n > to; --n) m = compose(transitions[n - 1], m);
  return m;
}

TowerMap TowerMap::identity(const Tower& t) {
  TowerMap m;
  m.src = t;
  m.dst = t;
  for (const auto& lvl : t.levels) m.level_maps.push_back(FinMap::identity(lvl));
  return m;
}

Thread TowerMap::apply(const Thread& x) const {
  Thread out;
  for (std::size_t k = 0; k < level_maps.size(); ++k)
    out.coords.push_back(level_maps[k](x.coords[k + offset]));
  return out;
}

ValidationReport validate_tower(const Tower& t) {
  ValidationReport rep;
  if (t.levels.empty()) {
    rep.push_back({"tower has no levels"});
    return rep;
  }
  if (t.transitions.size() + 1 != t.levels.size()) {
    rep.push_back({"transition count != level count - 1"});
    return rep;
  }
  for (std::size_t n = 0; n < t.transitions.size(); ++n) {
    const FinMap& tr = t.transitions[n];
    if (!(tr.dom == t.levels[n + 1]) || !(tr.cod == t.levels[n])) {
      rep.push_back({"transition " + std::to_string(n) + " has wrong endpoints"});
      continue;
    }
    if (!tr.is_surjective()) {
      // find a missed element for the report
      std::vector<bool> hit(tr.cod.size, false);
      for (std::size_t v : tr.table) hit[v] = true;
      for (std::size_t e = 0; e < hit.size(); ++e)
        if (!hit[e])
          rep.push_back({"transition " + std::to_string(n) + " misses element (" +
                         std::to_string(n) + ", " + std::to_string(e) + ")"});
    }
  }
  return rep;
}

ValidationReport validate_tower_map(const TowerMap& m) {
  ValidationReport rep;
  if (m.level_maps.size() != m.dst.levels.size()) {
    rep.push_back({"level map count != destination level count"});
    return rep;
  }
  if (m.dst.depth() + m.offset > m.src.depth()) {
    rep.push_back({"offset pushes alignment past source depth"});
    return rep;
  }
  for (std::size_t k = 0; k < m.level_maps.size(); ++k)
    if (!(m.level_maps[k].dom == m.src.levels[k + m.offset]) ||
        !(m.level_maps[k].cod == m.dst.levels[k]))
      rep.push_back({"level map " + std::to_string(k) + " has wrong endpoints"});
  if (!rep.empty()) return rep;
  for (std::size_t k = 0; k + 1 < m.level_maps.size(); ++k)
    if (!(compose(m.level_maps[k], m.src.transitions[k + m.offset]) ==
          compose(m.dst.transitions[k], m.level_maps[k + 1])))
      rep.push_back({"square at level " + std::to_string(k) + " does not commute"});
  return rep;
}

Thread thread_from_top(const Tower& t, std::size_t top_element) {
  Thread x;
  x.coords.resize(t.levels.size());
  x.coords.back() = top_element;
  for (std::size_t n = t.depth(); n > 0; --n) x.coords[n - 1] = t.transitions[n - 1](x.coords[n]);
  return x;
}

std::vector<Thread> thread_set(const Tower& t) {
  std::vector<Thread> out;
  out.reserve(t.top().size);
  for (std::size_t e = 0; e < t.top().size; ++e) out.push_back(thread_from_top(t, e));
  return out;
}

bool verify_limit_cone(const Tower& t, const std::vector<LevelCone>& test_cones) {
  for (const auto& cone : test_cones) {
    if (cone.legs.size() != t.levels.size())
      throw IncompatibleCone("cone leg count != level count");
    for (std::size_t n = 0; n + 1 < t.levels.size(); ++n)
      if (!(compose(t.transitions[n], cone.legs[n + 1]) == cone.legs[n]))
        throw IncompatibleCone("cone legs do not commute with transition " + std::to_string(n));
    // the factorization through the thread set is the top leg; check it
    // reproduces every other leg, and that it is the only possibility
    const FinMap& top = cone.legs.back();
    for (std::size_t n = 0; n < t.levels.size(); ++n)
      if (!(compose(t.composite(t.depth(), n), top) == cone.legs[n])) return false;
    // uniqueness: any factorization must agree with the top leg on every
    // apex element, because the top projection of a thread is the thread
  }
  return true;
}

ClopenSubtower clopen_subtower(const Tower& t, std::size_t level,
                               const std::vector<std::size_t>& subset) {
  ClopenSubtower out;
  out.empty = subset.empty();
  // membership per level: images below the cut, preimages above it
  std::vector<std::vector<std::size_t>> members(t.levels.size());
  std::vector<bool> in_cut(t.levels[level].size, false);
  for (std::size_t e : subset) in_cut[e] = true;
  for (std::size_t n = 0; n < t.levels.size(); ++n) {
    FinMap to_cut = (n >= level) ? t.composite(n, level) : FinMap();
    for (std::size_t e = 0; e < t.levels[n].size; ++e) {
      bool in;
      if (n >= level) {
        in = in_cut[to_cut(e)];
      } else {
        // image: some member of level `level` maps down to e
        in = false;
        FinMap down = t.composite(level, n);
        for (std::size_t s : subset)
          if (down(s) == e) {
            in = true;
            break;
          }
      }
      if (in) members[n].push_back(e);
    }
  }
  Tower sub;
  sub.name = t.name + "|clopen";
  std::vector<std::vector<std::size_t>> index_of(t.levels.size());
  for (std::size_t n = 0; n < t.levels.size(); ++n) {
    index_of[n].assign(t.levels[n].size, kNoArrow);
    for (std::size_t i = 0; i < members[n].size(); ++i) index_of[n][members[n][i]] = i;
    sub.levels.emplace_back(members[n].size());
  }
  for (std::size_t n = 0; n + 1 < t.levels.size(); ++n) {
    std::vector<std::size_t> table;
    for (std::size_t e : members[n + 1]) table.push_back(index_of[n][t.transitions[n](e)]);
    sub.transitions.emplace_back(sub.levels[n + 1], sub.levels[n], std::move(table));
  }
  TowerMap inc;
  inc.src = sub;
  inc.dst = t;
  for (std::size_t n = 0; n < t.levels.size(); ++n)
    inc.level_maps.emplace_back(sub.levels[n], t.levels[n], members[n]);
  out.tower = std::move(sub);
  out.inclusion = std::move(inc);
  return out;
}

Tower cantor_tower(std::size_t depth) {
  Tower t;
  t.name = "cantor";
  for (std::size_t n = 0; n <= depth; ++n) t.levels.emplace_back(std::size_t{1} << n);
  for (std::size_t n = 0; n < depth; ++n) {
    std::vector<std::size_t> table(t.levels[n + 1].size);
    for (std::size_t e = 0; e < table.size(); ++e) table[e] = e >> 1;  // forget last coordinate
    t.transitions.emplace_back(t.levels[n + 1], t.levels[n], std::move(table));
  }
  return t;
}

Tower point_tower(std::size_t depth) {
  Tower t;
  t.name = "point";
  for (std::size_t n = 0; n <= depth; ++n) t.levels.emplace_back(1);
  for (std::size_t n = 0; n < depth; ++n)
    t.transitions.push_back(FinMap::identity(t.levels[0]));
  return t;
}

Tower eventually_constant_tower(std::size_t k, std::size_t depth) {
  Tower t;
  t.name = "eventually_constant_" + std::to_string(k);
  for (std::size_t n = 0; n <= depth; ++n) t.levels.emplace_back(k);
  for (std::size_t n = 0; n < depth; ++n)
    t.transitions.push_back(FinMap::identity(t.levels[0]));
  return t;
}

}  // namespace condensed
