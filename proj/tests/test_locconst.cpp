#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "condensed/locconst.hpp"

using namespace condensed;

namespace {

std::vector<std::vector<std::size_t>> all_maps(std::size_t dom, std::size_t cod) {
  std::vector<std::vector<std::size_t>> out;
  if (dom == 0) return {{}};
  if (cod == 0) return out;
  std::vector<std::size_t> t(dom, 0);
  while (true) {
    out.push_back(t);
    std::size_t i = dom;
    while (i > 0 && t[i - 1] == cod - 1) t[--i] = 0;
    if (i == 0) break;
    ++t[i - 1];
  }
  return out;
}

std::vector<Tower> small_towers() {
  return {cantor_tower(2), point_tower(2), eventually_constant_tower(3, 2),
          eventually_constant_tower(5, 1)};
}

}  // namespace

TEST_CASE("construction descends to the minimal level") {
  Tower c = cantor_tower(2);
  // constant on the fibres of level 2 -> level 1: really a level-1 map
  LocConstMap f = lc_make(c, FinSet(2), 2, {0, 0, 1, 1});
  CHECK(f.level == 1);
  CHECK(f.table == std::vector<std::size_t>{0, 1});
  // genuinely level-2 data stays at level 2
  LocConstMap g = lc_make(c, FinSet(2), 2, {0, 1, 1, 1});
  CHECK(g.level == 2);
  // constants descend to level 0
  CHECK(lc_constant(c, FinSet(3), 2).level == 0);
  CHECK(lc_constant(c, FinSet(3), 2).table == std::vector<std::size_t>{2});
}

TEST_CASE("evaluation agrees with the top-level table on every thread") {
  for (const Tower& t : small_towers())
    for (const auto& table : all_maps(t.top().size, 2)) {
      LocConstMap f = lc_make(t, FinSet(2), t.depth(), table);
      CHECK(lc_top_table(f) == table);
      for (const auto& th : thread_set(t)) CHECK(lc_eval(f, th) == table[th.coords.back()]);
    }
}

TEST_CASE("fibres partition the threads by value") {
  Tower c = cantor_tower(2);
  LocConstMap f = lc_make(c, FinSet(3), 2, {0, 2, 0, 1});
  auto fibres = lc_fibres(f);
  CHECK(fibres.size() == 3);
  std::set<std::size_t> seen;
  std::size_t total = 0;
  for (const auto& fib : fibres) {
    CHECK(!fib.subtower.empty);
    for (const auto& th : thread_set(fib.subtower.tower)) {
      Thread img = fib.subtower.inclusion.apply(th);
      CHECK(lc_eval(f, img) == fib.value);
      CHECK(seen.insert(img.coords.back()).second);  // disjointness
      ++total;
    }
  }
  CHECK(total == thread_set(c).size());
  CHECK(std::is_sorted(fibres.begin(), fibres.end(),
                       [](const Fibre& a, const Fibre& b) { return a.value < b.value; }));
}

TEST_CASE("minimal factorization: exhaustive over |S_top| <= 5") {
  for (const Tower& t : small_towers()) {
    auto qs = dq_enumerate(t);
    for (std::size_t y = 1; y <= 3; ++y)
      for (const auto& table : all_maps(t.top().size, y)) {
        LocConstMap f = lc_make(t, FinSet(y), t.depth(), table);
        auto [q, g] = lc_factor_minimal(f);
        CHECK(g.is_injective());
        // reproduces f on all threads
        FinMap proj = dq_projection_on_threads(q);
        for (const auto& th : thread_set(t))
          CHECK(g(proj(th.coords.back())) == lc_eval(f, th));
        // no strictly coarser canonical quotient factors f
        for (const auto& coarser : qs) {
          if (dq_compare(q, coarser) != Order::le) continue;
          FinMap cproj = dq_projection_on_threads(coarser);
          bool factors = true;
          std::vector<std::size_t> val(coarser.quotient_set().size, y);
          for (const auto& th : thread_set(t)) {
            std::size_t b = cproj(th.coords.back()), v = lc_eval(f, th);
            if (val[b] == y)
              val[b] = v;
            else if (val[b] != v)
              factors = false;
          }
          CHECK(!factors);
        }
      }
  }
}

TEST_CASE("the projection of a quotient factors minimally through itself") {
  Tower c = cantor_tower(2);
  for (const auto& q : dq_enumerate(c)) {
    LocConstMap p = dq_projection(q);
    CHECK(p.level == q.level);
    auto [qq, g] = lc_factor_minimal(p);
    CHECK(qq == q);
    CHECK(g.is_bijective());
  }
}

TEST_CASE("precomposition with thread-level maps") {
  Tower c = cantor_tower(2);
  LocConstMap f = lc_make(c, FinSet(2), 2, {0, 1, 1, 0});

  // restricting to a clopen half keeps the values of the included threads
  ClopenSubtower half = clopen_subtower(c, 1, {0});
  LocConstMap r = lc_restrict(f, half.inclusion);
  for (const auto& th : thread_set(half.tower))
    CHECK(lc_eval(r, th) == lc_eval(f, half.inclusion.apply(th)));

  // precomposition with the identity is the identity
  CHECK(lc_precompose(f, TowerMap::identity(c)) == f);
}

TEST_CASE("enumeration counts and order") {
  // every top-level table is locally constant at truncation
  for (const Tower& t : small_towers())
    for (std::size_t y = 0; y <= 3; ++y) {
      auto fs = lc_enumerate(t, FinSet(y));
      CHECK(fs.size() == all_maps(t.top().size, y).size());
      std::vector<std::vector<std::size_t>> tables;
      for (const auto& f : fs) tables.push_back(lc_top_table(f));
      CHECK(std::is_sorted(tables.begin(), tables.end()));
      CHECK(std::set<std::vector<std::size_t>>(tables.begin(), tables.end()).size() == fs.size());
    }
}
