#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "condensed/errors.hpp"
#include "condensed/tower.hpp"

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

// Brute-force factorization oracle: mediators apex -> threads commuting with
// every leg via the coordinate projections.
std::size_t count_mediators(const Tower& t, const LevelCone& cone) {
  auto threads = thread_set(t);
  std::size_t count = 0;
  for (const auto& m : all_maps(cone.apex.size, threads.size())) {
    bool ok = true;
    for (std::size_t n = 0; n < cone.legs.size() && ok; ++n)
      for (std::size_t x = 0; x < cone.apex.size && ok; ++x)
        if (threads[m[x]].coords[n] != cone.legs[n](x)) ok = false;
    if (ok) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("built-in towers validate and have the expected levels") {
  for (std::size_t d = 0; d <= 4; ++d) {
    Tower c = cantor_tower(d);
    CHECK(validate_tower(c).empty());
    CHECK(c.depth() == d);
    for (std::size_t n = 0; n <= d; ++n) CHECK(c.levels[n].size == (std::size_t{1} << n));

    Tower p = point_tower(d);
    CHECK(validate_tower(p).empty());
    for (const auto& lvl : p.levels) CHECK(lvl.size == 1);

    Tower e = eventually_constant_tower(3, d);
    CHECK(validate_tower(e).empty());
    for (const auto& lvl : e.levels) CHECK(lvl.size == 3);
    for (const auto& tr : e.transitions) CHECK(tr == FinMap::identity(FinSet(3)));
  }
}

TEST_CASE("validation rejects non-surjective transitions") {
  Tower t;
  t.levels = {FinSet(2), FinSet(2)};
  t.transitions = {FinMap(FinSet(2), FinSet(2), {0, 0})};
  CHECK(!validate_tower(t).empty());
}

TEST_CASE("composite transitions agree with stepwise composition") {
  Tower c = cantor_tower(3);
  for (std::size_t from = 0; from <= 3; ++from)
    for (std::size_t to = 0; to <= from; ++to) {
      FinMap step = FinMap::identity(c.levels[from]);
      for (std::size_t n = from; n > to; --n) step = compose(c.transitions[n - 1], step);
      CHECK(c.composite(from, to) == step);
    }
}

TEST_CASE("threads are the compatible coordinate families, keyed by top") {
  Tower c = cantor_tower(3);
  auto threads = thread_set(c);
  CHECK(threads.size() == 8);
  std::set<std::size_t> tops;
  for (const auto& th : threads) {
    CHECK(th.coords.size() == 4);
    for (std::size_t n = 0; n < 3; ++n)
      CHECK(c.transitions[n](th.coords[n + 1]) == th.coords[n]);
    tops.insert(th.coords[3]);
  }
  CHECK(tops.size() == 8);
  for (std::size_t e = 0; e < 8; ++e) CHECK(thread_from_top(c, e).coords[3] == e);
}

TEST_CASE("identity tower map fixes every thread") {
  Tower c = cantor_tower(2);
  TowerMap id = TowerMap::identity(c);
  CHECK(validate_tower_map(id).empty());
  for (const auto& th : thread_set(c)) CHECK(id.apply(th) == th);
}

TEST_CASE("compatible cones factor uniquely, against a brute-force oracle") {
  for (const Tower& t : {cantor_tower(2), eventually_constant_tower(3, 2), point_tower(2)}) {
    auto threads = thread_set(t);
    for (std::size_t apex = 1; apex <= 3; ++apex) {
      for (const auto& top : all_maps(apex, t.top().size)) {
        LevelCone cone;
        cone.apex = FinSet(apex);
        FinMap top_leg(cone.apex, t.top(), top);
        for (std::size_t n = 0; n < t.levels.size(); ++n)
          cone.legs.push_back(compose(t.composite(t.depth(), n), top_leg));
        CHECK(verify_limit_cone(t, {cone}));
        CHECK(count_mediators(t, cone) == 1);
      }
    }
  }
}

TEST_CASE("incompatible cones are rejected") {
  Tower t = eventually_constant_tower(2, 1);
  LevelCone bad;
  bad.apex = FinSet(1);
  bad.legs = {FinMap(bad.apex, t.levels[0], {0}), FinMap(bad.apex, t.levels[1], {1})};
  CHECK_THROWS_AS(verify_limit_cone(t, {bad}), IncompatibleCone);
}

TEST_CASE("clopen subtower of the cantor tower at level 1") {
  Tower c = cantor_tower(2);
  ClopenSubtower sub = clopen_subtower(c, 1, {0});
  CHECK(!sub.empty);
  CHECK(validate_tower(sub.tower).empty());
  CHECK(validate_tower_map(sub.inclusion).empty());
  CHECK(sub.tower.levels[0].size == 1);
  CHECK(sub.tower.levels[1].size == 1);
  CHECK(sub.tower.levels[2].size == 2);

  // threads of the subtower land injectively on the threads over the cut
  std::set<std::size_t> image;
  for (const auto& th : thread_set(sub.tower)) {
    Thread img = sub.inclusion.apply(th);
    CHECK(img.coords[1] == 0);
    image.insert(img.coords[2]);
  }
  CHECK(image.size() == 2);
}

TEST_CASE("clopen subtowers over a level partition decompose the threads") {
  Tower c = cantor_tower(2);
  std::size_t total = 0;
  for (std::size_t b = 0; b < 2; ++b) {
    ClopenSubtower sub = clopen_subtower(c, 1, {b});
    total += thread_set(sub.tower).size();
  }
  CHECK(total == thread_set(c).size());
}

TEST_CASE("empty clopen subtower is flagged") {
  Tower c = cantor_tower(1);
  ClopenSubtower sub = clopen_subtower(c, 1, {});
  CHECK(sub.empty);
}
