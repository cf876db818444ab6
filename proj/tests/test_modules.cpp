#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "condensed/errors.hpp"
#include "condensed/modules.hpp"

using namespace condensed;

TEST_CASE("cyclic rings validate; corrupted tables do not") {
  for (std::size_t n = 1; n <= 6; ++n) {
    FinRing R = FinRing::cyclic(n);
    CHECK(validate_ring(R).empty());
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        CHECK(R.plus(a, b) == (a + b) % n);
        CHECK(R.times(a, b) == (a * b) % n);
      }
  }
  FinRing bad = FinRing::cyclic(4);
  bad.mul[2 * 4 + 2] = 1;  // 2 * 2 = 1 breaks distributivity
  CHECK(!validate_ring(bad).empty());
  FinRing bad_one = FinRing::cyclic(3);
  bad_one.one = 2;
  CHECK(!validate_ring(bad_one).empty());
}

TEST_CASE("regular and zero modules validate; corrupted actions do not") {
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(validate_module(FinModule::regular(FinRing::cyclic(n))).empty());
    CHECK(validate_module(FinModule::zero_module(FinRing::cyclic(n))).empty());
  }
  FinModule bad = FinModule::regular(FinRing::cyclic(4));
  bad.action[1 * 4 + 1] = 2;  // 1 . 1 = 2 breaks unitality
  CHECK(!validate_module(bad).empty());
}

TEST_CASE("locconst module presheaf carries the pointwise structure") {
  LocConstModulePresheaf X = locconst_module(FinModule::regular(FinRing::cyclic(4)));
  Tower c = cantor_tower(1);
  auto elems = X.enumerate(c, kDefaultBudget);
  CHECK(elems.size() == 16);  // 4^2 top tables

  const FinModule& M = X.module();
  Element z = X.zero(c);
  for (const auto& a : elems) {
    CHECK(X.add(c, a, z) == a);
    for (const auto& b : elems) {
      Element s = X.add(c, a, b);
      for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i] == M.plus(a[i], b[i]));
      CHECK(X.add(c, b, a) == s);
    }
    for (std::size_t r = 0; r < 4; ++r) {
      Element s = X.smul(c, r, a);
      for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i] == M.smul(r, a[i]));
    }
  }
}

TEST_CASE("forgetting the module structure changes nothing about the values") {
  LocConstModulePresheaf Xm = locconst_module(FinModule::regular(FinRing::cyclic(2)));
  LocConstPresheaf Xs{FinSet(2)};  // independently built set-level counterpart
  const TowerPresheaf& forgotten = forget_presheaf(Xm);
  for (const Tower& t : {cantor_tower(2), point_tower(1), eventually_constant_tower(3, 1)}) {
    CHECK(forgotten.enumerate(t, kDefaultBudget) == Xs.enumerate(t, kDefaultBudget));
    TowerMap pm = point_map(t);
    for (const auto& x : Xs.enumerate(t, kDefaultBudget))
      CHECK(forgotten.restrict(pm, x) == Xs.restrict(pm, x));
  }
}

TEST_CASE("the hom module presheaf is the cantor group with linear restrictions") {
  TowerHomModulePresheaf X(2);
  Tower c = cantor_tower(2);
  CHECK(X.ring().size() == 2);
  auto elems = X.enumerate(c, kDefaultBudget);
  CHECK(elems.size() == 256);  // tables S_2 -> M_2

  // addition is elementwise in the level group, with the zero element neutral
  Element z = X.zero(c);
  for (const auto& a : elems) CHECK(X.add(c, a, z) == a);
  for (std::size_t i = 0; i < 20; ++i) {
    const Element &a = elems[i * 11 % elems.size()], &b = elems[i * 7 % elems.size()];
    CHECK(X.add(c, a, b) == X.add(c, b, a));
    CHECK(X.smul(c, 1, a) == a);
    CHECK(X.smul(c, 0, a) == z);
  }

  // restrictions are additive along maps into the tower
  for (const TowerMap& g :
       {clopen_subtower(c, 1, {0}).inclusion, thread_inclusion(c, 0), TowerMap::identity(c)}) {
    for (std::size_t i = 0; i < elems.size(); i += 17)
      for (std::size_t j = 0; j < elems.size(); j += 13) {
        Element lhs = X.restrict(g, X.add(c, elems[i], elems[j]));
        Element rhs = X.add(g.src, X.restrict(g, elems[i]), X.restrict(g, elems[j]));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("counit linearity, exhaustively") {
  CHECK(check_counit_linearity(FinModule::regular(FinRing::cyclic(2)), cantor_tower(2),
                               kDefaultBudget));
  CHECK(check_counit_linearity(FinModule::regular(FinRing::cyclic(4)),
                               eventually_constant_tower(2, 2), kDefaultBudget));
  CHECK(check_counit_linearity(FinModule::zero_module(FinRing::cyclic(3)), cantor_tower(2),
                               kDefaultBudget));
}

TEST_CASE("module- and set-level verdicts agree") {
  Tower c = cantor_tower(2);
  {
    LocConstModulePresheaf X = locconst_module(FinModule::regular(FinRing::cyclic(2)));
    TheoremCReport rep = theorem_c_report(X, c, 2, kDefaultBudget);
    CHECK(rep.consistent);
    CHECK(rep.module_level.verdict == Verdict::pass);
    CHECK(rep.set_level.verdict == Verdict::pass);
    CHECK(rep.module_level.oracle == "colimit-condition-module");
  }
  {
    LocConstModulePresheaf X = locconst_module(FinModule::zero_module(FinRing::cyclic(4)));
    TheoremCReport rep = theorem_c_report(X, c, 2, kDefaultBudget);
    CHECK(rep.consistent);
    CHECK(rep.set_level.verdict == Verdict::pass);
  }
  {
    TowerHomModulePresheaf X(2);
    TheoremCReport rep = theorem_c_report(X, c, 2, kDefaultBudget);
    CHECK(rep.consistent);
    CHECK(rep.module_level.verdict == Verdict::fail);
    CHECK(rep.set_level.verdict == Verdict::fail);
    CHECK(rep.set_level.witness.find("identity") != std::string::npos);
  }
}

TEST_CASE("module colimit oracle matches its set-level core") {
  for (std::size_t d = 0; d <= 2; ++d) {
    TowerHomModulePresheaf X(d);
    auto mrep = module_colimit_condition_report(X, cantor_tower(d), d, kDefaultBudget);
    auto srep = colimit_condition_report(forget_presheaf(X), cantor_tower(d), d, kDefaultBudget);
    CHECK(mrep.verdict == srep.verdict);
  }
}

TEST_CASE("isomorphy is reflected and detected through the module structure") {
  LocConstModulePresheaf X = locconst_module(FinModule::regular(FinRing::cyclic(4)));
  std::vector<Tower> corpus = {point_tower(0), cantor_tower(1)};
  auto mult = [&X](std::size_t k) {
    ModulePresheafMorphism g;
    g.src = &X;
    g.dst = &X;
    g.component = [&X, k](const Tower& S, const Element& x) { return X.smul(S, k, x); };
    return g;
  };
  CHECK(iso_reflection_check(mult(1), corpus, kDefaultBudget));
  CHECK(iso_reflection_check(mult(3), corpus, kDefaultBudget));   // 3 is a unit mod 4
  CHECK(!iso_reflection_check(mult(2), corpus, kDefaultBudget));  // 2 is a zero divisor

  // a non-linear component (pointwise translation) is rejected outright
  ModulePresheafMorphism shift;
  shift.src = &X;
  shift.dst = &X;
  shift.component = [](const Tower&, const Element& x) {
    Element out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = (x[i] + 1) % 4;
    return out;
  };
  CHECK_THROWS_AS(iso_reflection_check(shift, corpus, kDefaultBudget), NotLinear);
}
