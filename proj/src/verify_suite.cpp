#include "condensed/verify_suite.hpp"

#include <algorithm>
#include <set>

#include "condensed/errors.hpp"
#include "condensed/locconst.hpp"
#include "condensed/modules.hpp"
#include "condensed/presheaf.hpp"
#include "condensed/quotients.hpp"

namespace condensed {

std::uint64_t next_rand(std::uint64_t& state) {
  state ^= state << 13;
  state ^= state >> 7;
  state ^= state << 17;
  return state;
}

Tower random_tower(std::uint64_t& state, std::size_t depth, std::size_t max_top) {
  Tower t;
  t.name = "random";
  std::vector<std::size_t> sizes(depth + 1);
  sizes[0] = 1 + next_rand(state) % 2;
  for (std::size_t n = 1; n <= depth; ++n) {
    const std::size_t room = max_top - std::min(max_top, sizes[n - 1]);
    sizes[n] = sizes[n - 1] + (room == 0 ? 0 : next_rand(state) % (room + 1));
  }
  for (std::size_t n = 0; n <= depth; ++n) t.levels.emplace_back(sizes[n]);
  for (std::size_t n = 0; n < depth; ++n) {
    const std::size_t dom = sizes[n + 1], cod = sizes[n];
    std::vector<std::size_t> table(dom);
    for (std::size_t i = 0; i < dom; ++i) table[i] = i < cod ? i : next_rand(state) % cod;
    for (std::size_t i = dom; i > 1; --i)
      std::swap(table[i - 1], table[next_rand(state) % i]);
    t.transitions.emplace_back(t.levels[n + 1], t.levels[n], std::move(table));
  }
  return t;
}

namespace {

using Check = std::function<void(std::string&)>;  // throws or appends failure text

SuiteResult run_check(const std::string& name, const Check& body) {
  SuiteResult res;
  res.name = name;
  std::string failure;
  try {
    body(failure);
    res.passed = failure.empty();
    res.detail = failure.empty() ? "ok" : failure;
  } catch (const std::exception& e) {
    res.passed = false;
    res.detail = e.what();
  }
  return res;
}

void expect(std::string& failure, bool cond, const std::string& what) {
  if (!cond && failure.empty()) failure = what;
}

std::vector<Tower> corpus_towers() {
  return {cantor_tower(2), cantor_tower(3), point_tower(2), eventually_constant_tower(3, 2)};
}

void check_lattice_laws(std::string& f) {
  expect(f, dq_enumerate(cantor_tower(2)).size() == 15, "cantor depth 2 must have 15 quotients");
  expect(f, dq_enumerate(eventually_constant_tower(3, 1)).size() == 5,
         "eventually_constant(3) must have 5 quotients");
  const Tower t = cantor_tower(2);
  auto qs = dq_enumerate(t);
  for (const auto& a : qs)
    for (const auto& b : qs) {
      DiscreteQuotient m = dq_inf(a, b);
      Order oa = dq_compare(m, a), ob = dq_compare(m, b);
      expect(f, (oa == Order::le || oa == Order::eq) && (ob == Order::le || ob == Order::eq),
             "inf is not a lower bound");
      expect(f, dq_inf(b, a) == m, "inf not commutative");
      expect(f, dq_inf(a, a) == a, "inf not idempotent");
      for (const auto& c : qs)
        expect(f, dq_inf(dq_inf(a, b), c) == dq_inf(a, dq_inf(b, c)), "inf not associative");
      Order ord = dq_compare(a, b);
      if (ord == Order::le || ord == Order::eq) {
        FinMap lhs = compose(dq_induced_map(a, b), dq_projection_on_threads(a));
        expect(f, lhs == dq_projection_on_threads(b), "projection triangle does not commute");
      }
    }
}

void check_limit_cones(std::uint64_t seed, std::string& f) {
  std::uint64_t state = seed ^ 0x9e3779b97f4a7c15ull;
  for (const Tower& t : corpus_towers()) {
    for (int rep = 0; rep < 100; ++rep) {
      const std::size_t apex = 1 + next_rand(state) % 6;
      std::vector<std::size_t> top(apex);
      for (auto& v : top) v = next_rand(state) % t.top().size;
      LevelCone cone;
      cone.apex = FinSet(apex);
      FinMap top_leg(cone.apex, t.top(), top);
      for (std::size_t n = 0; n < t.levels.size(); ++n)
        cone.legs.push_back(compose(t.composite(t.depth(), n), top_leg));
      expect(f, verify_limit_cone(t, {cone}), "compatible cone fails to factor");
    }
  }
  // an incompatible family must be rejected
  bool threw = false;
  try {
    Tower t2 = eventually_constant_tower(2, 1);
    LevelCone bad;
    bad.apex = FinSet(1);
    bad.legs = {FinMap(bad.apex, t2.levels[0], {0}),
                FinMap(bad.apex, t2.levels[1], {1})};  // transition sends 1 to 1, not 0
    verify_limit_cone(t2, {bad});
  } catch (const IncompatibleCone&) {
    threw = true;
  }
  expect(f, threw, "incompatible cone not rejected");
}

void check_adjunction_laws(const SuiteConfig& cfg, std::string& f) {
  for (const Tower& S : corpus_towers()) {
    for (std::size_t y = 1; y <= 3; ++y) {
      const FinSet Y(y);
      std::string w;
      expect(f, check_triangle_LY(Y, S, cfg.budget, &w), "first triangle: " + w);
      LocConstPresheaf X(Y);
      expect(f, check_triangle_UX(X, cfg.budget, &w), "second triangle: " + w);
      expect(f, presheaf_ext_check(X, S, cfg.budget), "extensionality fails for locconst");
    }
  }
  // counit naturality in S: along a clopen inclusion and a truncation
  {
    const Tower S = cantor_tower(2);
    LocConstPresheaf X(FinSet(2));
    std::string w;
    ClopenSubtower half = clopen_subtower(S, 1, {0});
    expect(f, check_counit_natural_in_S(X, half.inclusion, cfg.budget, &w),
           "naturality along inclusion: " + w);
    TowerMap trunc;
    trunc.src = cantor_tower(3);
    trunc.dst = S;
    for (std::size_t k = 0; k <= 2; ++k)
      trunc.level_maps.push_back(FinMap::identity(S.levels[k]));
    expect(f, check_counit_natural_in_S(X, trunc, cfg.budget, &w),
           "naturality along truncation: " + w);
  }
  // counit naturality in X: a postcomposition morphism locconst:2 -> locconst:3
  {
    LocConstPresheaf X2(FinSet(2)), X3(FinSet(3));
    PresheafMorphism phi;
    phi.src = &X2;
    phi.dst = &X3;
    phi.component = [](const Tower&, const Element& x) {
      Element out(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + 1;  // 0,1 -> 1,2
      return out;
    };
    std::string w;
    expect(f, check_counit_natural_in_X(phi, cantor_tower(2), cfg.budget, &w),
           "naturality in the presheaf: " + w);
  }
  {
    LocConstPresheaf X(FinSet(2));
    std::string w;
    expect(f, finite_level_comparison(X, 3, cfg.budget, &w), "finite level comparison: " + w);
  }
  // unit bijectivity: LocConst(point, Y) = Y via constant maps
  for (std::size_t y = 0; y <= 4; ++y) {
    auto maps = lc_enumerate(point_tower(0), FinSet(y));
    expect(f, maps.size() == y, "unit not bijective at size " + std::to_string(y));
  }
}

void check_random_cases(const SuiteConfig& cfg, std::string& f) {
  std::uint64_t state = cfg.seed ^ 0xda942042e4dd58b5ull;
  for (std::size_t rep = 0; rep < cfg.random_cases; ++rep) {
    Tower t = random_tower(state, 2, 6);
    const FinSet Y(1 + next_rand(state) % 3);
    std::string w;
    expect(f, validate_tower(t).empty(), "random tower invalid");
    expect(f, check_triangle_LY(Y, t, cfg.budget, &w), "random triangle: " + w);
    LocConstPresheaf X(Y);
    expect(f, presheaf_ext_check(X, t, cfg.budget), "random extensionality");
    if (!f.empty()) return;
  }
}

void check_oracle_agreement(const SuiteConfig& cfg, std::string& f) {
  std::vector<std::unique_ptr<TowerPresheaf>> presheaves;
  presheaves.push_back(std::make_unique<LocConstPresheaf>(FinSet(1)));
  presheaves.push_back(std::make_unique<LocConstPresheaf>(FinSet(2)));
  presheaves.push_back(std::make_unique<LocConstPresheaf>(FinSet(3)));
  presheaves.push_back(std::make_unique<TowerHomPresheaf>(cantor_tower(3)));
  presheaves.push_back(std::make_unique<ConstantPresheafNaive>(FinSet(1)));
  std::vector<Tower> towers = {cantor_tower(1), cantor_tower(2), cantor_tower(3), point_tower(2),
                               eventually_constant_tower(3, 2)};
  for (const auto& X : presheaves)
    for (const Tower& t : towers) {
      auto c = counit_iso_report(*X, t, t.depth(), cfg.budget);
      auto l = colimit_condition_report(*X, t, t.depth(), cfg.budget);
      if (c.verdict != Verdict::inconclusive && l.verdict != Verdict::inconclusive)
        expect(f, c.verdict == l.verdict,
               "oracles disagree for " + X->name() + " on " + t.name);
      if (X->name().rfind("locconst:", 0) == 0)
        expect(f, l.verdict == Verdict::pass, "locconst must pass on " + t.name);
      if (X->name().rfind("towerhom:", 0) == 0 && t.name == "cantor" && t.depth() >= 1)
        expect(f, l.verdict == Verdict::fail, "towerhom must fail on cantor");
    }
}

void check_colimit_brute_force(const SuiteConfig& cfg, std::string& f) {
  // cross-check the union-find colimit against a transitive-closure oracle
  LocConstPresheaf X(FinSet(2));
  for (const Tower& S : {cantor_tower(2), eventually_constant_tower(3, 2), point_tower(2)}) {
    const std::size_t D = S.depth();
    std::vector<std::vector<Element>> levels(D + 1);
    std::vector<TowerMap> projections;
    std::size_t total = 0;
    for (std::size_t n = 0; n <= D; ++n) {
      projections.push_back(level_projection(S, n));
      levels[n] = X.enumerate(projections[n].dst, cfg.budget);
      total += levels[n].size();
    }
    if (total > 200) continue;
    // generator (n, j); relation: (n, j) ~ (n+1, image)
    std::vector<std::pair<std::size_t, std::size_t>> gens;
    std::vector<std::size_t> offset(D + 2, 0);
    for (std::size_t n = 0; n <= D; ++n) offset[n + 1] = offset[n] + levels[n].size();
    std::vector<std::vector<bool>> rel(total, std::vector<bool>(total, false));
    for (std::size_t g = 0; g < total; ++g) rel[g][g] = true;
    for (std::size_t n = 0; n < D; ++n) {
      TowerMap chain;
      chain.src = projections[n + 1].dst;
      chain.dst = projections[n].dst;
      chain.level_maps = {S.transitions[n]};
      for (std::size_t j = 0; j < levels[n].size(); ++j) {
        Element img = X.restrict(chain, levels[n][j]);
        auto it = std::find(levels[n + 1].begin(), levels[n + 1].end(), img);
        const std::size_t k = offset[n + 1] + (it - levels[n + 1].begin());
        rel[offset[n] + j][k] = rel[k][offset[n] + j] = true;
      }
    }
    // closure by iteration until stable
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t a = 0; a < total; ++a)
        for (std::size_t b = 0; b < total; ++b)
          if (rel[a][b])
            for (std::size_t c = 0; c < total; ++c)
              if (rel[b][c] && !rel[a][c]) rel[a][c] = true, changed = true;
    }
    std::set<std::size_t> classes;
    for (std::size_t a = 0; a < total; ++a) {
      std::size_t least = a;
      for (std::size_t b = 0; b < total; ++b)
        if (rel[a][b] && b < least) least = b;
      classes.insert(least);
    }
    auto rep = colimit_condition_report(X, S, D, cfg.budget);
    expect(f, rep.stats.count("colimit_size") && rep.stats.at("colimit_size") == classes.size(),
           "union-find colimit disagrees with closure oracle on " + S.name);
  }
}

void check_kan(const SuiteConfig& cfg, std::string& f) {
  LocConstPresheaf X(FinSet(2));
  for (const Tower& S : {cantor_tower(2), point_tower(1), eventually_constant_tower(3, 1)}) {
    auto rep = kan_comparison(X, S, cfg.budget);
    expect(f, rep.projection_initial, "projection not initial on " + S.name);
    expect(f, rep.colimits_bijective, "Kan colimits differ on " + S.name);
  }
  auto rep = kan_comparison(X, eventually_constant_tower(3, 1), cfg.budget);
  expect(f, rep.dq_colimit_size == 8, "stabilized colimit must be X at the finite set");
}

void check_theorem_c(const SuiteConfig& cfg, std::string& f) {
  const FinRing z2 = FinRing::cyclic(2);
  const FinRing z4 = FinRing::cyclic(4);
  {
    auto Xm = locconst_module(FinModule::regular(z2));
    auto rep = theorem_c_report(Xm, cantor_tower(2), 2, cfg.budget);
    expect(f, rep.consistent && rep.set_level.verdict == Verdict::pass,
           "locconst module must pass consistently");
  }
  {
    TowerHomModulePresheaf Xm(2);
    auto rep = theorem_c_report(Xm, cantor_tower(2), 2, cfg.budget);
    expect(f, rep.consistent && rep.set_level.verdict == Verdict::fail,
           "hom module presheaf must fail consistently");
    expect(f, rep.set_level.witness.find("identity") != std::string::npos,
           "hom module witness must be the identity map");
  }
  {
    auto Xm = locconst_module(FinModule::zero_module(z4));
    auto rep = theorem_c_report(Xm, cantor_tower(2), 2, cfg.budget);
    expect(f, rep.consistent && rep.set_level.verdict == Verdict::pass,
           "zero module must pass consistently");
  }
  std::string w;
  expect(f, check_counit_linearity(FinModule::regular(z2), cantor_tower(2), cfg.budget, &w),
         "counit linearity over z2: " + w);
  expect(f,
         check_counit_linearity(FinModule::regular(z4), eventually_constant_tower(2, 2),
                                cfg.budget, &w),
         "counit linearity over z4: " + w);
  // isomorphism reflection: multiplication by a unit vs a zero divisor
  LocConstModulePresheaf X4 = locconst_module(FinModule::regular(z4));
  std::vector<Tower> small = {point_tower(0), cantor_tower(1)};
  auto mult = [&](std::size_t k) {
    ModulePresheafMorphism g;
    g.src = &X4;
    g.dst = &X4;
    g.component = [&X4, k](const Tower& S, const Element& x) { return X4.smul(S, k, x); };
    return g;
  };
  expect(f, iso_reflection_check(mult(1), small, cfg.budget), "identity must be an iso");
  expect(f, iso_reflection_check(mult(3), small, cfg.budget), "multiplication by 3 must be an iso");
  expect(f, !iso_reflection_check(mult(2), small, cfg.budget),
         "multiplication by 2 must not be an iso");
}

void check_broken_detection(const SuiteConfig& cfg, std::string& f) {
  ConstantPresheafNaive bad(FinSet(2));
  std::string w;
  bool preserved = check_product_preservation(bad, cantor_tower(1), 1,
                                              Partition::discrete(FinSet(2)), cfg.budget, &w);
  expect(f, !preserved, "const:2 must be detected as non-product-preserving");
}

}  // namespace

std::vector<SuiteResult> run_verify_suite(const SuiteConfig& cfg) {
  std::vector<SuiteResult> out;
  out.push_back(run_check("dq-lattice-laws", [&](std::string& f) { check_lattice_laws(f); }));
  out.push_back(
      run_check("limit-cones", [&](std::string& f) { check_limit_cones(cfg.seed, f); }));
  out.push_back(
      run_check("adjunction-laws", [&](std::string& f) { check_adjunction_laws(cfg, f); }));
  out.push_back(
      run_check("adjunction-random-cases", [&](std::string& f) { check_random_cases(cfg, f); }));
  out.push_back(
      run_check("oracle-agreement", [&](std::string& f) { check_oracle_agreement(cfg, f); }));
  out.push_back(run_check("colimit-union-find-vs-closure",
                          [&](std::string& f) { check_colimit_brute_force(cfg, f); }));
  out.push_back(run_check("kan-comparison", [&](std::string& f) { check_kan(cfg, f); }));
  out.push_back(run_check("theorem-c-consistency", [&](std::string& f) { check_theorem_c(cfg, f); }));
  out.push_back(run_check("broken-presheaf-detection",
                          [&](std::string& f) { check_broken_detection(cfg, f); }));
  if (cfg.include_broken)
    out.push_back(run_check("product-preservation (const:2)", [&](std::string& f) {
      ConstantPresheafNaive bad(FinSet(2));
      std::string w;
      expect(f,
             check_product_preservation(bad, cantor_tower(1), 1, Partition::discrete(FinSet(2)),
                                        cfg.budget, &w),
             "const:2 violates product preservation" + (w.empty() ? "" : ": " + w));
    }));
  return out;
}

json suite_to_json(const SuiteConfig& cfg, const std::vector<SuiteResult>& results) {
  json j;
  j["seed"] = cfg.seed;
  j["budget"] = cfg.budget;
  j["random_cases"] = cfg.random_cases;
  json arr = json::array();
  bool all = true;
  for (const auto& r : results) {
    arr.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    all = all && r.passed;
  }
  j["results"] = arr;
  j["all_passed"] = all;
  return j;
}

}  // namespace condensed
