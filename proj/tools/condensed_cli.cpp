#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "condensed/errors.hpp"
#include "condensed/json_io.hpp"
#include "condensed/locconst.hpp"
#include "condensed/presheaf.hpp"
#include "condensed/quotients.hpp"
#include "condensed/verify_suite.hpp"

namespace {

using namespace condensed;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitMalformed = 64;
constexpr int kExitInternal = 70;

struct RunConfig {
  std::string tower = "cantor";
  std::string presheaf;
  std::size_t depth = 3;
  std::size_t budget = kDefaultBudget;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::size_t random_cases = 100;
  bool include_broken = false;
  std::string replay_path = "witness_replay.json";
};

bool conclusive(Verdict v) { return v != Verdict::inconclusive; }

int cmd_check_discrete(const RunConfig& cfg) {
  const Tower full = load_tower(cfg.tower, cfg.depth);
  auto X = parse_presheaf(cfg.presheaf, cfg.depth);
  const std::size_t max_depth = std::min(cfg.depth, full.depth());

  json depths = json::array();
  bool consistent = true;
  DiscretenessReport final_counit, final_colimit;
  for (std::size_t d = 0; d <= max_depth; ++d) {
    const Tower t = truncate_tower(full, d);
    DiscretenessReport c = counit_iso_report(*X, t, d, cfg.budget);
    DiscretenessReport l = colimit_condition_report(*X, t, d, cfg.budget);
    if (conclusive(c.verdict) && conclusive(l.verdict) && c.verdict != l.verdict)
      consistent = false;
    depths.push_back({{"depth", d},
                      {"counit", report_to_json(c)},
                      {"colimit", report_to_json(l)}});
    if (d == max_depth) {
      final_counit = c;
      final_colimit = l;
    }
  }

  Verdict overall = Verdict::inconclusive;
  if (final_counit.verdict == Verdict::fail || final_colimit.verdict == Verdict::fail)
    overall = Verdict::fail;
  else if (final_counit.verdict == Verdict::pass && final_colimit.verdict == Verdict::pass)
    overall = Verdict::pass;
  if (!consistent) overall = Verdict::fail;

  if (cfg.format == "json") {
    json out;
    out["tower"] = cfg.tower;
    out["presheaf"] = cfg.presheaf;
    out["depth"] = max_depth;
    out["per_depth"] = depths;
    out["oracles_consistent"] = consistent;
    out["verdict"] = to_string(overall);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "presheaf " << X->name() << " on tower " << cfg.tower << " (depth " << max_depth
              << ")\n";
    for (const auto& d : depths) {
      std::cout << "  depth " << d.at("depth").get<std::size_t>() << ":";
      for (const char* key : {"counit", "colimit"}) {
        const json& rep = d.at(key);
        std::cout << "  " << key << "=" << rep.at("verdict").get<std::string>();
      }
      std::cout << "\n";
    }
    std::cout << "oracles consistent: " << (consistent ? "yes" : "no") << "\n";
    for (const DiscretenessReport* rep : {&final_counit, &final_colimit})
      if (!rep->witness.empty())
        std::cout << "witness (" << rep->oracle << "): " << rep->witness << "\n";
    std::cout << "verdict: " << to_string(overall) << "\n";
  }
  switch (overall) {
    case Verdict::pass:
      return kExitPass;
    case Verdict::fail:
      return kExitFail;
    default:
      return kExitInconclusive;
  }
}

int cmd_inspect(const RunConfig& cfg) {
  const Tower t = load_tower(cfg.tower, cfg.depth);
  auto quotients = dq_enumerate(t);
  // Hasse edges: covering relations in the (reverse-refinement) poset
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < quotients.size(); ++i)
    for (std::size_t j = 0; j < quotients.size(); ++j) {
      if (i == j) continue;
      Order o = dq_compare(quotients[i], quotients[j]);
      if (o != Order::le) continue;
      bool covering = true;
      for (std::size_t k = 0; k < quotients.size() && covering; ++k) {
        if (k == i || k == j) continue;
        if (dq_compare(quotients[i], quotients[k]) == Order::le &&
            dq_compare(quotients[k], quotients[j]) == Order::le)
          covering = false;
      }
      if (covering) edges.emplace_back(i, j);
    }
  const auto threads = thread_set(t);

  // limit-cone check on the canonical projection cone
  LevelCone cone;
  cone.apex = FinSet(threads.size());
  for (std::size_t n = 0; n <= t.depth(); ++n) {
    std::vector<std::size_t> leg(threads.size());
    for (std::size_t e = 0; e < threads.size(); ++e) leg[e] = threads[e].coords[n];
    cone.legs.emplace_back(cone.apex, t.levels[n], std::move(leg));
  }
  const bool cone_ok = verify_limit_cone(t, {cone});

  if (cfg.format == "json") {
    json out;
    out["tower"] = tower_to_json(t);
    json qs = json::array();
    for (const auto& q : quotients) qs.push_back(dq_to_json(q));
    out["quotients"] = qs;
    json es = json::array();
    for (const auto& [a, b] : edges) es.push_back({a, b});
    out["hasse_edges"] = es;
    out["threads"] = threads.size();
    out["limit_cone_verified"] = cone_ok;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "tower " << cfg.tower << ", depth " << t.depth() << ", levels:";
    for (const auto& lvl : t.levels) std::cout << " " << lvl.size;
    std::cout << "\n" << quotients.size() << " discrete quotients:\n";
    for (std::size_t i = 0; i < quotients.size(); ++i) {
      std::cout << "  [" << i << "] level " << quotients[i].level << " partition";
      for (std::size_t b : quotients[i].partition.block_of) std::cout << " " << b;
      std::cout << "\n";
    }
    std::cout << "Hasse edges (finer -> coarser):";
    for (const auto& [a, b] : edges) std::cout << " " << a << "->" << b;
    std::cout << "\n" << threads.size() << " threads\n";
    std::cout << "limit cone: " << (cone_ok ? "verified" : "FAILED") << "\n";
  }
  return cone_ok ? kExitPass : kExitFail;
}

int cmd_partitions(std::size_t size, const std::string& format) {
  const FinSet ground(size);
  auto parts = enumerate_partitions(ground, std::max<std::size_t>(size, kDefaultPartitionBound));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (i == j || partition_compare(parts[i], parts[j]) != Order::le) continue;
      bool covering = true;
      for (std::size_t k = 0; k < parts.size() && covering; ++k) {
        if (k == i || k == j) continue;
        if (partition_compare(parts[i], parts[k]) == Order::le &&
            partition_compare(parts[k], parts[j]) == Order::le)
          covering = false;
      }
      if (covering) edges.emplace_back(i, j);
    }
  if (format == "json") {
    json out;
    out["size"] = size;
    json ps = json::array();
    for (const auto& p : parts) ps.push_back(partition_to_json(p));
    out["partitions"] = ps;
    json es = json::array();
    for (const auto& [a, b] : edges) es.push_back({a, b});
    out["hasse_edges"] = es;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << parts.size() << " partitions of a " << size << "-element set:\n";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::cout << "  [" << i << "]";
      for (std::size_t b : parts[i].block_of) std::cout << " " << b;
      std::cout << "\n";
    }
    std::cout << "Hasse edges (finer -> coarser):";
    for (const auto& [a, b] : edges) std::cout << " " << a << "->" << b;
    std::cout << "\n";
  }
  return kExitPass;
}

int cmd_verify(const RunConfig& cfg) {
  SuiteConfig sc;
  sc.seed = cfg.seed;
  sc.budget = cfg.budget;
  sc.random_cases = cfg.random_cases;
  sc.include_broken = cfg.include_broken;
  auto results = run_verify_suite(sc);
  bool all = true;
  for (const auto& r : results) all = all && r.passed;

  if (cfg.format == "json") {
    std::cout << suite_to_json(sc, results).dump(2) << "\n";
  } else {
    for (const auto& r : results)
      std::cout << (r.passed ? "pass" : "FAIL") << "  " << r.name
                << (r.passed ? "" : ": " + r.detail) << "\n";
    std::cout << (all ? "all invariants hold" : "invariant violations found") << "\n";
  }
  if (!all) {
    // minimal reproduction: the exact config plus the failing invariants
    json replay;
    replay["command"] = "verify";
    replay["seed"] = sc.seed;
    replay["budget"] = sc.budget;
    replay["random_cases"] = sc.random_cases;
    replay["include_broken"] = sc.include_broken;
    json failed = json::array();
    for (const auto& r : results)
      if (!r.passed) failed.push_back({{"name", r.name}, {"detail", r.detail}});
    replay["failed"] = failed;
    write_json_file(cfg.replay_path, replay);
    if (cfg.format != "json")
      std::cout << "reproduction written to " << cfg.replay_path << "\n";
  }
  return all ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Executable checks for discreteness of presheaves on truncated profinite towers"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::size_t partition_size = 4;

  auto add_common = [&](CLI::App* sub, bool with_presheaf) {
    sub->add_option("--tower", cfg.tower,
                    "tower source: cantor | point | eventually_constant:<k> | JSON file");
    if (with_presheaf)
      sub->add_option("--presheaf", cfg.presheaf,
                      "presheaf spec: locconst:<k> | const:<k> | towerhom:<tower> | "
                      "locconst-mod:<ring>:<module> | towerhom-mod")
          ->required();
    sub->add_option("--depth", cfg.depth, "truncation depth");
    sub->add_option("--budget", cfg.budget, "enumeration budget");
    sub->add_option("--format", cfg.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* check = app.add_subcommand("check-discrete", "run both discreteness oracles");
  add_common(check, true);

  CLI::App* inspect = app.add_subcommand("inspect", "discrete-quotient lattice and limit cone");
  add_common(inspect, false);

  CLI::App* partitions = app.add_subcommand("partitions", "partition lattice of a finite set");
  partitions->add_option("--size", partition_size, "ground set size");
  partitions->add_option("--format", cfg.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* verify = app.add_subcommand("verify", "run the full invariant suite");
  verify->add_option("--seed", cfg.seed, "random seed");
  verify->add_option("--budget", cfg.budget, "enumeration budget");
  verify->add_option("--random-cases", cfg.random_cases, "number of random adjunction cases");
  verify->add_flag("--include-broken", cfg.include_broken,
                   "add a deliberately broken presheaf to the corpus");
  verify->add_option("--replay-out", cfg.replay_path, "path for the failure reproduction file");
  verify->add_option("--format", cfg.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_flag_callback("--json", [&cfg] { cfg.format = "json"; },
                            "shorthand for --format json");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check_discrete(cfg);
    if (inspect->parsed()) return cmd_inspect(cfg);
    if (partitions->parsed()) return cmd_partitions(partition_size, cfg.format);
    if (verify->parsed()) return cmd_verify(cfg);
  } catch (const condensed::MalformedInput& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const condensed::BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
