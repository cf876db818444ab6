#include "condensed/json_io.hpp"

#include <fstream>

#include "condensed/errors.hpp"

namespace condensed {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw MalformedInput(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<std::size_t> size_list(const json& j, const char* what) {
  if (!j.is_array()) throw MalformedInput(std::string(what) + " must be an array");
  std::vector<std::size_t> out;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) throw MalformedInput(std::string(what) + " must hold indices");
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

}  // namespace

json tower_to_json(const Tower& t) {
  json j;
  j["name"] = t.name;
  json levels = json::array();
  for (const auto& lvl : t.levels) levels.push_back(lvl.size);
  j["levels"] = levels;
  json transitions = json::array();
  for (const auto& tr : t.transitions) transitions.push_back(tr.table);
  j["transitions"] = transitions;
  return j;
}

Tower tower_from_json(const json& j) {
  Tower t;
  if (j.contains("name")) t.name = field(j, "name").get<std::string>();
  for (std::size_t n : size_list(field(j, "levels"), "levels")) t.levels.emplace_back(n);
  if (t.levels.empty()) throw MalformedInput("tower needs at least one level");
  const json& trs = field(j, "transitions");
  if (!trs.is_array() || trs.size() + 1 != t.levels.size())
    throw MalformedInput("transition count must be level count - 1");
  for (std::size_t k = 0; k < trs.size(); ++k) {
    auto table = size_list(trs[k], "transition");
    if (table.size() != t.levels[k + 1].size)
      throw MalformedInput("transition " + std::to_string(k) + " has wrong length");
    for (std::size_t e = 0; e < table.size(); ++e)
      if (table[e] >= t.levels[k].size)
        throw MalformedInput("transition " + std::to_string(k) + " entry " + std::to_string(e) +
                             " out of range");
    t.transitions.emplace_back(t.levels[k + 1], t.levels[k], std::move(table));
  }
  auto issues = validate_tower(t);
  if (!issues.empty()) throw MalformedInput("invalid tower: " + issues.front().what);
  return t;
}

json partition_to_json(const Partition& p) { return json(p.block_of); }

Partition partition_from_json(const FinSet& ground, const json& j) {
  auto blocks = size_list(j, "partition");
  if (blocks.size() != ground.size) throw MalformedInput("partition length != ground size");
  if (blocks != Partition::canonicalize(blocks))
    throw MalformedInput("partition not in restricted-growth form");
  return Partition(ground, std::move(blocks));
}

json dq_to_json(const DiscreteQuotient& q) {
  json j;
  j["level"] = q.level;
  j["partition"] = partition_to_json(q.partition);
  return j;
}

DiscreteQuotient dq_from_json(const Tower& t, const json& j) {
  const std::size_t level = field(j, "level").get<std::size_t>();
  if (level >= t.levels.size()) throw MalformedInput("quotient level beyond tower depth");
  Partition p = partition_from_json(t.levels[level], field(j, "partition"));
  DiscreteQuotient q = dq_canonicalize(t, level, p);
  if (q.level != level || !(q.partition == p))
    throw MalformedInput("quotient not in canonical (minimal-level) form");
  return q;
}

json locconst_to_json(const LocConstMap& f) {
  json j;
  j["level"] = f.level;
  j["table"] = f.table;
  j["target"] = {{"size", f.target.size}, {"labels", f.target.labels}};
  return j;
}

LocConstMap locconst_from_json(const Tower& t, const json& j) {
  const json& tgt = field(j, "target");
  FinSet target(field(tgt, "size").get<std::size_t>());
  if (tgt.contains("labels") && !tgt.at("labels").empty())
    target.labels = tgt.at("labels").get<std::vector<std::string>>();
  return lc_make(t, target, field(j, "level").get<std::size_t>(),
                 size_list(field(j, "table"), "table"));
}

json fincat_to_json(const FinCat& c) {
  json j;
  j["objects"] = c.num_objects;
  json arrows = json::array();
  for (const auto& a : c.arrows) arrows.push_back({{"src", a.src}, {"dst", a.dst}});
  j["arrows"] = arrows;
  j["ids"] = c.ids;
  // the flat composition table, kNoArrow encoded as -1
  json comp = json::array();
  for (std::size_t v : c.comp) comp.push_back(v == kNoArrow ? json(-1) : json(v));
  j["comp"] = comp;
  return j;
}

FinCat fincat_from_json(const json& j) {
  FinCat c;
  c.num_objects = field(j, "objects").get<std::size_t>();
  for (const auto& a : field(j, "arrows"))
    c.arrows.push_back({field(a, "src").get<std::size_t>(), field(a, "dst").get<std::size_t>()});
  c.ids = size_list(field(j, "ids"), "ids");
  for (const auto& v : field(j, "comp"))
    c.comp.push_back(v.is_number_integer() && v.get<long long>() < 0 ? kNoArrow
                                                                     : v.get<std::size_t>());
  auto issues = validate_category(c);
  if (!issues.empty()) throw MalformedInput("invalid category: " + issues.front().what);
  return c;
}

json ring_to_json(const FinRing& R) {
  json j;
  j["size"] = R.size();
  j["add"] = R.add;
  j["mul"] = R.mul;
  j["zero"] = R.zero;
  j["one"] = R.one;
  return j;
}

FinRing ring_from_json(const json& j) {
  FinRing R;
  R.carrier = FinSet(field(j, "size").get<std::size_t>());
  R.add = size_list(field(j, "add"), "add");
  R.mul = size_list(field(j, "mul"), "mul");
  R.zero = field(j, "zero").get<std::size_t>();
  R.one = field(j, "one").get<std::size_t>();
  auto issues = validate_ring(R);
  if (!issues.empty()) throw MalformedInput("invalid ring: " + issues.front().what);
  return R;
}

json module_to_json(const FinModule& M) {
  json j;
  j["ring"] = ring_to_json(M.ring);
  j["size"] = M.size();
  j["add"] = M.add;
  j["action"] = M.action;
  j["zero"] = M.zero;
  return j;
}

FinModule module_from_json(const json& j) {
  FinModule M;
  M.ring = ring_from_json(field(j, "ring"));
  M.carrier = FinSet(field(j, "size").get<std::size_t>());
  M.add = size_list(field(j, "add"), "add");
  M.action = size_list(field(j, "action"), "action");
  M.zero = field(j, "zero").get<std::size_t>();
  auto issues = validate_module(M);
  if (!issues.empty()) throw MalformedInput("invalid module: " + issues.front().what);
  return M;
}

json report_to_json(const DiscretenessReport& rep) {
  json j;
  j["oracle"] = rep.oracle;
  j["depth"] = rep.depth;
  j["verdict"] = to_string(rep.verdict);
  if (!rep.witness.empty()) j["witness"] = rep.witness;
  json stats = json::object();
  for (const auto& [k, v] : rep.stats) stats[k] = v;
  j["stats"] = stats;
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw MalformedInput(path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw MalformedInput("cannot write " + path);
  out << j.dump(2) << "\n";
}

Tower load_tower(const std::string& source, std::size_t depth) {
  if (source == "cantor") return cantor_tower(depth);
  if (source == "point") return point_tower(depth);
  if (source.rfind("eventually_constant:", 0) == 0) {
    const std::string k = source.substr(source.find(':') + 1);
    try {
      return eventually_constant_tower(std::stoul(k), depth);
    } catch (const std::exception&) {
      throw MalformedInput("bad size in '" + source + "'");
    }
  }
  return tower_from_json(read_json_file(source));
}

std::unique_ptr<TowerPresheaf> parse_presheaf(const std::string& spec, std::size_t depth) {
  auto after = [&](const std::string& prefix) { return spec.substr(prefix.size()); };
  auto parse_size = [&](const std::string& s) -> std::size_t {
    try {
      return std::stoul(s);
    } catch (const std::exception&) {
      throw MalformedInput("bad number in presheaf spec '" + spec + "'");
    }
  };
  if (spec.rfind("locconst:", 0) == 0)
    return std::make_unique<LocConstPresheaf>(FinSet(parse_size(after("locconst:"))));
  if (spec.rfind("const:", 0) == 0)
    return std::make_unique<ConstantPresheafNaive>(FinSet(parse_size(after("const:"))));
  if (spec.rfind("towerhom:", 0) == 0)
    return std::make_unique<TowerHomPresheaf>(load_tower(after("towerhom:"), depth));
  if (spec == "towerhom-mod") return std::make_unique<TowerHomModulePresheaf>(depth);
  if (spec.rfind("locconst-mod:", 0) == 0) {
    const std::string rest = after("locconst-mod:");
    const auto colon = rest.find(':');
    if (colon == std::string::npos)
      throw MalformedInput("locconst-mod needs '<ring>:<module>'");
    const std::string ring_src = rest.substr(0, colon);
    const std::string mod_src = rest.substr(colon + 1);
    FinRing R;
    if (ring_src.size() > 1 && ring_src[0] == 'z')
      R = FinRing::cyclic(parse_size(ring_src.substr(1)));
    else
      R = ring_from_json(read_json_file(ring_src));
    FinModule M;
    if (mod_src == "regular")
      M = FinModule::regular(R);
    else if (mod_src == "zero")
      M = FinModule::zero_module(R);
    else
      M = module_from_json(read_json_file(mod_src));
    if (!(M.ring.carrier == R.carrier) || M.ring.add != R.add || M.ring.mul != R.mul)
      throw MalformedInput("module is not over the given ring");
    return std::make_unique<LocConstModulePresheaf>(std::move(M));
  }
  throw MalformedInput("unknown presheaf spec '" + spec + "'");
}

}  // namespace condensed
