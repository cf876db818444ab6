#pragma once

#include <memory>
#include <string>

#include "json.hpp"

#include "condensed/locconst.hpp"
#include "condensed/modules.hpp"
#include "condensed/presheaf.hpp"
#include "condensed/quotients.hpp"
#include "condensed/smallcat.hpp"
#include "condensed/tower.hpp"

namespace condensed {

using json = nlohmann::json;

// All *_from_json functions throw MalformedInput on schema violations.

json tower_to_json(const Tower& t);
Tower tower_from_json(const json& j);

json partition_to_json(const Partition& p);  // restricted-growth list
Partition partition_from_json(const FinSet& ground, const json& j);

json dq_to_json(const DiscreteQuotient& q);
DiscreteQuotient dq_from_json(const Tower& t, const json& j);

json locconst_to_json(const LocConstMap& f);
LocConstMap locconst_from_json(const Tower& t, const json& j);

json fincat_to_json(const FinCat& c);
FinCat fincat_from_json(const json& j);

json ring_to_json(const FinRing& R);
FinRing ring_from_json(const json& j);

json module_to_json(const FinModule& M);
FinModule module_from_json(const json& j);

json report_to_json(const DiscretenessReport& rep);

/// Resolves a tower source: the built-in names `cantor`, `point`,
/// `eventually_constant:<k>` (at the given depth), or a JSON file path.
/// The result is validated.
Tower load_tower(const std::string& source, std::size_t depth);

/// Parses a presheaf spec string: `locconst:<k>`, `const:<k>`,
/// `towerhom:<tower-source>`, `locconst-mod:<ring>:<module>`, or
/// `towerhom-mod` (the Z/2 Cantor group presheaf). Ring sources are `z<n>`
/// or a JSON file; module sources are `regular`, `zero`, or a JSON file.
std::unique_ptr<TowerPresheaf> parse_presheaf(const std::string& spec, std::size_t depth);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace condensed
