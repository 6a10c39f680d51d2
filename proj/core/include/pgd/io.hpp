#pragma once

#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pgd/action.hpp"
#include "pgd/closure.hpp"
#include "pgd/degree.hpp"
#include "pgd/roots.hpp"
#include "pgd/segal.hpp"
#include "pgd/symcore.hpp"

namespace pgd {

using json = nlohmann::json;

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& doc);
// Two-space indented dump with sorted keys; the round-trip form.
std::string dump_canonical(const json& doc);

json group_to_json(const FiniteGroup& g);
std::shared_ptr<const FiniteGroup> group_from_json(const json& doc);

// "kind": "partial-groupoid" or "group-embedded".
json pg_to_json(const PartialGroupoid& pg);
PartialGroupoid pg_from_json(const json& doc);

// "kind": "characteristic-action"; the base is embedded under "base".
json action_to_json(const CharacteristicAction& a);
CharacteristicAction action_from_json(const json& doc);

// "kind": "partial-group-action", either with "maps" or with "ambient" and "subset".
json pga_to_json(const PartialGroupAction& pa);
PartialGroupAction pga_from_json(const json& doc);

// "kind": "closure-space".
json closure_to_json(const ClosureSpace& cs);
ClosureSpace closure_from_json(const json& doc);

// Witness words name edges of pg; group-embedded sets use element names.
json witness_to_json(const SegalWitness& w, const std::function<std::string(int)>& name);
SegalWitness witness_from_json(const json& doc, const std::function<int(const std::string&)>& lookup);
json segal_result_to_json(const SegalResult& r, const std::function<std::string(int)>& name);

json degree_report_to_json(const DegreeReport& r, const PartialGroupoid& pg);
json table_to_json(const std::vector<TableRow>& rows);
json bounded_to_json(const BoundedMax& b, const RootSystem& rs);

// Names for edge ids of pg and the reverse lookup; throws FormatError on unknown names.
std::function<std::string(int)> edge_namer(const PartialGroupoid& pg);
std::function<int(const std::string&)> edge_lookup(const PartialGroupoid& pg);

}  // namespace pgd
