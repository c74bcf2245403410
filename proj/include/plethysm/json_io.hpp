#pragma once

#include <json.hpp>

#include "plethysm/order.hpp"
#include "plethysm/partition.hpp"
#include "plethysm/specht.hpp"
#include "plethysm/symfunc.hpp"

namespace plethysm {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits are JSON numbers; larger ones are decimal strings.
Json integer_to_json(const Integer& z);
Integer integer_from_json(const Json& j);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

// {"basis":"S","degree":d,"terms":[{"partition":[...],"num":..,"den":..},...]}
Json to_json(const SymExpr& f);
SymExpr symexpr_from_json(const Json& j);

Json to_json(const RelationVerdict& v);
// {"nodes":[...],"edges":[[nu,mu],...],"uncomputed":[[a,b],...]}
Json to_json(const HasseDiagram& d);
Json to_json(const FilledTableau& tau);
Json to_json(const StabilityReport& r);

// Compact, key order preserved, trailing newline.
std::string dump(const Json& j);

}  // namespace plethysm
