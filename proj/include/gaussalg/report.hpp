#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "gaussalg/gauss.hpp"
#include "gaussalg/polymatroid.hpp"

namespace gaussalg {

/// Reports preserve insertion order so identical runs serialize identically.
using Json = nlohmann::ordered_json;

Json to_json(const Monomial& m);
Json to_json(const ExponentPartition& p);
Json to_json(const Witness& w);
Json to_json(const ExchangeViolation& v);  // variable indices are 1-based here
Json to_json(const EqualityReport& rep);

/// Parses a witness serialized by to_json; nullopt on malformed input.
std::optional<Witness> witness_from_json(const Json& j);

Json table_to_json(Index dim, const WitnessTable& table);
std::optional<WitnessTable> table_from_json(const Json& j);

/// Drops every "wall_ms" field, recursively.  Reports are byte-comparable
/// after this.
void strip_timing(Json& j);

std::string to_csv(const EqualityReport& rep);
std::string to_text(const EqualityReport& rep);
std::string to_csv(const ExchangeViolation& v);
std::string to_text(const ExchangeViolation& v);

}  // namespace gaussalg
