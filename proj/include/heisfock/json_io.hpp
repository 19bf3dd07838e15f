#pragma once

#include <json.hpp>

#include "heisfock/cherednik.hpp"
#include "heisfock/fock.hpp"
#include "heisfock/laurent.hpp"
#include "heisfock/partition.hpp"
#include "heisfock/schar.hpp"
#include "heisfock/symfunc.hpp"

// JSON encodings. Every number that is not a small integer (partition parts,
// multiplicities, sizes) is an exact rational string.
namespace heisfock::json {

using nlohmann::json;

json encode(const Partition& p);
json encode(const VirtualRep& rep);
json encode(const SymFunc& f);
json encode(const LaurentScalar& s);
json encode(const FockVector& x);
json encode(const SimpleLabel& label);
json encode(const LabelMultiset& labels);
json encode(const CharacterTable& table);
json encode(const HilbertSeries& series);
json encode(const StabilityInterval& interval);
json encode(const BlockId& block);
json encode(const std::vector<SupportStratum>& strata);

// Decoders throw InvalidInput on malformed documents.
Partition decode_partition(const json& j);
VirtualRep decode_virtual_rep(const json& j);
SymFunc decode_symfunc(const json& j);
LaurentScalar decode_laurent(const json& j);
FockVector decode_fock(const json& j);
SimpleLabel decode_label(const json& j);
CharacterTable decode_character_table(const json& j);

}  // namespace heisfock::json
