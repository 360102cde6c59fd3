#pragma once

#include <json.hpp>

#include "spechtkit/abacus.hpp"
#include "spechtkit/classify.hpp"
#include "spechtkit/lr.hpp"
#include "spechtkit/specht.hpp"

namespace spechtkit {

using Json = nlohmann::ordered_json;

Json to_json(const FiltrationMultiset& f);
Json to_json(const AbacusDisplay& display);
Json to_json(const IrredVerdict& verdict);
Json to_json(const SignedYoungLabel& label);
/// Timing is left out so equal inputs give byte-identical output.
Json to_json(const VerificationReport& report);
/// One record per generator, entries as row-major residues.
Json to_json(const GroupRep& rep);

FiltrationMultiset filtration_from_json(const Json& j);

}  // namespace spechtkit
