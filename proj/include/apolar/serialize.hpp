#pragma once

#include <nlohmann/json.hpp>

#include "apolar/ci_certifier.hpp"
#include "apolar/short_algebras.hpp"

namespace apolar {

// JSON with stable key order throughout; polynomials serialize as canonical
// strings and scalars as "p/q" strings, so no value ever passes through
// floating point.
using Json = nlohmann::ordered_json;

Json to_json(const RankWitness& w);
Json to_json(const HilbertFunction& hf);
Json to_json(const CICertificate& c);
Json to_json(const CIDecision& d);
Json to_json(const SampleReport& r);
Json to_json(const TableRowReport& r);

}  // namespace apolar
