#pragma once

// JSON and CSV renderings. Rationals are always "p/q" strings; integers are
// JSON numbers when they fit in 64 bits and decimal strings otherwise. Key
// order is fixed.

#include <string>
#include <vector>

#include <json.hpp>

#include "cohsys/classify.hpp"
#include "cohsys/core.hpp"
#include "cohsys/walls.hpp"
#include "cohsys/witness.hpp"

namespace cohsys {

using Json = nlohmann::ordered_json;

Json to_json(const BigInt& v);
Json to_json(const CSType& t);
Json to_json(const ExceptionalTag& tag);

/// Full verdict with descriptive keys, as printed by `csys classify`.
Json verdict_to_json(const Verdict& v);

/// Flat scan record; the keys match the CSV columns.
Json verdict_to_scan_record(const Verdict& v);

/// g,hyp,n,d,k,beta,u,us,b,g_alpha,dim,irreducible,smooth_GL,shape,exceptional
const std::vector<std::string>& scan_csv_columns();
std::string verdict_to_csv_row(const Verdict& v);

/// "dual-span-of-canonical" or "hyperelliptic-pencil-power:a=<a>".
std::string exceptional_label(const ExceptionalTag& tag);

Json wallset_to_json(const WallSet& ws);

/// {name, params, subtypes, wall, checks:[{label, lhs, rel, rhs, ok}], passed}
Json certificate_to_json(const Certificate& c);

}  // namespace cohsys
