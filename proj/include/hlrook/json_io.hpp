#pragma once

// JSON forms of the value types.
//
//   QLaurent   {"min_exp": int, "coeffs": [int | "decimal string", ...]}
//   Partition  [3, 2]
//   DyckPath   {"heights": [2, 2, 4, 4, 5]}
//   SymFunc    {"degree": n, "basis": "monomial" | "schur" | "hl_p",
//               "coeffs": [{"part": [...], "poly": QLaurent}, ...]}
//   CheckReport {"identity", "instance", "status", "lhs"?, "rhs"?}
//
// Coefficients that fit in a signed 64-bit integer are written as numbers,
// larger ones as decimal strings; both forms are accepted on input.

#include "hlrook/dyck.hpp"
#include "hlrook/partition.hpp"
#include "hlrook/qlaurent.hpp"
#include "hlrook/symfunc.hpp"
#include "hlrook/verify.hpp"

#include <json.hpp>

namespace hlrook {

using Json = nlohmann::json;

Json to_json(const QLaurent& value);
Json to_json(const Partition& lambda);
Json to_json(const DyckPath& path);
Json to_json(const SymFunc& f);
Json to_json(const CheckReport& report);

/// The parsers throw std::invalid_argument on malformed input.
QLaurent qlaurent_from_json(const Json& j);
Partition partition_from_json(const Json& j);
DyckPath dyck_from_json(const Json& j);
SymFunc symfunc_from_json(const Json& j);
CheckReport report_from_json(const Json& j);

}  // namespace hlrook
