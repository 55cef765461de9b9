#ifndef LIFTCODE_IO_HPP_
#define LIFTCODE_IO_HPP_

#include <string>

#include <json.hpp>

#include "liftcode/analysis.hpp"
#include "liftcode/codes.hpp"
#include "liftcode/local.hpp"

namespace liftcode {

using Json = nlohmann::json;  // key-ordered, so dumps are deterministic

Json to_json(const Rational& r);

// Table serialization: tower header plus the row-major value list, each
// value a little-endian digit string over F_p.
Json table_to_json(const FuncTable& f);
FuncTable table_from_json(const Json& j);

// {"Q":…, "q":…, "m":…, "degrees":[[d1,…,dm],…]} with degrees sorted
// lexicographically.
Json degree_set_to_json(const DegreeSet& D);
DegreeSet degree_set_from_json(const Json& j);

Json params_to_json(const ConstructionParams& p);
Json code_descriptor(const ConstructionParams& p, const LiftedCode& code, bool with_degrees);

Json mc_report_to_json(const McReport& r);
Json min_distance_to_json(const MinDistanceResult& r);
Json distance_check_to_json(const DistanceCheck& c);
Json oracle_report_to_json(const OracleReport& r);
Json affine_closure_to_json(const AffineClosureReport& r);
Json nikodym_scan_to_json(const NikodymScanResult& r);

// Comma-separated little-endian digit strings -> orbit coefficients.
std::vector<uint32_t> parse_message(const FieldCtx& ctx, const std::string& text);

}  // namespace liftcode

#endif  // LIFTCODE_IO_HPP_
