#pragma once

// JSON and CSV encodings of the library types. Complex numbers are [re, im]
// pairs; series are arrays of such pairs, lowest degree first. Decoders throw
// Error(invalid_argument) on malformed input.

#include <ostream>
#include <string>

#include "json.hpp"

#include "eigenop/classify.hpp"
#include "eigenop/dynamics.hpp"
#include "eigenop/errors.hpp"
#include "eigenop/operators.hpp"
#include "eigenop/verify.hpp"

namespace eigenop {

using Json = nlohmann::ordered_json;

Json to_json(cplx z);
Json to_json(const TruncatedSeries& f);
Json to_json(const PhiSpec& phi);
Json to_json(const EigenOp& op);
Json to_json(const Verdict& v);
Json to_json(const Classification& c);
Json to_json(const OrbitRecord& r);
Json to_json(const ConstructionReport& r);
Json to_json(const LemmaReport& r);
/// {"error": {"code": ..., "exit_status": ..., "message": ...}}
Json error_envelope(std::string_view code, int exit_status, const std::string& message);

/// Accepts a plain number as a real value.
cplx complex_from_json(const Json& j);
/// Accepts an array of coefficients, {"coeffs": [...]}, or a construction
/// report (its "vector" field), so results can be fed back as inputs.
TruncatedSeries series_from_json(const Json& j);
PhiSpec phi_from_json(const Json& j);
EigenOp op_from_json(const Json& j);

/// Header "n,scalar_re,scalar_im", then one column per seminorm named by
/// Seminorm::name() (plus "<name>_upper" for sup_disk), then "dist_<id>" per target.
void write_orbit_csv(std::ostream& out, const OrbitRecord& r);

}  // namespace eigenop
