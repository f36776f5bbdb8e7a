#pragma once

#include <string>

#include <json.hpp>

#include "sitor/diagnostics.hpp"
#include "sitor/tridiagonal.hpp"

namespace sitor {

// Reports keep insertion order so serialization is byte-stable.
using Json = nlohmann::ordered_json;

// Unreadable or schema-violating input file; the CLI maps this to exit 2.
struct MalformedInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact numbers are serialized as strings ("p/q" for rationals); complex
// double approximations as [re, im] number pairs.

IntMat parse_int_matrix(const Json& j);
IntRowVec parse_row_vector(const Json& j);
std::vector<Rat> parse_rat_vector(const Json& j);
RatPoly parse_poly(const Json& j);
MatrixFamily parse_family(const Json& j);
MeasureSpec parse_measure(const Json& j);
std::vector<PairKL> parse_pairs(const Json& j);

Json read_json_file(const std::string& path);

Json to_json(const IntMat& m);
Json to_json(const IntRowVec& v);
Json to_json(const RatPoly& p);
Json to_json(const TorusPointQ& p);
Json to_json(const AtomicMeasure& mu);
Json to_json(const MeasureSpec& mu);
Json to_json(const FourierValue& v);
Json to_json(const ExactValue& v);
Json to_json(const DegreeCheck& c);
Json to_json(const EigenvalueDescriptor& d);
Json to_json(const RationalRootReport& r);
Json to_json(const BoxCheckReport& r);
Json to_json(const SICertificate& c);
Json to_json(const SIReport& r);
Json to_json(const PairRecord& r);
Json to_json(const DiagnosticsReport& r);
Json to_json(const RigidityReport& r);

std::string emit_json(const Json& j);

// Diagnostics reports flatten to the table
// N,average_re,average_im,target_re,target_im (pairs concatenated in request
// order); every other report flattens to key,value rows.
std::string emit_csv(const Json& j);
std::string emit_csv(const DiagnosticsReport& r);

}  // namespace sitor
