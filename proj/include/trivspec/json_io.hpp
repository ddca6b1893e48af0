#ifndef TRIVSPEC_JSON_IO_HPP
#define TRIVSPEC_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "trivspec/applications.hpp"
#include "trivspec/generic_matrix.hpp"
#include "trivspec/intransitivity.hpp"
#include "trivspec/oracle.hpp"
#include "trivspec/trivial_spectrum.hpp"

namespace trivspec {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "trivspec/1";

// Parse errors throw InvalidInput with the JSON pointer of the offending value
// at the start of the message.
Json parse_json_text(const std::string& text);

Json to_json(const Scalar& s);
Json to_json(const Vec& v);
Json to_json(const Matrix& m);
Json to_json(const DMatrix& m);
Json to_json(const Profile& p);
Json to_json(const Algebra& alg);
Json to_json(const OperatorSpace& s);
Json to_json(const DSubspace& w);
Json to_json(const NonisotropyResult& r);
Json to_json(const SpectrumVerdict& v);
Json to_json(const IntransitivityVerdict& v);
Json to_json(const AtkinsonReport& r);
Json to_json(const ClassificationReport& r);
Json to_json(const LemmaVerdict& v);
Json to_json(const AffineSpace& a);
Json to_json(const MinrankVerdict& v);
Json to_json(const IdempotentVerdict& v);
Json to_json(const ElementwiseVerdict& v);
Json to_json(const MotzkinTausskyReport& r);
Json to_json(const OracleResult& r);
Json to_json(const PolyRank& r);
Json to_json(const FlandersAtkinsonReport& r);
Json to_json(const AlternatorCatcherReport& r);
Json to_json(const QuadraticTypeDetection& t);
Json to_json(const DivisionReport& r);

Field field_from_json(const Json& j, const std::string& ptr = "");
Scalar scalar_from_json(const Field& f, const Json& j, const std::string& ptr);
Vec vec_from_json(const Field& f, const Json& j, const std::string& ptr);
Matrix matrix_from_json(const Field& f, const Json& j, const std::string& ptr);
// Entries are arrays of d coordinates, or bare scalars when d = 1.
DMatrix dmatrix_from_json(const AlgebraPtr& alg, const Json& j, const std::string& ptr);
Profile profile_from_json(const Algebra& alg, const Json& j, const std::string& ptr);
// {"field", "family", "params"} or {"field", "degree", "structure", "unit"}; optional "profile".
AlgebraPtr algebra_from_json(const Json& j, const std::string& ptr = "");
// {"algebra", "rows", "cols", "basis"}
OperatorSpace space_from_json(const Json& j, const std::string& ptr = "");
AffineSpace affine_from_json(const Json& j, const std::string& ptr = "");

}  // namespace trivspec

#endif
