#pragma once

#include <string>

#include <json.hpp>

#include "nkoszul/koszul.hpp"
#include "nkoszul/manin.hpp"
#include "nkoszul/mmt.hpp"

namespace nkoszul {

using Json = nlohmann::json;

/// Malformed or inconsistent JSON input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json to_json(const Word& w);
Json to_json(const Tensor& t);
Tensor tensor_from_json(const Json& j, std::size_t n);

Json to_json(const AlgebraPresentation& a);
AlgebraPresentation algebra_from_json(const Json& j);
AlgebraPresentation load_algebra_file(const std::string& path);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json to_json(const IntSeries& s);
Json to_json(const ScalarSeries& s);
Json to_json(const MultiSeries& s);

/// Class in a graded algebra: degree and coordinates over the normal words.
Json to_json(const AlgebraClass& c);

Json to_json(const DegreeReport& r);
Json to_json(const KoszulCertificate& c);
Json to_json(const SeriesCheck& c);
Json to_json(const AdmissibleIdentityReport& r);
Json to_json(const KmtReport& r);
Json to_json(const BosFermReport& r);
Json to_json(const MasterTheoremReport& r);

}  // namespace nkoszul
