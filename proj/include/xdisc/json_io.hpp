#pragma once

// JSON encodings. Complex numbers are [re, im] (a bare real is accepted on
// input), polynomials are ascending coefficient arrays, matrices are four
// complex entries row-major.

#include <json.hpp>

#include <string>

#include "xdisc/automorphisms.hpp"
#include "xdisc/constructions.hpp"
#include "xdisc/disc.hpp"
#include "xdisc/extremality.hpp"

namespace xdisc {

using json = nlohmann::json;

// Every *_from_json throws Errc::ParseError on malformed input.

json to_json(cplx z);
cplx complex_from_json(const json& j);

json to_json(const Poly& p);
Poly poly_from_json(const json& j);

json to_json(const RationalMap& r);
/// {"num": [...], "den": [...]}; a bare coefficient array is a polynomial.
RationalMap rational_from_json(const json& j);

json to_json(const BlaschkeProduct& b);
BlaschkeProduct blaschke_from_json(const json& j);

json to_json(const DiscAutomorphism& m);
/// {"omega": c, "alpha": c}, both optional.
DiscAutomorphism automorphism_from_json(const json& j);

json to_json(const CMatrix2& m);
CMatrix2 matrix_from_json(const json& j);

json to_json(const PointND& x);
PointND point_from_json(const json& j);

json to_json(const AutR2& chain);
AutR2 chain_from_json(const json& j);

json to_json(const Disc& f);
/// {"target": "Ball(2)", "components": [rational, ...]}.
Disc disc_from_json(const json& j);

json to_json(const PickCertificate& c);
PickCertificate certificate_from_json(const json& j);

json to_json(const Family& f);
json to_json(const ShapeReport& r);

/// A JSON argument given either literally or as a path to a file holding it.
/// Throws Errc::IoError, Errc::ParseError.
json load_json_arg(const std::string& literal_or_path);

}  // namespace xdisc
