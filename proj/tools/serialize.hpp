#pragma once

// JSON forms of the library's values.  Rationals are always strings in
// "p/q" form ("p" when q = 1).

#include <json.hpp>

#include "gammacoh/characteristic_classes.hpp"
#include "gammacoh/cohomology.hpp"
#include "gammacoh/euler_pontryagin.hpp"
#include "gammacoh/qmatrix.hpp"

namespace gammacoh::io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// Array of row arrays of rational strings.
Json to_json(const QMatrix& m);
QMatrix matrix_from_json(const Json& j);

/// Map from monomial key ("ex^2*ey^1", "x^3", "1") to rational string;
/// zero coefficients are omitted.
Json to_json(const HomogeneousPoly& f);
HomogeneousPoly poly_from_json(const Json& j, unsigned degree, Variant variant);

Json to_json(const UnivariateTerm& t);
Json to_json(const EulerPontryaginPoly& f);

/// {generator name: polynomial}
Json to_json(const CocycleClass& c);
/// {group, degree, variant, dim, basis: [...]}
Json to_json(const CohomologySpace& s);
/// Generator values of every basis class in a serialized cohomology space.
std::vector<CocycleClass> cohomology_basis_from_json(const Json& j);

Json to_json(const CuspClass& c);
Json to_json(const SpanningCertificate& c);
/// {class_index, detecting_gamma, value}
Json to_json(const ClassDetection& d);
Json to_json(const CuspDetection& d);
/// {group, weight, dim_h1, series_coefficient, oracle_dim, agreement,
///  detections, cusp_detections, spanning}
Json to_json(const DetectionReport& r, const Integer& series_coefficient, unsigned long oracle_dim);
Json to_json(const BundleEvaluation& e);
Json to_json(const PoincareSeries& s);
Json to_json(const DimensionRow& r);
Json to_json(const DiscrepancyRow& r);
Json to_json(const ParabolicAnalysis& p);

}  // namespace gammacoh::io
