#ifndef SUGRA47_IO_HPP
#define SUGRA47_IO_HPP

#include <json.hpp>

#include "sugra47/dga.hpp"
#include "sugra47/product.hpp"
#include "sugra47/sugra.hpp"

namespace sugra47 {

using Json = nlohmann::ordered_json;

/// Exact scalars render as "p" / "p/q" strings, float scalars as numbers.
Json scalar_to_json(const Scalar& s);
/// Accepts strings (exact), integers (exact) and floating numbers (float).
Scalar scalar_from_json(const Json& j);

/// {degree, terms: [{indices: [1-based ascending], coeff}]}.
Json kform_to_json(const KForm& a);
KForm kform_from_json(const Json& j, const Frame& frame);

/// {f, F7}.
Json flux_to_json(const FluxForm& fl);
FluxForm flux_from_json(const Json& j, const ProductFrame& pf);

/// {dim, labels, brackets: [{i, j, coeffs: {k: scalar}}]}, indices 1-based.
Json lie_to_json(const LieAlgebraData& g);
LieAlgebraData lie_from_json(const Json& j);

/// {generators, d: [{gen, two_form}]}.
Json dga_to_json(const CoframeDGA& dga);
CoframeDGA dga_from_json(const Json& j);

/// {class, detB, signature}.
Json orbit_to_json(const OrbitClass& oc);

Json background_report_to_json(const BackgroundReport& rep);
Json maxwell_result_to_json(const MaxwellResult& mr);

}  // namespace sugra47

#endif
