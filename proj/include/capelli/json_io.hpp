#pragma once

#include "capelli/bsat.hpp"
#include "capelli/catalog.hpp"
#include "capelli/gradmod.hpp"

#include <json.hpp>

namespace capelli {

using Json = nlohmann::json;

/// Rationals travel as canonical strings ("3/2", "-1").
Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);
/// Coefficients low to high, as rational strings.
Json upoly_json(const UniPoly& p);
UniPoly upoly_from_json(const Json& j, Symbol sym);

Json catalog_json();

/// {case_id, size, b_monic, c, b_expected, b_catalog, roots, verdict}
Json certificate_json(const BCertificate& cert);
BCertificate certificate_from_json(const Json& j);

/// {presentation: {d, B}, weights, spaces: [{weight, dim, F, D, N, f_open, d_open}]}
Json module_json(const GradedModule& t);
GradedModule module_from_json(const Json& j);

}  // namespace capelli
