#pragma once

// Text formats: the `polar:n=4:[1,0,2,-3]` literal used by the CLI and test
// fixtures, and JSON forms for numbers, spectra, geometric forms, series,
// polynomials, paths and residue certificates.

#include <string>
#include <string_view>

#include <json.hpp>

#include "ncx/algebra.hpp"
#include "ncx/contour.hpp"
#include "ncx/polyfactor.hpp"
#include "ncx/series.hpp"
#include "ncx/spectral.hpp"

namespace ncx {

// Shortest round-trip decimal form.
std::string format_double(double v);

std::string to_literal(const NComplex& u);
NComplex parse_literal(std::string_view text);  // throws ParseError

nlohmann::json to_json(const NComplex& u);
NComplex ncomplex_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Spectrum& s);
nlohmann::json to_json(const GeometricForm& g);
nlohmann::json to_json(const ResidueCertificate& cert);

nlohmann::json to_json(const NPowerSeries& series);
NPowerSeries series_from_json(const nlohmann::json& j);

nlohmann::json to_json(const NPolynomial& poly);
NPolynomial polynomial_from_json(const nlohmann::json& j);

// {"variant":..., "n":..., "vertices":[[...],...], "closed":true}; variant
// and n may be omitted when deducible from the caller.
PiecewisePath path_from_json(const nlohmann::json& j,
                             std::optional<Variant> variant = {},
                             std::optional<int> n = {});

Variant variant_from_string(std::string_view name);  // throws ParseError

}  // namespace ncx
