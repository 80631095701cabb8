#pragma once

// JSON views of the library's result types. Big integers (coefficients,
// multiplicities, vertex counts) are always emitted as decimal strings.

#include "dendrispec/energy.hpp"
#include "dendrispec/poly_engine.hpp"
#include "dendrispec/polynomial.hpp"
#include "dendrispec/spectra.hpp"
#include "dendrispec/verification.hpp"

#include <json.hpp>

namespace dendrispec {

using Json = nlohmann::ordered_json;

Json to_json(const ExactPolynomial& p);            // {"coeffs": [...]} low to high
Json to_json(const FactoredCharPoly& fp);          // [{"index", "coeffs", "multiplicity"}]
Json to_json(const Spectrum& s);                   // {"n", "entries": [...]}
Json to_json(const Interval& interval);            // [lower, upper]
Json to_json(const EnergyReport& report);
Json to_json(const TreeVerification& v);

}  // namespace dendrispec
