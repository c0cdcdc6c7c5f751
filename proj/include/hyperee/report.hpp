#pragma once

#include <json.hpp>

#include "hyperee/estrada.hpp"
#include "hyperee/spectrum.hpp"
#include "hyperee/tensor.hpp"
#include "hyperee/trace.hpp"

namespace hyperee {

using Json = nlohmann::json;

/// Rounds to 10 significant digits; non-finite values become null.
Json number(double x);

Json to_json(const Spectrum& s);
Json to_json(const SpectralRadiusEstimate& r);
Json to_json(const EstradaResult& r);
Json to_json(const BoundsReport& b);
/// Traces are exact; each value is the rational's decimal string.
Json to_json(const TraceSequence& t);

Spectrum spectrum_from_json(const Json& j);
SpectralRadiusEstimate radius_from_json(const Json& j);
EstradaResult estrada_from_json(const Json& j);
BoundsReport bounds_from_json(const Json& j);
TraceSequence traces_from_json(const Json& j);

}  // namespace hyperee
