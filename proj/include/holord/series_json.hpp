#pragma once

#include <nlohmann/json.hpp>

#include "holord/series.hpp"

namespace holord {

/// Canonical JSON form of a truncated series:
///
///   {"rank": n, "trunc": N, "terms": [[[i1, ..., ik], "num", "den"], ...]}
///
/// with terms in DegLex order and numerator/denominator as decimal strings so
/// that arbitrary-precision values round-trip exactly.
nlohmann::json series_to_json(const TruncSeries& s);
TruncSeries series_from_json(const nlohmann::json& j);

}  // namespace holord
