#pragma once

#include <cstddef>
#include <ostream>

#include <json.hpp>

#include "rieszkit/frequency_set.hpp"
#include "rieszkit/interval_set.hpp"

namespace rieszkit {

/// {"parts": [[lo, hi], ...], "measure": m}
nlohmann::json to_json(const IntervalSet& S);
IntervalSet interval_set_from_json(const nlohmann::json& j);

/// {"points": [...], "meta": "..."}
nlohmann::json to_json(const FrequencySet& L);
FrequencySet frequency_set_from_json(const nlohmann::json& j);

/// "x,chi" rows on n uniform points of the window.
void write_indicator_csv(std::ostream& out, const IntervalSet& S, const Interval& window, std::size_t n);

}  // namespace rieszkit
