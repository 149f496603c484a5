// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "dicke/npt_witness.hpp"

namespace dicke {

/// Shortest round-trippable decimal rendering, identical across the JSON
/// and CSV writers.
std::string format_double(double value);

/// Parses "1,2,0" or "(1,2,0)" into an occupation index.
OccupationIndex parse_occupation(const std::string& text);

/// Serialization of a certification report. Rationals travel as "p/q"
/// strings, floating-point fields as shortest round-trip decimals.
std::string to_json(const CertificationReport& report, int indent = 2);
CertificationReport from_json(const std::string& text);

/// One line per record under the header
/// "m,k,discriminant,witness_value,spectral_min,is_npt".
std::string to_csv(const CertificationReport& report);

/// Human-readable summary table.
std::string to_text(const CertificationReport& report);

}  // namespace dicke
