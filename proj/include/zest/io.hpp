#pragma once

#include <json.hpp>

#include "zest/coquasi.hpp"

namespace zest {

/// Scalar <-> string: "0", "1", "-1", "i", "-i", or the exponent fraction
/// "a/b" meaning e^{2*pi*i*a/b}. Round-trip stable.
std::string scalar_to_string(const TorsionScalar& s);
TorsionScalar parse_scalar(const std::string& text);

nlohmann::json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const nlohmann::json& j);

nlohmann::json yd_to_json(const YetterDrinfeldDatum& v);
YetterDrinfeldDatum yd_from_json(const nlohmann::json& j);

nlohmann::json datum_to_json(const AssociativeZestingDatum& d);
AssociativeZestingDatum datum_from_json(const nlohmann::json& j);

nlohmann::json braided_to_json(const BraidedZestingDatum& bd);
BraidedZestingDatum braided_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& rep);
std::string report_to_text(const VerificationReport& rep);

/// Structure-constant export: index table for the multiplication, scalar
/// tables for the associator and r-form, with the originating datum embedded.
nlohmann::json algebra_to_json(const ZestedGroupAlgebra& z, const nlohmann::json& datum);

} // namespace zest
