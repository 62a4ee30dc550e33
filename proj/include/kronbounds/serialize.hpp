#pragma once

#include "kronbounds/bounds.hpp"
#include "kronbounds/qbinomial.hpp"

#include "json.hpp"

namespace kronbounds {

/// JSON array of decimal-string coefficients, lowest power first. Strings
/// keep arbitrarily large coefficients exact for any consumer.
nlohmann::json polynomial_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const nlohmann::json& j);

/// Report schema: integers and rationals as decimal strings ("60", "20/3"),
/// absent true_g as null.
nlohmann::json bound_report_json(const BoundReport& rep);

}  // namespace kronbounds
