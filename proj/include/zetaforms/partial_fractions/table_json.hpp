#pragma once

#include "json.hpp"

#include "zetaforms/partial_fractions/partial_fractions.hpp"

namespace zetaforms {

/// {"a":…, "r":…, "n":…, "c":[[["num","den"], …], …]}, rows i = 1..a,
/// columns j = 0..n, integers as decimal strings.
nlohmann::json table_to_json(const PartialFractionTable& table);
PartialFractionTable table_from_json(const nlohmann::json& j);

}  // namespace zetaforms
