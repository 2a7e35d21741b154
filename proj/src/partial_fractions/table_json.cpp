#include "zetaforms/partial_fractions/table_json.hpp"

#include "zetaforms/errors.hpp"

namespace zetaforms {

nlohmann::json table_to_json(const PartialFractionTable& table) {
  const auto& p = table.params();
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 1; i <= p.a; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j <= p.n; ++j) {
      const Rational& c = table.c(i, j);
      row.push_back({c.numerator().get_str(), c.denominator().get_str()});
    }
    rows.push_back(std::move(row));
  }
  return {{"a", p.a}, {"r", p.r}, {"n", p.n}, {"c", std::move(rows)}};
}

PartialFractionTable table_from_json(const nlohmann::json& j) {
  try {
    const auto params =
        FormParams::make(j.at("a").get<int>(), j.at("r").get<int>(), j.at("n").get<int>());
    const auto& rows = j.at("c");
    if (rows.size() != static_cast<std::size_t>(params.a)) {
      throw DomainError("table JSON has wrong number of rows");
    }
    std::vector<Rational> coeffs;
    for (const auto& row : rows) {
      if (row.size() != static_cast<std::size_t>(params.n + 1)) {
        throw DomainError("table JSON has wrong number of columns");
      }
      for (const auto& entry : row) {
        coeffs.push_back(Rational::parse(entry.at(0).get<std::string>() + "/" +
                                         entry.at(1).get<std::string>()));
      }
    }
    return PartialFractionTable(params, std::move(coeffs));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed table JSON: ") + e.what());
  }
}

}  // namespace zetaforms
