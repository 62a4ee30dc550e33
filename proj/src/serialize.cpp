#include "kronbounds/serialize.hpp"

namespace kronbounds {

nlohmann::json polynomial_json(const IntPolynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Int& c : p.coefficients()) arr.push_back(c.str());
  return arr;
}

IntPolynomial polynomial_from_json(const nlohmann::json& j) {
  std::vector<Int> coeffs;
  for (const auto& c : j) coeffs.emplace_back(c.get<std::string>());
  return IntPolynomial(std::move(coeffs));
}

nlohmann::json bound_report_json(const BoundReport& rep) {
  nlohmann::json j;
  j["lambda"] = rep.lambda.to_string();
  j["mu"] = rep.mu.to_string();
  j["nu"] = rep.nu.to_string();
  j["n"] = std::to_string(rep.lambda.size());
  j["true_g"] = rep.true_g ? nlohmann::json(rep.true_g->str()) : nlohmann::json(nullptr);
  nlohmann::json entries = nlohmann::json::array();
  for (const BoundEntry& e : rep.entries) {
    nlohmann::json je;
    je["name"] = e.name;
    je["direction"] = e.direction == BoundEntry::Direction::Upper ? "upper" : "lower";
    je["applicable"] = e.applicable;
    je["value"] = rat_to_string(e.value);
    je["satisfied"] = e.satisfied ? nlohmann::json(*e.satisfied) : nlohmann::json(nullptr);
    entries.push_back(std::move(je));
  }
  j["entries"] = std::move(entries);
  return j;
}

}  // namespace kronbounds
