#include "mzv/json_io.hpp"

#include <stdexcept>

namespace mzv {

nlohmann::json to_json(const MzvCombo& c) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [k, q] : c.terms()) out[k.to_string()] = q.get_str();
  return out;
}

nlohmann::json to_json(const RegPoly& p) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [d, c] : p.coefficients()) out["T^" + std::to_string(d)] = to_json(c);
  return out;
}

MzvCombo combo_from_json(const nlohmann::json& j) {
  MzvCombo out;
  for (const auto& [key, value] : j.items()) {
    mpq_class q(value.get<std::string>());
    q.canonicalize();
    out.add_term(Index::parse(key), q);
  }
  return out;
}

RegPoly regpoly_from_json(const nlohmann::json& j) {
  RegPoly out;
  for (const auto& [key, value] : j.items()) {
    if (key.rfind("T^", 0) != 0) throw std::invalid_argument("bad RegPoly key: " + key);
    out.add(std::stoi(key.substr(2)), combo_from_json(value));
  }
  return out;
}

}  // namespace mzv
