#include "chebderiv/serialization.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace chebderiv {

namespace {

Json coeffs_json(const SparseCoeffs& c) {
  Json out = Json::object();
  for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
    out[std::to_string(it->first)] = to_string(it->second);
  }
  return out;
}

int parse_degree(const std::string& key) {
  int degree = -1;
  const auto [end, ec] = std::from_chars(key.data(), key.data() + key.size(), degree);
  if (ec != std::errc() || end != key.data() + key.size() || degree < 0 ||
      std::to_string(degree) != key) {
    throw std::invalid_argument("invalid degree key '" + key + "'");
  }
  return degree;
}

void read_coeffs(const Json& j, SparseCoeffs& into) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_object()) {
    throw std::invalid_argument("expected an object with a \"coeffs\" object");
  }
  for (const auto& [key, value] : j["coeffs"].items()) {
    if (!value.is_string()) {
      throw std::invalid_argument("coefficient for degree " + key + " must be a string");
    }
    const auto text = value.get<std::string>();
    const ExactRational q = parse_rational(text);
    if (q == 0 || to_string(q) != text) {
      throw std::invalid_argument("coefficient '" + text + "' is not in canonical form");
    }
    into.add(parse_degree(key), q);
  }
}

}  // namespace

Json to_json(const MonomialPoly& p) { return Json{{"coeffs", coeffs_json(p)}}; }

Json to_json(const ChebExpansion& e) {
  return Json{{"basis", std::string(basis_symbol(e.basis()))}, {"coeffs", coeffs_json(e)}};
}

Json to_json(const DiffMatrix& m) {
  Json columns = Json::object();
  for (int col = 0; col <= m.n_max(); ++col) {
    columns[std::to_string(col)] = coeffs_json(m.column(col));
  }
  return Json{{"basis", std::string(basis_symbol(m.basis()))},
              {"s", m.order()},
              {"n_max", m.n_max()},
              {"columns", std::move(columns)}};
}

MonomialPoly monomial_from_json(const Json& j) {
  if (j.is_object() && j.contains("basis")) {
    throw std::invalid_argument("monomial polynomial must not carry a \"basis\" field");
  }
  MonomialPoly out;
  read_coeffs(j, out);
  return out;
}

ChebExpansion expansion_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("basis") || !j["basis"].is_string()) {
    throw std::invalid_argument("expansion needs a string \"basis\" field");
  }
  ChebExpansion out(parse_basis(j["basis"].get<std::string>()));
  read_coeffs(j, out);
  return out;
}

}  // namespace chebderiv
