#include "gll/json_io.hpp"

#include <stdexcept>

namespace gll {

namespace {

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::invalid_argument("expected [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

}  // namespace

Json to_json(const RootSet& roots) {
  Json arr = Json::array();
  for (const RootEntry& e : roots.entries()) {
    arr.push_back(Json::array({e.location.real(), e.location.imag(), e.multiplicity}));
  }
  return arr;
}

RootSet root_set_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("RootSet JSON must be an array");
  std::vector<RootEntry> entries;
  entries.reserve(j.size());
  for (const Json& item : j) {
    if (!item.is_array() || item.size() < 2 || item.size() > 3) {
      throw std::invalid_argument("RootSet entry must be [re, im] or [re, im, mult]");
    }
    RootEntry e;
    e.location = complex_from_json(Json::array({item[0], item[1]}));
    if (item.size() == 3) {
      if (!item[2].is_number_integer() || item[2].get<long long>() < 1) {
        throw std::invalid_argument("RootSet multiplicity must be a positive integer");
      }
      e.multiplicity = item[2].get<int>();
    }
    entries.push_back(e);
  }
  return RootSet(std::move(entries));
}

Json to_json(const Polynomial& p) {
  Json arr = Json::array();
  for (Complex c : p.coeffs()) arr.push_back(complex_to_json(c));
  return arr;
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("Polynomial JSON must be a nonempty array");
  std::vector<Complex> coeffs;
  coeffs.reserve(j.size());
  for (const Json& item : j) coeffs.push_back(complex_from_json(item));
  return Polynomial(std::move(coeffs));
}

Json to_json(const SolveReport& report) {
  return Json{{"roots", to_json(report.roots)},
              {"iterations", report.iterations},
              {"max_residual", report.max_residual},
              {"converged", report.converged}};
}

Json to_json(const Hull& h) {
  Json arr = Json::array();
  for (Complex v : h.vertices()) arr.push_back(complex_to_json(v));
  return arr;
}

Json to_json(const Ellipse& e) {
  return Json{{"f1", complex_to_json(e.focus1)},
              {"f2", complex_to_json(e.focus2)},
              {"a", e.semi_major}};
}

Ellipse ellipse_from_json(const Json& j) {
  Ellipse e;
  e.focus1 = complex_from_json(j.at("f1"));
  e.focus2 = complex_from_json(j.at("f2"));
  e.semi_major = j.at("a").get<double>();
  return e;
}

Json to_json(const GaussLucasReport& report) {
  Json witnesses = Json::array();
  for (const CriticalPointCheck& check : report.checks) {
    if (!check.witness) continue;
    witnesses.push_back(Json{{"point", complex_to_json(check.location)},
                             {"direction", complex_to_json(check.witness->direction)},
                             {"margin", check.witness->margin}});
  }
  return Json{{"critical", to_json(report.critical)},
              {"hull", to_json(report.hull)},
              {"contained", report.contained},
              {"max_field_at_critical", report.max_field_at_critical},
              {"witnesses", witnesses},
              {"eps", report.eps},
              {"converged", report.solver_converged},
              {"worst_signed_distance", report.worst_signed_distance}};
}

}  // namespace gll
