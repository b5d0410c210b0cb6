#include "gontet/serialize.hpp"

#include <cstdio>

namespace gontet {

Json to_json(const BigInt& v) { return to_string(v); }
Json to_json(const BigRational& v) { return to_string(v); }

Json to_json(const Surd& v) {
  Json j;
  j["coeff"] = to_string(v.coeff());
  j["radicand"] = to_string(v.radicand());
  return j;
}

Json to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({e, to_string(c)}));
  Json j;
  j["terms"] = std::move(terms);
  return j;
}

Json to_json(const RatFunc& r) {
  Json j;
  j["num"] = to_json(r.num());
  j["den"] = to_json(r.den());
  return j;
}

Json to_json(const QFraction& f) {
  Json j;
  j["num"] = to_json(f.num);
  j["den"] = to_json(f.den);
  return j;
}

Json to_json(const SpinValue& v) {
  return std::visit([](const auto& x) { return to_json(x); }, v);
}

Json to_json(const Triple& t) { return Json::array({t.a, t.b, t.c}); }

Json to_json(const TetLabels& t) {
  return Json::array({Json::array({t.a(), t.b(), t.c()}), Json::array({t.d(), t.e(), t.f()})});
}

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

Json witness_json(const std::vector<std::pair<std::string, std::vector<int>>>& w) {
  Json j = Json::object();
  for (const auto& [name, xs] : w) j[name] = xs;
  return j;
}

}  // namespace

Json to_json(const IdentityReport& r) {
  Json j;
  j["identity"] = r.identity;
  j["equal"] = r.equal;
  Json sides = Json::object();
  for (const auto& [name, v] : r.sides) sides[name] = to_string(v);
  j["values"] = std::move(sides);
  j["witness"] = witness_json(r.witness);
  return j;
}

Json to_json(const QIdentityReport& r) {
  Json j;
  j["identity"] = r.identity;
  j["equal"] = r.equal;
  if (!r.exact.empty()) {
    Json sides = Json::object();
    for (const auto& [name, v] : r.exact) sides[name] = to_json(v);
    j["values"] = std::move(sides);
  }
  if (!r.numeric.empty()) {
    Json sides = Json::object();
    for (const auto& [name, z] : r.numeric) sides[name] = to_json(z);
    j["at_root"] = std::move(sides);
  }
  j["witness"] = witness_json(r.witness);
  return j;
}

Json to_json(const SuiteResult& r) {
  Json j;
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  if (!r.failures.empty()) j["failures"] = r.failures;
  return j;
}

Json to_json(std::complex<double> z) {
  char re[40], im[40];
  std::snprintf(re, sizeof re, "%.15g", z.real());
  std::snprintf(im, sizeof im, "%.15g", z.imag());
  return Json::array({re, im});
}

LaurentPoly laurent_from_json(const Json& j) {
  std::vector<std::pair<int, BigInt>> terms;
  for (const auto& t : j.at("terms")) {
    terms.emplace_back(t.at(0).get<int>(), parse_bigint(t.at(1).get<std::string>()));
  }
  return LaurentPoly::from_terms(terms);
}

Surd surd_from_json(const Json& j) {
  return Surd::normalize(parse_rational(j.at("coeff").get<std::string>()),
                         parse_bigint(j.at("radicand").get<std::string>()));
}

}  // namespace gontet
