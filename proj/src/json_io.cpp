#include "heights/json_io.hpp"

#include <sstream>
#include <string>

#include "heights/error.hpp"

namespace heights {

namespace {

const json& require(const json& j, const char* field) {
  if (!j.is_object()) throw DomainError("expected a JSON object", field);
  auto it = j.find(field);
  if (it == j.end() || it->is_null()) throw DomainError(std::string("missing required field '") + field + "'", field);
  return *it;
}

template <class T>
T get_as(const json& j, const char* field) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw DomainError(std::string("field '") + field + "' has the wrong type: " + e.what(), field);
  }
}

template <class T>
T required(const json& j, const char* field) {
  return get_as<T>(require(j, field), field);
}

template <class T>
std::optional<T> optional_field(const json& j, const char* field) {
  auto it = j.find(field);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return get_as<T>(*it, field);
}

Rational rational_field(const json& j, const char* field) {
  try {
    return require(j, field).get<Rational>();
  } catch (const DomainError& e) {
    throw DomainError(e.what(), field);
  }
}

std::optional<Rational> optional_rational(const json& j, const char* field) {
  auto it = j.find(field);
  if (it == j.end() || it->is_null()) return std::nullopt;
  try {
    return it->get<Rational>();
  } catch (const DomainError& e) {
    throw DomainError(e.what(), field);
  }
}

Exponent parse_exponent(const std::string& key) {
  Exponent e;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      e.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw DomainError("malformed exponent key '" + key + "'", "terms");
    }
  }
  return e;
}

std::string exponent_key(const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(e[i]);
  }
  return out;
}

json unipoly_to_json(const UniPoly& u) {
  json arr = json::array();
  for (const auto& c : u.coefficients()) arr.push_back(c);
  return arr;
}

UniPoly unipoly_from_json(const json& j, const char* field) {
  if (!j.is_array()) throw DomainError("expected an array of coefficients", field);
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(x.get<Rational>());
  return UniPoly(std::move(c));
}

}  // namespace

void to_json(json& j, const Rational& r) { j = r.str(); }

void from_json(const json& j, Rational& r) {
  if (j.is_string()) {
    r = Rational::parse(j.get<std::string>());
  } else if (j.is_number_integer()) {
    r = Rational(j.get<long>());
  } else {
    throw DomainError("rationals are written as \"p/q\" strings or integers");
  }
}

json form_to_json(const MultiForm<Rational>& f) {
  json terms = json::object();
  for (const auto& [e, c] : f.terms()) terms[exponent_key(e)] = c;
  return {{"numVars", f.num_vars()}, {"degree", f.degree()}, {"terms", terms}};
}

MultiForm<Rational> form_from_json(const json& j) {
  MultiForm<Rational> f(required<int>(j, "numVars"), required<int>(j, "degree"));
  const json& terms = require(j, "terms");
  if (!terms.is_object()) throw DomainError("terms must map exponent keys to coefficients", "terms");
  for (const auto& [key, value] : terms.items()) {
    Rational c;
    try {
      c = value.get<Rational>();
    } catch (const DomainError& e) {
      throw DomainError(e.what(), "terms");
    }
    f.add_term(parse_exponent(key), c);
  }
  return f;
}

json to_json(const WeightVector& w) { return json(w.entries()); }

json to_json(const StabilityVerdict& v) {
  json j{{"status", std::string(to_string(v.status))}, {"rule", v.rule}};
  j["certificate"] = v.certificate ? to_json(*v.certificate) : json(nullptr);
  return j;
}

StabilityVerdict verdict_from_json(const json& j) {
  StabilityVerdict v;
  v.status = stability_from_string(required<std::string>(j, "status"));
  v.rule = optional_field<std::string>(j, "rule").value_or("");
  if (auto c = optional_field<std::vector<long>>(j, "certificate")) v.certificate = WeightVector(*c);
  if (v.certificate && v.status != Stability::Unstable) {
    throw DomainError("a certificate is only attached to Unstable verdicts", "certificate");
  }
  return v;
}

json to_json(const SingularityProfile& p) {
  return {{"N", p.N},
          {"d", p.d},
          {"delta", p.delta},
          {"s", p.s},
          {"tangentConeNotHyperplaneCone", p.tangent_cone_not_hyperplane_cone},
          {"semihomogeneous", p.semihomogeneous},
          {"odpOnly", p.odp_only}};
}

SingularityProfile profile_from_json(const json& j) {
  SingularityProfile p;
  p.N = required<int>(j, "N");
  p.d = required<int>(j, "d");
  p.delta = optional_field<int>(j, "delta").value_or(1);
  p.s = optional_field<int>(j, "s").value_or(p.delta == 1 ? -1 : 0);
  p.tangent_cone_not_hyperplane_cone = optional_field<bool>(j, "tangentConeNotHyperplaneCone").value_or(false);
  p.semihomogeneous = optional_field<bool>(j, "semihomogeneous").value_or(false);
  p.odp_only = optional_field<bool>(j, "odpOnly").value_or(false);
  p.validate();
  return p;
}

json to_json(const PencilDescriptor& p) {
  json j{{"N", p.N}, {"d", p.d}, {"genus", p.genus}, {"degE", p.degE}, {"muMaxE", p.muMaxE}};
  j["degM"] = p.degM ? json(*p.degM) : json(nullptr);
  j["htInt"] = p.htInt ? json(*p.htInt) : json(nullptr);
  json points = json::array();
  for (std::size_t i = 0; i < p.singularPoints.size();) {
    std::size_t k = i;
    while (k < p.singularPoints.size() && p.singularPoints[k] == p.singularPoints[i]) ++k;
    json rec{{"multiplicity", p.singularPoints[i].multiplicity},
             {"semihomogeneous", p.singularPoints[i].semihomogeneous}};
    if (k - i > 1) rec["count"] = k - i;
    points.push_back(rec);
    i = k;
  }
  j["singularPoints"] = points;
  j["allFibersSemistable"] = p.allFibersSemistable ? json(*p.allFibersSemistable) : json(nullptr);
  return j;
}

PencilDescriptor descriptor_from_json(const json& j) {
  PencilDescriptor p;
  p.N = required<int>(j, "N");
  p.d = required<int>(j, "d");
  p.genus = optional_field<int>(j, "genus").value_or(0);
  p.degE = optional_field<long>(j, "degE").value_or(0);
  p.muMaxE = optional_rational(j, "muMaxE").value_or(p.slope());
  p.degM = optional_field<long>(j, "degM");
  p.htInt = optional_rational(j, "htInt");
  p.allFibersSemistable = optional_field<bool>(j, "allFibersSemistable");
  if (auto it = j.find("singularPoints"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) throw DomainError("singularPoints must be an array", "singularPoints");
    for (const auto& rec : *it) {
      SingularFiberRecord r;
      r.multiplicity = required<int>(rec, "multiplicity");
      r.semihomogeneous = optional_field<bool>(rec, "semihomogeneous").value_or(true);
      const long count = optional_field<long>(rec, "count").value_or(1);
      if (count < 0) throw DomainError("count must be non-negative", "singularPoints");
      if (r.multiplicity < 2) {
        throw DomainError("singular points have multiplicity at least 2", "singularPoints");
      }
      p.singularPoints.insert(p.singularPoints.end(), count, r);
    }
  }
  p.validate();
  return p;
}

json to_json(const HeightReport& r) {
  json j{{"htInt", r.htInt},
         {"htGKStab", r.htGKStab},
         {"bound", r.bound},
         {"equalityCase", r.equalityCase},
         {"singularityBudgetOk", r.singularityBudgetOk},
         {"generizationConditionOk", r.generizationConditionOk}};
  j["genericityBoundOk"] = r.genericityBoundOk ? json(*r.genericityBoundOk) : json(nullptr);
  return j;
}

HeightReport height_report_from_json(const json& j) {
  HeightReport r;
  r.htInt = rational_field(j, "htInt");
  r.htGKStab = rational_field(j, "htGKStab");
  r.bound = rational_field(j, "bound");
  r.equalityCase = required<bool>(j, "equalityCase");
  r.singularityBudgetOk = required<bool>(j, "singularityBudgetOk");
  r.generizationConditionOk = required<bool>(j, "generizationConditionOk");
  r.genericityBoundOk = optional_field<bool>(j, "genericityBoundOk");
  return r;
}

json to_json(const BinaryPencil& p) {
  json coeffs = json::object();
  for (const auto& [e, c] : p.form().terms()) coeffs[std::to_string(e[0])] = c.coefficients();
  return {{"d", p.d()}, {"m", p.m()}, {"coefficients", coeffs}};
}

BinaryPencil binary_pencil_from_json(const json& j) {
  const int d = required<int>(j, "d");
  const int m = required<int>(j, "m");
  const json& coeffs = require(j, "coefficients");
  if (!coeffs.is_object()) throw DomainError("coefficients must map X0-exponents to arrays", "coefficients");
  std::map<int, HomPoly2> map;
  for (const auto& [key, value] : coeffs.items()) {
    int index = 0;
    try {
      std::size_t used = 0;
      index = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw DomainError("coefficient key '" + key + "' is not an integer", "coefficients");
    }
    if (!value.is_array()) throw DomainError("each coefficient is an array of m+1 rationals", "coefficients");
    std::vector<Rational> c;
    try {
      for (const auto& x : value) c.push_back(x.get<Rational>());
    } catch (const DomainError& e) {
      throw DomainError(e.what(), "coefficients");
    }
    if (static_cast<int>(c.size()) != m + 1) {
      throw DomainError("coefficient of X0^" + key + " needs m+1 = " + std::to_string(m + 1) + " entries",
                        "coefficients");
    }
    map.emplace(index, HomPoly2(m, std::move(c)));
  }
  return BinaryPencil(d, m, map);
}

json to_json(const GitHeightReport& r) {
  return {{"htGIT", r.htGIT},
          {"htInt", r.htInt},
          {"contactLength", r.contactLength},
          {"delta", r.delta},
          {"allFibersSemistable", r.allFibersSemistable}};
}

GitHeightReport git_report_from_json(const json& j) {
  GitHeightReport r;
  r.htGIT = rational_field(j, "htGIT");
  r.htInt = rational_field(j, "htInt");
  r.contactLength = required<long>(j, "contactLength");
  r.delta = required<int>(j, "delta");
  r.allFibersSemistable = required<bool>(j, "allFibersSemistable");
  return r;
}

json to_json(const FiberLocus& l) {
  json j;
  switch (l.kind) {
    case FiberLocus::Kind::Affine: j["locus"] = "affine"; break;
    case FiberLocus::Kind::Infinity: j["locus"] = "infinity"; break;
    case FiberLocus::Kind::Generic: j["locus"] = "generic"; break;
  }
  j["factor"] = l.kind == FiberLocus::Kind::Affine ? unipoly_to_json(l.factor) : json(nullptr);
  if (l.kind == FiberLocus::Kind::Affine) j["factorText"] = l.factor.str();
  j["verdict"] = to_json(l.verdict);
  return j;
}

FiberLocus fiber_locus_from_json(const json& j) {
  FiberLocus l;
  const auto kind = required<std::string>(j, "locus");
  if (kind == "affine") l.kind = FiberLocus::Kind::Affine;
  else if (kind == "infinity") l.kind = FiberLocus::Kind::Infinity;
  else if (kind == "generic") l.kind = FiberLocus::Kind::Generic;
  else throw DomainError("unknown locus kind '" + kind + "'", "locus");
  if (l.kind == FiberLocus::Kind::Affine) l.factor = unipoly_from_json(require(j, "factor"), "factor");
  l.verdict = verdict_from_json(require(j, "verdict"));
  return l;
}

}  // namespace heights
