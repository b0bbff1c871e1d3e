#include "locmult/serialize.hpp"

#include "locmult/errors.hpp"

namespace locmult {

namespace {

template <typename T>
std::optional<T> optional_field(const Json& j, const char* key, T (*read)(const Json&)) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return read(j.at(key));
}

Json nullable(const auto& value) {
  if (!value) return nullptr;
  return to_json(*value);
}

GenericWitness generic_from_json(const Json& j) {
  return GenericWitness{j.at("seed").get<std::uint64_t>(), j.at("draw").get<std::uint64_t>(),
                        matrix_from_json(j.at("matrix")), j.at("r").get<unsigned>(),
                        j.at("colength").get<std::size_t>()};
}

Json generic_to_json(const GenericWitness& w) {
  return Json{{"seed", w.seed}, {"draw", w.draw}, {"matrix", to_json(w.a)}, {"r", w.r}, {"colength", w.colength_j}};
}

std::string route_name(NuRoute route) { return route == NuRoute::kMonomial ? "monomial" : "rees"; }

}  // namespace

Json to_json(const Rational& value) { return to_string(value); }

Rational rational_from_json(const Json& j) { return parse_rational(j.get<std::string>()); }

Json to_json(const Monomial& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) out.push_back(m[i]);
  return out;
}

Monomial monomial_from_json(const Json& j, std::size_t nvars) {
  const auto exps = j.get<std::vector<unsigned>>();
  if (exps.size() != nvars) throw ParseError("monomial has the wrong number of exponents", 0);
  return Monomial(std::span<const unsigned>(exps));
}

Json to_json(const Matrix& m) { return m.to_strings(); }

Matrix matrix_from_json(const Json& j) {
  return Matrix::from_strings(j.get<std::vector<std::vector<std::string>>>());
}

Json to_json(const MultiplicityCertificate& c) {
  Json out{{"e", c.e}};
  if (c.route == MultiplicityRoute::kGenericReduction) {
    out["route"] = "generic-reduction";
    out["witness"] = c.generic ? generic_to_json(*c.generic) : Json(nullptr);
  } else {
    out["route"] = "differences";
    Json samples = Json::array();
    if (c.differences) {
      for (const auto& s : c.differences->samples) samples.push_back(Json{{"k", s.k}, {"length", s.length}});
      out["witness"] = Json{{"samples", samples}, {"differences", c.differences->differences}};
    } else {
      out["witness"] = nullptr;
    }
  }
  return out;
}

MultiplicityCertificate multiplicity_from_json(const Json& j) {
  MultiplicityCertificate c;
  c.e = j.at("e").get<std::size_t>();
  const auto route = j.at("route").get<std::string>();
  const Json& w = j.at("witness");
  if (route == "generic-reduction") {
    c.route = MultiplicityRoute::kGenericReduction;
    if (!w.is_null()) c.generic = generic_from_json(w);
  } else if (route == "differences") {
    c.route = MultiplicityRoute::kDifferences;
    if (!w.is_null()) {
      DifferencesWitness d;
      for (const auto& s : w.at("samples")) {
        d.samples.push_back(HSSample{s.at("k").get<unsigned>(), s.at("length").get<std::size_t>()});
      }
      d.differences = w.at("differences").get<std::vector<long long>>();
      c.differences = std::move(d);
    }
  } else {
    throw ParseError("unknown multiplicity route '" + route + "'", 0);
  }
  return c;
}

Json to_json(const ReductionCertificate& c) {
  return Json{{"verdict", to_string(c.verdict)},
              {"r", c.r ? Json(*c.r) : Json(nullptr)},
              {"e-i", nullable(c.e_i)},
              {"e-j", nullable(c.e_j)}};
}

ReductionCertificate reduction_from_json(const Json& j) {
  ReductionCertificate c;
  c.verdict = parse_verdict(j.at("verdict").get<std::string>());
  if (!j.at("r").is_null()) c.r = j.at("r").get<unsigned>();
  c.e_i = optional_field<MultiplicityCertificate>(j, "e-i", multiplicity_from_json);
  c.e_j = optional_field<MultiplicityCertificate>(j, "e-j", multiplicity_from_json);
  return c;
}

Json to_json(const ClosureWitness& w) {
  Json out{{"member", w.member}, {"shortcut", w.shortcut ? Json(*w.shortcut) : Json(nullptr)}};
  if (w.weight) out["weight"] = *w.weight;
  if (w.integral_r) out["integral-r"] = *w.integral_r;
  if (w.bound) out["bound"] = generic_to_json(*w.bound);
  if (w.e_i) out["e-i"] = to_json(*w.e_i);
  if (w.e_ix) out["e-if"] = to_json(*w.e_ix);
  return out;
}

ClosureWitness closure_from_json(const Json& j) {
  ClosureWitness w;
  w.member = j.at("member").get<bool>();
  if (!j.at("shortcut").is_null()) w.shortcut = j.at("shortcut").get<std::string>();
  if (j.contains("weight")) w.weight = j.at("weight").get<std::vector<unsigned>>();
  if (j.contains("integral-r")) w.integral_r = j.at("integral-r").get<unsigned>();
  if (j.contains("bound")) w.bound = generic_from_json(j.at("bound"));
  w.e_i = optional_field<MultiplicityCertificate>(j, "e-i", multiplicity_from_json);
  w.e_ix = optional_field<MultiplicityCertificate>(j, "e-if", multiplicity_from_json);
  return w;
}

Json to_json(const LojaBracket& b) {
  Json table = Json::array();
  for (const auto& e : b.table) {
    Json entry{{"q", e.q}, {"nu", e.nu}, {"route", route_name(e.route)}};
    if (e.route == NuRoute::kRees) {
      Json members = Json::array();
      for (const auto& [m, w] : e.at_nu) members.push_back(Json{{"monomial", to_json(m)}, {"witness", to_json(w)}});
      entry["at-nu"] = members;
      entry["below-nu"] = e.below_nu ? Json{{"monomial", to_json(e.below_nu->first)},
                                            {"witness", to_json(e.below_nu->second)}}
                                     : Json(nullptr);
    }
    table.push_back(entry);
  }
  Json out{{"table", table}, {"lower", to_json(b.lower)}, {"upper", to_json(b.upper)}, {"exact", nullable(b.exact)}};
  if (b.reduction) {
    out["reduction"] = Json{{"matrix", to_json(b.reduction->a)},
                            {"certificate", to_json(b.reduction->certificate)},
                            {"witness", generic_to_json(b.reduction->witness)}};
  } else {
    out["reduction"] = nullptr;
  }
  return out;
}

LojaBracket loja_from_json(const Json& j, const Ideal& ideal) {
  const std::size_t n = ideal.ring()->size();
  LojaBracket b;
  for (const auto& entry : j.at("table")) {
    NuEntry e;
    e.q = entry.at("q").get<unsigned>();
    e.nu = entry.at("nu").get<unsigned>();
    const auto route = entry.at("route").get<std::string>();
    if (route == "monomial") {
      e.route = NuRoute::kMonomial;
    } else if (route == "rees") {
      e.route = NuRoute::kRees;
      for (const auto& m : entry.at("at-nu")) {
        e.at_nu.emplace_back(monomial_from_json(m.at("monomial"), n), closure_from_json(m.at("witness")));
      }
      const Json& below = entry.at("below-nu");
      if (!below.is_null()) {
        e.below_nu.emplace(monomial_from_json(below.at("monomial"), n), closure_from_json(below.at("witness")));
      }
    } else {
      throw ParseError("unknown nu route '" + route + "'", 0);
    }
    b.table.push_back(std::move(e));
  }
  b.lower = rational_from_json(j.at("lower"));
  b.upper = rational_from_json(j.at("upper"));
  b.exact = optional_field<Rational>(j, "exact", rational_from_json);
  const Json& red = j.at("reduction");
  if (!red.is_null()) {
    Matrix a = matrix_from_json(red.at("matrix"));
    if (a.cols() != ideal.size()) throw ParseError("reduction matrix does not match the ideal", 0);
    Ideal jj(ideal.ring(), combine(a, ideal.generators()));
    b.reduction = FoundReduction{std::move(jj), std::move(a), reduction_from_json(red.at("certificate")),
                                 generic_from_json(red.at("witness"))};
  }
  return b;
}

Json to_json(const SimultaneousProjection& p) {
  Json certs = Json::array();
  for (const auto& c : p.certificates) certs.push_back(to_json(c));
  return Json{{"matrix", to_json(p.pi)}, {"draw", p.draw}, {"certificates", certs}};
}

SimultaneousProjection projection_from_json(const Json& j) {
  SimultaneousProjection p;
  p.pi = matrix_from_json(j.at("matrix"));
  p.draw = j.at("draw").get<std::uint64_t>();
  for (const auto& c : j.at("certificates")) p.certificates.push_back(reduction_from_json(c));
  return p;
}

Json to_json(const NewtonPolyhedron& p) {
  Json facets = Json::array();
  for (const auto& f : p.facets) {
    Json normal = Json::array();
    for (const auto& x : f.normal) normal.push_back(to_json(x));
    facets.push_back(Json{{"normal", normal}, {"rhs", to_json(f.rhs)}});
  }
  Json vertices = Json::array();
  for (const auto& v : p.vertices) vertices.push_back(to_json(v));
  return Json{{"facets", facets}, {"vertices", vertices}};
}

}  // namespace locmult
