#include "locmult/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include "locmult/errors.hpp"
#include "locmult/family.hpp"
#include "locmult/lojasiewicz.hpp"
#include "locmult/multiplicity.hpp"
#include "locmult/newton.hpp"
#include "locmult/parser.hpp"
#include "locmult/reduction.hpp"
#include "locmult/serialize.hpp"

namespace locmult::cli {

namespace {

struct Flags {
  std::string file;
  bool json = false;
  std::uint64_t seed = 0;
  unsigned trials = 8;
  unsigned rmax = 6;
  std::optional<unsigned> kmax;
  unsigned qmax = 3;
  std::string method = "both";
  std::string report;
};

struct Outcome {
  Json result;
  Json certificate;
  Json diagnostics = Json::array();
  std::string text;
};

// A parsed problem with its ring.
struct Problem {
  ProblemFile file;
  RingPtr ring;

  const std::string& need(const std::optional<std::string>& field, const char* keyword) const {
    if (!field) throw ParseError(std::string("problem file has no '") + keyword + "' line", 0);
    return *field;
  }
  Ideal ideal() const { return Ideal(ring, parse_polynomial_list(need(file.ideal, "ideal"), ring)); }
  Ideal sub() const { return Ideal(ring, parse_polynomial_list(need(file.sub, "sub"), ring)); }
  Polynomial element() const { return parse_polynomial(need(file.element, "element"), ring); }
  FamilySpec family() const {
    std::vector<Rational> samples;
    if (file.samples) {
      std::string item;
      std::istringstream in(*file.samples);
      while (std::getline(in, item, ',')) {
        const auto first = item.find_first_not_of(' ');
        const auto last = item.find_last_not_of(' ');
        if (first == std::string::npos) throw ParseError("empty sample", 0);
        samples.push_back(parse_rational(item.substr(first, last - first + 1)));
      }
    }
    return FamilySpec::parse(file.ring, need(file.param, "param"), need(file.map, "map"), std::move(samples));
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CertifyOptions certify_options(const Flags& f) {
  CertifyOptions o;
  o.seed = f.seed;
  o.trials = f.trials;
  o.rmax = f.rmax;
  o.kmax = f.kmax;
  return o;
}

void append(Json& diagnostics, const std::vector<std::string>& lines) {
  for (const auto& line : lines) diagnostics.push_back(line);
}

std::string bracket_text(const Rational& lower, const Rational& upper) {
  return "(" + to_string(lower) + ", " + to_string(upper) + "]";
}

// ---- commands ----------------------------------------------------------

Outcome cmd_mult(const Problem& p, const Flags& f) {
  const Ideal ideal = p.ideal();
  require_m_primary(ideal, "mult");
  if (f.method != "diff" && f.method != "generic" && f.method != "both") {
    throw ParseError("--method must be diff, generic or both", 0);
  }
  const CertifyOptions options = certify_options(f);
  Outcome o;
  std::optional<MultiplicityCertificate> generic;
  std::optional<MultiplicityCertificate> differences;
  std::vector<std::string> diagnostics;
  if (f.method != "diff") {
    if (auto red = search_generic_reduction(ideal, options, diagnostics)) {
      MultiplicityCertificate c;
      c.e = red->witness.colength_j;
      c.route = MultiplicityRoute::kGenericReduction;
      c.generic = std::move(red->witness);
      generic = std::move(c);
    }
  }
  if (f.method != "generic") {
    const unsigned kmax = f.kmax.value_or(static_cast<unsigned>(p.ring->size()) + 6);
    DifferencesResult d = e_by_differences(ideal, kmax);
    if (d.e) {
      differences = d.certificate();
    } else {
      diagnostics.push_back("differences did not stabilize up to k = " + std::to_string(kmax));
    }
  }
  if (!generic && !differences) throw TrialsExhausted("mult: no route certified e", diagnostics);
  const std::size_t e = generic ? generic->e : differences->e;
  o.result = Json{{"e", e}, {"method", f.method}};
  if (generic && differences) o.result["agree"] = generic->e == differences->e;
  o.certificate = Json{{"generic", generic ? to_json(*generic) : Json(nullptr)},
                       {"differences", differences ? to_json(*differences) : Json(nullptr)}};
  append(o.diagnostics, diagnostics);
  o.text = "e = " + std::to_string(e) + "\n";
  if (generic) o.text += "  generic reduction: e = " + std::to_string(generic->e) + "\n";
  if (differences) o.text += "  differences: e = " + std::to_string(differences->e) + "\n";
  return o;
}

Outcome cmd_reduce(const Problem& p, const Flags& f) {
  const Ideal i = p.ideal();
  const Ideal j = p.sub();
  const ReductionCertificate c = is_reduction_rees(j, i, certify_options(f));
  Outcome o;
  o.result = Json{{"verdict", to_string(c.verdict)},
                  {"r", c.r ? Json(*c.r) : Json(nullptr)},
                  {"e-i", c.e_i ? Json(c.e_i->e) : Json(nullptr)},
                  {"e-j", c.e_j ? Json(c.e_j->e) : Json(nullptr)}};
  o.certificate = to_json(c);
  if (c.e_i) append(o.diagnostics, c.e_i->diagnostics);
  if (c.e_j) append(o.diagnostics, c.e_j->diagnostics);
  o.text = "verdict: " + to_string(c.verdict) + "\n";
  if (c.r) o.text += "  r = " + std::to_string(*c.r) + "\n";
  if (c.e_i && c.e_j) o.text += "  e(I) = " + std::to_string(c.e_i->e) + ", e(J) = " + std::to_string(c.e_j->e) + "\n";
  return o;
}

Outcome cmd_member(const Problem& p, const Flags&) {
  const Ideal ideal = p.ideal();
  const Polynomial f = p.element();
  const Polynomial nf = normal_form(f, ideal);
  Outcome o;
  o.result = Json{{"member", nf.is_zero()}, {"normal-form", nf.to_string()}};
  o.certificate = Json{{"normal-form", nf.to_string()}};
  o.text = std::string(nf.is_zero() ? "member" : "not a member") + "\n  normal form: " + nf.to_string() + "\n";
  return o;
}

Outcome cmd_closure(const Problem& p, const Flags& f) {
  const ClosureWitness w = closure_member(p.element(), p.ideal(), certify_options(f));
  Outcome o;
  o.result = Json{{"member", w.member}};
  o.certificate = to_json(w);
  if (w.e_i) append(o.diagnostics, w.e_i->diagnostics);
  if (w.e_ix) append(o.diagnostics, w.e_ix->diagnostics);
  o.text = std::string(w.member ? "in the integral closure" : "not in the integral closure") + "\n";
  if (w.shortcut) o.text += "  decided by: " + *w.shortcut + "\n";
  return o;
}

Json bracket_result(const LojaBracket& b) {
  Json table = Json::array();
  for (const auto& e : b.table) table.push_back(Json{{"q", e.q}, {"nu", e.nu}});
  return Json{{"table", table},
              {"lower", to_json(b.lower)},
              {"upper", to_json(b.upper)},
              {"exact", b.exact ? to_json(*b.exact) : Json(nullptr)}};
}

Outcome cmd_loja(const Problem& p, const Flags& f) {
  const Ideal ideal = p.ideal();
  const LojaBracket b = loja_bracket(ideal, f.qmax, certify_options(f));
  Outcome o;
  o.result = bracket_result(b);
  o.certificate = to_json(b);
  o.text = "nu:";
  for (const auto& e : b.table) o.text += " " + std::to_string(e.q) + ":" + std::to_string(e.nu);
  o.text += "\nbracket " + bracket_text(b.lower, b.upper) + "\n";
  if (b.exact) o.text += "exact " + to_string(*b.exact) + "\n";
  return o;
}

Json newton_result(const MonomialIdeal& mono) {
  return Json{{"multiplicity", monomial_multiplicity(mono)},
              {"loja", to_json(monomial_loja(mono))},
              {"closure", monomial_closure(mono).to_string()}};
}

Outcome cmd_newton(const Problem& p, const Flags&) {
  const MonomialIdeal mono = MonomialIdeal::from_ideal(p.ideal());
  if (!mono.is_m_primary()) throw HypothesisError("newton: ideal is not m-primary");
  const NewtonPolyhedron poly = newton_polyhedron(mono);
  Outcome o;
  o.result = newton_result(mono);
  o.certificate = to_json(poly);
  o.text = "multiplicity " + std::to_string(o.result["multiplicity"].get<std::size_t>()) + "\nloja " +
           o.result["loja"].get<std::string>() + "\nclosure " + o.result["closure"].get<std::string>() + "\nfacets:\n";
  for (const auto& facet : poly.facets) {
    o.text += " ";
    for (const auto& x : facet.normal) o.text += " " + to_string(x);
    o.text += " >= " + to_string(facet.rhs) + "\n";
  }
  return o;
}

Json family_result(const FamilyReport& r) {
  Json samples = Json::array();
  for (const auto& s : r.samples) {
    samples.push_back(Json{{"t", to_json(s.t)},
                           {"ideal", s.ideal.to_string()},
                           {"m-primary", s.m_primary},
                           {"e", s.e ? Json(s.e->e) : Json(nullptr)},
                           {"loja", s.loja ? bracket_result(*s.loja) : Json(nullptr)}});
  }
  return Json{{"samples", samples},
              {"multiplicity-constant", r.multiplicity_constant},
              {"projection", r.projection ? to_json(r.projection->pi) : Json(nullptr)},
              {"semicontinuity", to_string(r.semicontinuity)},
              {"violation", r.violation ? Json(*r.violation) : Json(nullptr)}};
}

Outcome cmd_family(const Problem& p, const Flags& f) {
  const FamilySpec family = p.family();
  const FamilyReport r = semicontinuity_report(family, f.qmax, certify_options(f));
  Outcome o;
  o.result = family_result(r);
  Json samples = Json::array();
  for (const auto& s : r.samples) {
    samples.push_back(Json{{"t", to_json(s.t)},
                           {"multiplicity", s.e ? to_json(*s.e) : Json(nullptr)},
                           {"loja", s.loja ? to_json(*s.loja) : Json(nullptr)}});
    append(o.diagnostics, s.diagnostics);
  }
  o.certificate = Json{{"samples", samples}, {"projection", r.projection ? to_json(*r.projection) : Json(nullptr)}};
  append(o.diagnostics, r.projection_diagnostics);
  for (const auto& s : r.samples) {
    o.text += "t = " + to_string(s.t) + ": " + s.ideal.to_string();
    if (!s.m_primary) {
      o.text += " not m-primary\n";
      continue;
    }
    o.text += " e = " + (s.e ? std::to_string(s.e->e) : std::string("?"));
    if (s.loja) o.text += " loja " + bracket_text(s.loja->lower, s.loja->upper);
    o.text += "\n";
  }
  o.text += std::string("multiplicity ") + (r.multiplicity_constant ? "constant" : "not constant") + "\n";
  if (r.projection) {
    o.text += "projection:";
    for (const auto& row : r.projection->pi.to_strings()) {
      o.text += " [";
      for (std::size_t k = 0; k < row.size(); ++k) o.text += (k ? ", " : "") + row[k];
      o.text += "]";
    }
    o.text += "\n";
  } else {
    o.text += "projection: none\n";
  }
  o.text += "semicontinuity: " + to_string(r.semicontinuity) + "\n";
  if (r.violation) o.text += "  " + *r.violation + "\n";
  return o;
}

// ---- verify ------------------------------------------------------------

bool verify_mult(const Problem& p, const Json& result, const Json& cert) {
  const Ideal ideal = p.ideal();
  bool any = false;
  for (const char* key : {"generic", "differences"}) {
    if (cert.at(key).is_null()) continue;
    const MultiplicityCertificate c = multiplicity_from_json(cert.at(key));
    if (!verify_multiplicity(c, ideal)) return false;
    if (!any && c.e != result.at("e").get<std::size_t>()) return false;
    any = true;
  }
  return any;
}

bool verify_reduce(const Problem& p, const Json& result, const Json& cert) {
  const ReductionCertificate c = reduction_from_json(cert);
  if (result.at("verdict").get<std::string>() != to_string(c.verdict)) return false;
  return verify_reduction(c, p.sub(), p.ideal());
}

bool verify_member(const Problem& p, const Json& result, const Json& cert) {
  const Polynomial nf = normal_form(p.element(), p.ideal());
  return nf.to_string() == cert.at("normal-form").get<std::string>() &&
         result.at("member").get<bool>() == nf.is_zero();
}

bool verify_closure_report(const Problem& p, const Json& result, const Json& cert) {
  const ClosureWitness w = closure_from_json(cert);
  return result.at("member").get<bool>() == w.member && verify_closure(w, p.element(), p.ideal());
}

bool verify_loja_report(const Problem& p, const Json& result, const Json& cert) {
  const Ideal ideal = p.ideal();
  const LojaBracket b = loja_from_json(cert, ideal);
  return bracket_result(b) == result && verify_loja(b, ideal);
}

bool verify_newton(const Problem& p, const Json& result, const Json& cert) {
  const MonomialIdeal mono = MonomialIdeal::from_ideal(p.ideal());
  if (!mono.is_m_primary()) return false;
  return to_json(newton_polyhedron(mono)) == cert && newton_result(mono) == result;
}

bool verify_family(const Problem& p, const Json& result, const Json& cert) {
  const FamilySpec family = p.family();
  const Json& samples = cert.at("samples");
  const Json& claimed = result.at("samples");
  if (samples.size() != family.samples().size() || claimed.size() != samples.size()) return false;
  std::vector<std::optional<std::size_t>> es;
  std::optional<Rational> special_lower;
  std::vector<std::pair<Rational, Rational>> uppers;
  bool all_m_primary = true;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Rational& t = family.samples()[i];
    if (rational_from_json(samples[i].at("t")) != t) return false;
    const Ideal ideal = specialize_family(family, t);
    const bool m_primary = is_m_primary(ideal);
    all_m_primary = all_m_primary && m_primary;
    if (claimed[i].at("m-primary").get<bool>() != m_primary) return false;
    std::optional<std::size_t> e;
    if (!samples[i].at("multiplicity").is_null()) {
      const MultiplicityCertificate c = multiplicity_from_json(samples[i].at("multiplicity"));
      if (!verify_multiplicity(c, ideal)) return false;
      e = c.e;
    }
    es.push_back(e);
    if (!samples[i].at("loja").is_null()) {
      const LojaBracket b = loja_from_json(samples[i].at("loja"), ideal);
      if (!verify_loja(b, ideal) || bracket_result(b) != claimed[i].at("loja")) return false;
      if (t == 0) special_lower = b.lower;
      else uppers.emplace_back(t, b.upper);
    }
  }
  const bool constant = std::all_of(es.begin(), es.end(), [&](const auto& e) { return e && e == es.front(); });
  if (result.at("multiplicity-constant").get<bool>() != constant) return false;
  if (!cert.at("projection").is_null()) {
    if (!verify_projection(projection_from_json(cert.at("projection")), family)) return false;
  } else if (!result.at("projection").is_null()) {
    return false;
  }
  Semicontinuity flag = Semicontinuity::kNotApplicable;
  if (constant && all_m_primary && special_lower) {
    flag = Semicontinuity::kHolds;
    for (const auto& [t, upper] : uppers) {
      if (upper < *special_lower) flag = Semicontinuity::kViolated;
    }
  }
  return result.at("semicontinuity").get<std::string>() == to_string(flag);
}

using Command = std::function<Outcome(const Problem&, const Flags&)>;
using Checker = std::function<bool(const Problem&, const Json&, const Json&)>;

const std::vector<std::tuple<std::string, std::string, Command, Checker>>& commands() {
  static const std::vector<std::tuple<std::string, std::string, Command, Checker>> table = {
      {"mult", "certified Hilbert-Samuel multiplicity of `ideal`", cmd_mult, verify_mult},
      {"reduce", "is `sub` a reduction of `ideal`", cmd_reduce, verify_reduce},
      {"member", "is `element` in `ideal` (local ring)", cmd_member, verify_member},
      {"closure", "is `element` in the integral closure of `ideal`", cmd_closure, verify_closure_report},
      {"loja", "Lojasiewicz exponent bracket of `ideal`", cmd_loja, verify_loja_report},
      {"newton", "Newton polyhedron data of a monomial `ideal`", cmd_newton, verify_newton},
      {"family", "one-parameter family report for `map`", cmd_family, verify_family},
  };
  return table;
}

Problem load_problem(const std::string& path) {
  Problem p{parse_problem(read_file(path)), nullptr};
  p.ring = make_ring(p.file.ring);
  return p;
}

Json envelope(const std::string& command, const Problem& p, const Flags& f, const Outcome& o, long long ms) {
  return Json{{"command", command},
              {"input-digest", "sha256:" + sha256_hex(p.file.canonical)},
              {"seed", f.seed},
              {"result", o.result},
              {"certificate", o.certificate},
              {"diagnostics", o.diagnostics},
              {"timing-ms", ms}};
}

Outcome cmd_verify(const Problem& p, const Flags& f) {
  const Json report = Json::parse(read_file(f.report));
  const std::string command = report.at("command").get<std::string>();
  Outcome o;
  std::string reason;
  if (report.at("input-digest").get<std::string>() != "sha256:" + sha256_hex(p.file.canonical)) {
    reason = "input digest does not match the problem file";
  } else {
    const auto& table = commands();
    const auto it = std::find_if(table.begin(), table.end(), [&](const auto& c) { return std::get<0>(c) == command; });
    if (it == table.end()) throw ParseError("report has unknown command '" + command + "'", 0);
    if (!std::get<3>(*it)(p, report.at("result"), report.at("certificate"))) reason = "certificate does not replay";
  }
  o.result = Json{{"checked", command}, {"accepted", reason.empty()}};
  o.certificate = nullptr;
  if (!reason.empty()) o.diagnostics.push_back(reason);
  o.text = reason.empty() ? "certificate accepted (" + command + ")\n" : "certificate rejected: " + reason + "\n";
  return o;
}

int exit_for(const Outcome& o, const std::string& command) {
  if (command == "verify" && !o.result.at("accepted").get<bool>()) return kHypothesis;
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified multiplicities, reductions and Lojasiewicz brackets of m-primary ideals"};
  app.require_subcommand(1);
  Flags flags;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-f,--file", flags.file, "problem file")->required();
    sub->add_flag("--json", flags.json, "print a JSON report");
    sub->add_option("--seed", flags.seed, "random seed");
    sub->add_option("--trials", flags.trials, "random draws per search")->check(CLI::PositiveNumber);
    sub->add_option("--rmax", flags.rmax, "largest reduction exponent tried")->check(CLI::PositiveNumber);
    sub->add_option("--kmax", flags.kmax, "last power for the differences route (default n + 6)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--qmax", flags.qmax, "largest q in the nu table")->check(CLI::PositiveNumber);
  };
  std::vector<std::pair<CLI::App*, std::string>> subs;
  for (const auto& [name, help, cmd, check] : commands()) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    if (name == "mult") {
      sub->add_option("--method", flags.method, "diff, generic or both")
          ->check(CLI::IsMember({"diff", "generic", "both"}));
    }
    subs.emplace_back(sub, name);
  }
  CLI::App* verify = app.add_subcommand("verify", "replay the certificate of a JSON report");
  add_common(verify);
  verify->add_option("report", flags.report, "JSON report to check")->required();
  subs.emplace_back(verify, "verify");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParse;
  }

  std::string command;
  for (const auto& [sub, name] : subs) {
    if (sub->parsed()) command = name;
  }
  try {
    const auto start = std::chrono::steady_clock::now();
    const Problem problem = load_problem(flags.file);
    Outcome o;
    if (command == "verify") {
      o = cmd_verify(problem, flags);
    } else {
      for (const auto& [name, help, cmd, check] : commands()) {
        if (name == command) o = cmd(problem, flags);
      }
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    if (flags.json) {
      out << envelope(command, problem, flags, o, ms).dump(2) << "\n";
    } else {
      out << o.text;
    }
    return exit_for(o, command);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const RingMismatch& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const Json::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const HypothesisError& e) {
    err << "hypothesis failed: " << e.what() << "\n";
    return kHypothesis;
  } catch (const TrialsExhausted& e) {
    err << "trials exhausted: " << e.what() << "\n";
    for (const auto& d : e.diagnostics()) err << "  " << d << "\n";
    return kResource;
  } catch (const ResourceCapError& e) {
    err << "resource cap: " << e.what() << "\n";
    return kResource;
  }
}

}  // namespace locmult::cli
