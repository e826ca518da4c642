#include "toricmf/report.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "toricmf/error.hpp"

namespace toricmf {

using nlohmann::json;

namespace {

// ---- input ---------------------------------------------------------------

Int read_int(const json& v, const std::string& where) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Int(v.get<std::uint64_t>()) : Int(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    try {
      return parse_int(v.get<std::string>());
    } catch (const InvalidInput&) {
      throw InvalidInput(where + ": '" + v.get<std::string>() + "' is not an integer");
    }
  }
  throw InvalidInput(where + ": expected an integer, got " + std::string(v.type_name()) + " " + v.dump());
}

std::vector<Int> read_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw InvalidInput(where + ": expected a list of integers");
  std::vector<Int> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(read_int(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) throw InvalidInput(where + ": unknown key '" + key + "'");
  }
}

const json& required(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw InvalidInput(where + ": missing key '" + key + "'");
  return obj.at(key);
}

std::string line_context(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

// ---- output helpers ------------------------------------------------------

json str(const Int& v) { return v.str(); }
json str(int v) { return std::to_string(v); }
json str(std::size_t v) { return std::to_string(v); }

json list(const std::vector<Int>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

json pair_json(const IntPair& v) { return json::array({v.s.str(), v.p.str()}); }

IntPair pair_from(const json& v, const std::string& where) {
  const auto l = read_list(v, where);
  if (l.size() != 2) throw InvalidInput(where + ": expected a pair");
  return {l[0], l[1]};
}

int small_int(const json& v, const std::string& where) { return static_cast<int>(read_int(v, where)); }

json monomial_json(const Monomial& m) { return {{"z", str(m.e_z)}, {"y", str(m.e_y)}, {"x", list(m.e_x)}}; }

Monomial monomial_from(const json& v, const std::string& where) {
  return {read_int(required(v, "z", where), where + ".z"), read_int(required(v, "y", where), where + ".y"),
          read_list(required(v, "x", where), where + ".x")};
}

json element_json(const SemigroupElement& e) {
  json out{{"coords", list(e.coords)}};
  if (e.tors) out["tors"] = list(*e.tors);
  return out;
}

SemigroupElement element_from(const json& v, const std::string& where) {
  SemigroupElement e{read_list(required(v, "coords", where), where + ".coords"), std::nullopt};
  if (v.contains("tors")) e.tors = read_list(v.at("tors"), where + ".tors");
  return e;
}

BinomialForm form_from(const std::string& s) {
  for (auto f : {BinomialForm::ZPure, BinomialForm::YPure, BinomialForm::ZYMixed, BinomialForm::Split}) {
    if (to_string(f) == s) return f;
  }
  throw InvalidInput("unknown binomial form '" + s + "'");
}

std::string tuple_text(const std::vector<Int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

std::string element_text(const SemigroupElement& e) {
  std::string s = tuple_text(e.coords);
  if (e.tors) s += " + " + tuple_text(*e.tors) + " in H";
  return s;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

json spec_json(const ProblemSpec& spec) {
  json out{{"n", str(spec.n())}, {"a", list(spec.a)}, {"b", list(spec.b)}, {"c", list(spec.c)}};
  if (spec.torsion) {
    json hx = json::array();
    for (const auto& h : spec.torsion->h_x) hx.push_back(list(h));
    out["torsion"] = {{"moduli", list(spec.torsion->group.moduli)},
                      {"h_x", hx},
                      {"h_z", list(spec.torsion->h_z)},
                      {"h_y", list(spec.torsion->h_y)}};
  }
  return out;
}

ProblemSpec spec_from_json(const json& doc) {
  const std::string where = "input";
  if (!doc.is_object()) throw InvalidInput("input: expected an object with keys a, b, c");
  check_keys(doc, {"n", "a", "b", "c", "torsion"}, where);
  ProblemSpec spec;
  spec.a = read_list(required(doc, "a", where), "a");
  spec.b = read_list(required(doc, "b", where), "b");
  spec.c = read_list(required(doc, "c", where), "c");
  if (spec.b.size() != spec.a.size() || spec.c.size() != spec.a.size()) {
    throw InvalidInput("input: a, b, c must have the same length (got " + std::to_string(spec.a.size()) + ", " +
                       std::to_string(spec.b.size()) + ", " + std::to_string(spec.c.size()) + ")");
  }
  if (doc.contains("n") && read_int(doc.at("n"), "n") != Int(spec.a.size())) {
    throw InvalidInput("input: n does not match the length of a");
  }
  if (doc.contains("torsion")) {
    const auto& t = doc.at("torsion");
    if (!t.is_object()) throw InvalidInput("torsion: expected an object");
    check_keys(t, {"moduli", "h_x", "h_z", "h_y"}, "torsion");
    TorsionData td;
    td.group.moduli = read_list(required(t, "moduli", "torsion"), "torsion.moduli");
    const auto& hx = required(t, "h_x", "torsion");
    if (!hx.is_array()) throw InvalidInput("torsion.h_x: expected a list of group elements");
    for (std::size_t i = 0; i < hx.size(); ++i) {
      td.h_x.push_back(read_list(hx[i], "torsion.h_x[" + std::to_string(i) + "]"));
    }
    td.h_z = read_list(required(t, "h_z", "torsion"), "torsion.h_z");
    td.h_y = read_list(required(t, "h_y", "torsion"), "torsion.h_y");
    const std::size_t k = td.group.arity();
    const auto arity_ok = [&](const GroupElement& g) { return g.size() == k; };
    if (!arity_ok(td.h_z) || !arity_ok(td.h_y) || !std::all_of(td.h_x.begin(), td.h_x.end(), arity_ok)) {
      throw InvalidInput("torsion: every group element needs " + std::to_string(k) + " entries (one per modulus)");
    }
    spec.torsion = std::move(td);
  }
  validate(spec);
  return spec;
}

}  // namespace

ProblemSpec parse_input(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InvalidInput("parse error at " + line_context(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
  return spec_from_json(doc);
}

ProblemSpec parse_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_input(buf.str());
}

AnalysisReport run_analyze(const ProblemSpec& spec, const AnalyzeOptions& options) {
  validate(spec);
  AnalysisReport rep;
  rep.spec = spec;
  rep.basis = lattice_ltilde(spec);
  rep.fan = build_fan(spec, rep.basis);
  rep.fan_check = fan_invariants(rep.fan, spec);
  rep.generators = emit_generators(rep.fan, spec);
  rep.macaulay = s_prime(rep.fan, spec, rep.generators.tau);
  if (options.verify) rep.verification = verify(rep.generators, rep.fan, spec, options.verify_options);
  return rep;
}

json to_json(const AnalysisReport& r) {
  json doc;
  doc["format"] = "toricmf-report";
  doc["version"] = "1";
  doc["role_convention"] = kRoleConvention;
  doc["spec"] = spec_json(r.spec);
  doc["basis"] = {{"e_minus1", pair_json(r.basis.e_minus1)}, {"e_0", pair_json(r.basis.e_0)}};

  const auto& f = r.fan;
  json eps = json::array();
  for (const auto& e : f.eps) eps.push_back(pair_json(e));
  json rows = json::array();
  for (const auto& row : f.r) rows.push_back(list(row));
  doc["fan"] = {{"m", str(f.m)},   {"q", list(f.q)},         {"s", list(f.s_seq)},
                {"p", list(f.p_seq)}, {"eps", eps},          {"r", rows},
                {"nu", str(f.nu)}, {"mu_neg", str(f.mu_neg)}, {"mu", str(f.mu())},
                {"invariants_ok", r.fan_check.ok}, {"invariant_failure", r.fan_check.first_failure}};

  const auto& g = r.generators;
  doc["is_cm"] = g.is_cm;
  doc["tau"] = str(g.tau);
  doc["closed_form_tau"] = str(g.closed_form_tau);
  json gens = json::array();
  for (std::size_t k = 0; k < g.generators.size(); ++k) {
    const auto& b = g.generators[k];
    gens.push_back({{"text", render(b)},
                    {"form", to_string(b.form)},
                    {"lattice_vector", pair_json(g.lattice_vectors.at(k))},
                    {"lhs", monomial_json(b.lhs)},
                    {"rhs", monomial_json(b.rhs)}});
  }
  doc["generators"] = gens;

  const auto& m = r.macaulay;
  json mixed = json::array();
  for (int i : m.mixed_indices) mixed.push_back(str(i));
  json news = json::array();
  for (const auto& e : m.new_gens) news.push_back(element_json(e));
  json sp = json::array();
  for (const auto& e : m.s_prime_gens) sp.push_back(element_json(e));
  doc["macaulayfication"] = {
      {"mixed_indices", mixed}, {"new_gens", news}, {"s_prime_gens", sp}, {"trivial", m.is_macaulayfication_trivial}};
  doc["four_generator_note"] = m.four_generator_note;

  if (r.verification) {
    const auto& v = *r.verification;
    json gb = json::object();
    for (const auto& c : v.gb_certified) gb[to_string(c.order)] = c.gb_certified;
    json red = json::array();
    for (const auto& e : v.redundancy) red.push_back({{"generator", e.generator}, {"redundant", e.redundant}});
    doc["verification"] = {{"all_generators_in_lattice", v.all_generators_in_lattice},
                           {"fan_invariants_ok", v.fan_invariants_ok},
                           {"fan_failure", v.fan_failure},
                           {"gb_certified", gb},
                           {"ideal_equality_bound", str(v.ideal_equality_bound)},
                           {"ideal_equality_ok", v.ideal_equality_ok},
                           {"no_forbidden_forms", v.no_forbidden_forms},
                           {"redundancy", red},
                           {"passed", v.passed()}};
  }
  return doc;
}

std::string render_structured(const AnalysisReport& report) { return to_json(report).dump(2) + "\n"; }

AnalysisReport report_from_json(const json& doc) {
  try {
    AnalysisReport r;
    r.spec = spec_from_json(doc.at("spec"));
    r.basis = {pair_from(doc.at("basis").at("e_minus1"), "basis.e_minus1"),
               pair_from(doc.at("basis").at("e_0"), "basis.e_0")};
    const auto& f = doc.at("fan");
    r.fan.m = small_int(f.at("m"), "fan.m");
    r.fan.q = read_list(f.at("q"), "fan.q");
    r.fan.s_seq = read_list(f.at("s"), "fan.s");
    r.fan.p_seq = read_list(f.at("p"), "fan.p");
    for (const auto& e : f.at("eps")) r.fan.eps.push_back(pair_from(e, "fan.eps"));
    for (const auto& row : f.at("r")) r.fan.r.push_back(read_list(row, "fan.r"));
    r.fan.nu = small_int(f.at("nu"), "fan.nu");
    r.fan.mu_neg = small_int(f.at("mu_neg"), "fan.mu_neg");
    r.fan_check.ok = f.at("invariants_ok").get<bool>();
    r.fan_check.first_failure = f.at("invariant_failure").get<std::string>();

    r.generators.is_cm = doc.at("is_cm").get<bool>();
    r.generators.tau = static_cast<std::size_t>(read_int(doc.at("tau"), "tau"));
    r.generators.closed_form_tau = read_int(doc.at("closed_form_tau"), "closed_form_tau");
    r.generators.nu = r.fan.nu;
    r.generators.mu_neg = r.fan.mu_neg;
    for (const auto& g : doc.at("generators")) {
      r.generators.generators.push_back(
          {monomial_from(g.at("lhs"), "lhs"), monomial_from(g.at("rhs"), "rhs"), form_from(g.at("form"))});
      r.generators.lattice_vectors.push_back(pair_from(g.at("lattice_vector"), "lattice_vector"));
    }

    const auto& m = doc.at("macaulayfication");
    for (const auto& i : m.at("mixed_indices")) r.macaulay.mixed_indices.push_back(small_int(i, "mixed_indices"));
    for (const auto& e : m.at("new_gens")) r.macaulay.new_gens.push_back(element_from(e, "new_gens"));
    for (const auto& e : m.at("s_prime_gens")) r.macaulay.s_prime_gens.push_back(element_from(e, "s_prime_gens"));
    r.macaulay.is_macaulayfication_trivial = m.at("trivial").get<bool>();
    r.macaulay.four_generator_note = doc.at("four_generator_note").get<bool>();

    if (doc.contains("verification")) {
      const auto& v = doc.at("verification");
      VerificationReport vr;
      vr.all_generators_in_lattice = v.at("all_generators_in_lattice").get<bool>();
      vr.fan_invariants_ok = v.at("fan_invariants_ok").get<bool>();
      vr.fan_failure = v.at("fan_failure").get<std::string>();
      for (const auto& [name, ok] : v.at("gb_certified").items()) {
        vr.gb_certified.push_back({parse_tie_break(name), ok.get<bool>()});
      }
      vr.ideal_equality_bound = read_int(v.at("ideal_equality_bound"), "ideal_equality_bound");
      vr.ideal_equality_ok = v.at("ideal_equality_ok").get<bool>();
      vr.no_forbidden_forms = v.at("no_forbidden_forms").get<bool>();
      for (const auto& e : v.at("redundancy")) {
        vr.redundancy.push_back({e.at("generator").get<std::string>(), e.at("redundant").get<bool>()});
      }
      r.verification = std::move(vr);
    }
    return r;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed report: ") + e.what());
  }
}

std::string render_text(const AnalysisReport& r, Section section) {
  std::ostringstream os;
  const auto& spec = r.spec;
  os << "simplicial codimension-two semigroup, n = " << spec.n() << "\n";
  os << "  a = " << tuple_text(spec.a) << "\n";
  os << "  b = " << tuple_text(spec.b) << "   (z)\n";
  os << "  c = " << tuple_text(spec.c) << "   (y)\n";
  if (spec.torsion) {
    const auto& t = *spec.torsion;
    os << "  H = prod Z/" << tuple_text(t.group.moduli) << ", h_z = " << tuple_text(t.h_z)
       << ", h_y = " << tuple_text(t.h_y) << ", h_x =";
    for (const auto& h : t.h_x) os << ' ' << tuple_text(h);
    os << "\n";
  }
  os << "  roles: " << kRoleConvention << "\n\n";

  const bool all = section == Section::All;
  if (all) {
    os << "lattice L~: e_-1 = " << r.basis.e_minus1 << ", e_0 = " << r.basis.e_0 << "  (index " << r.basis.index()
       << ")\n\n";
    const auto& f = r.fan;
    os << "fan: m = " << f.m << ", q = " << tuple_text(f.q) << "\n";
    for (int i = f.first(); i <= f.last(); ++i) {
      os << "  eps_" << i << " = " << f.epsilon(i) << "   r = " << tuple_text(f.r_column(i)) << "\n";
    }
    os << "  nu = " << f.nu << ", mu_neg = " << f.mu_neg << " (mu = " << f.mu() << ")\n";
    os << "  invariants: " << (r.fan_check.ok ? "ok" : "FAILED: " + r.fan_check.first_failure) << "\n\n";
  }
  if (all || section == Section::Generators) {
    const auto& g = r.generators;
    os << "Cohen-Macaulay: " << yes_no(g.is_cm) << "\n";
    os << "generators (tau = " << g.tau << ", closed form " << g.closed_form_tau << "):\n";
    for (std::size_t k = 0; k < g.generators.size(); ++k) {
      os << "  " << render(g.generators[k]) << "\n";
    }
    os << "\n";
  }
  if (all || section == Section::Macaulayfy) {
    const auto& m = r.macaulay;
    os << "Macaulayfication: " << (m.is_macaulayfication_trivial ? "trivial (S' = S)" : "S' strictly contains S")
       << "\n";
    os << "  mixed indices:";
    for (int i : m.mixed_indices) os << ' ' << i;
    os << "\n  new generators:";
    for (const auto& e : m.new_gens) os << ' ' << element_text(e);
    os << "\n  S' generators:";
    for (const auto& e : m.s_prime_gens) os << ' ' << element_text(e);
    os << "\n";
    if (m.four_generator_note) {
      os << "  note: four defining binomials; the canonical module is a complete intersection and the S2-fication "
            "is a Macaulayfication\n";
    }
    os << "\n";
  }
  if (r.verification && (all || section == Section::Verify)) {
    const auto& v = *r.verification;
    os << "verification (bound " << v.ideal_equality_bound << "): " << (v.passed() ? "passed" : "FAILED") << "\n";
    os << "  generators in lattice: " << yes_no(v.all_generators_in_lattice) << "\n";
    os << "  fan invariants: " << (v.fan_invariants_ok ? "ok" : v.fan_failure) << "\n";
    os << "  ideal equality up to bound: " << yes_no(v.ideal_equality_ok) << "\n";
    os << "  binomial forms: " << (v.no_forbidden_forms ? "ok" : "violation found") << "\n";
    for (const auto& c : v.gb_certified) {
      os << "  Groebner basis under " << to_string(c.order) << ": " << yes_no(c.gb_certified) << "\n";
    }
    for (const auto& e : v.redundancy) {
      os << "  redundant " << e.generator << ": " << yes_no(e.redundant) << "\n";
    }
  }
  return os.str();
}

}  // namespace toricmf
