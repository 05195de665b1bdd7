#include "hypertan/serialize.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "hypertan/canonical.hpp"

namespace hypertan {

const PlaneCurve& CurveConfig::curve(const std::string& name) const {
  auto it = curves.find(name);
  if (it == curves.end()) throw InputError("unknown curve name \"" + name + "\"");
  return it->second;
}

std::vector<PlaneCurve> CurveConfig::configuration_curves() const {
  if (configuration.empty()) throw InputError("config has no \"configuration\" block");
  std::vector<PlaneCurve> out;
  for (const auto& n : configuration) out.push_back(curve(n));
  return out;
}

namespace {

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw InputError("coefficient must be an integer or a \"num/den\" string, got " + j.dump());
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

Poly terms_from_json(const json& terms, const FieldPtr& k) {
  if (!terms.is_array() || terms.empty()) throw InputError("curve must be a nonempty array of terms");
  Poly f(3);
  std::set<Exponent> seen;
  int degree = -1;
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 4) throw InputError("term must be [i, j, k, coefficient], got " + t.dump());
    Exponent e{};
    for (int i = 0; i < 3; ++i) {
      if (!t[i].is_number_integer() || t[i].get<int>() < 0) throw InputError("bad exponent in term " + t.dump());
      e[i] = t[i].get<int>();
    }
    const int d = e[0] + e[1] + e[2];
    if (degree >= 0 && d != degree) throw InputError("terms are not homogeneous (degree " + std::to_string(d) +
                                                     " after " + std::to_string(degree) + ")");
    degree = d;
    if (!seen.insert(e).second) throw InputError("repeated monomial in term " + t.dump());
    f += Poly::monomial(field_element_from_json(t[3], k), e, 3);
  }
  return f;
}

}  // namespace

FieldPtr field_from_minpoly(const std::vector<Rational>& coeffs, const std::string& generator, const Budget& budget) {
  QPoly m(coeffs);
  if (m.degree() < 1) throw InputError("field minimal polynomial must have positive degree");
  return make_number_field(generator, m.monic(), budget);
}

FieldPtr parse_field_flag(const std::string& text, const Budget& budget) {
  std::vector<Rational> c;
  for (const auto& s : split(text, ',')) c.push_back(parse_rational(s));
  return field_from_minpoly(c, "a", budget);
}

json field_to_json(const FieldPtr& k) {
  if (!k) return nullptr;
  json m = json::array();
  for (const auto& c : k->minpoly().coeffs()) m.push_back(to_string(c));
  return {{"generator", k->name()}, {"minpoly", m}};
}

FieldPtr field_from_json(const json& j, const Budget& budget) {
  if (j.is_null()) return nullptr;
  if (!j.is_object() || !j.contains("minpoly")) throw InputError("field must be an object with \"minpoly\"");
  std::vector<Rational> c;
  for (const auto& x : j.at("minpoly")) c.push_back(rational_from_json(x));
  return field_from_minpoly(c, j.value("generator", std::string("a")), budget);
}

json to_json(const FieldElement& a) {
  if (a.is_rational()) return to_string(a.rational());
  json out = json::array();
  for (const auto& c : a.coordinates()) out.push_back(to_string(c));
  return out;
}

FieldElement field_element_from_json(const json& j, const FieldPtr& k) {
  if (j.is_array()) {
    if (!k) throw InputError("coordinate-list coefficient " + j.dump() + " needs a field");
    std::vector<Rational> c;
    for (const auto& x : j) c.push_back(rational_from_json(x));
    if (static_cast<int>(c.size()) > k->degree()) throw InputError("too many coordinates in " + j.dump());
    c.resize(k->degree());
    return FieldElement::from_coordinates(k, c);
  }
  return FieldElement(rational_from_json(j));
}

CurveConfig parse_config(const json& doc, FieldPtr field, const Budget& budget) {
  if (!doc.is_object()) throw InputError("config must be a JSON object");
  if (doc.contains("schema") && doc.at("schema") != kConfigSchema)
    throw InputError("unsupported config schema " + doc.at("schema").dump());
  CurveConfig cfg;
  cfg.field = field ? field : doc.contains("field") ? field_from_json(doc.at("field"), budget) : nullptr;
  if (!doc.contains("curves") || !doc.at("curves").is_object()) throw InputError("config needs a \"curves\" object");
  for (const auto& [name, terms] : doc.at("curves").items()) {
    if (cfg.curves.count(name)) throw InputError("duplicate curve name \"" + name + "\"");
    try {
      cfg.curves.emplace(name, PlaneCurve(terms_from_json(terms, cfg.field)));
    } catch (const InputError& e) {
      throw InputError("curve " + name + ": " + e.what());
    }
    cfg.names.push_back(name);
  }
  if (doc.contains("configuration")) {
    const json& c = doc.at("configuration");
    if (!c.contains("components")) throw InputError("configuration needs \"components\"");
    for (const auto& n : c.at("components")) {
      cfg.configuration.push_back(n.get<std::string>());
      cfg.curve(cfg.configuration.back());
    }
  }
  if (doc.contains("plot")) {
    const json& p = doc.at("plot");
    cfg.plot_chart = p.value("chart", std::string("z"));
    if (p.contains("viewport")) {
      auto v = p.at("viewport").get<std::vector<double>>();
      if (v.size() != 4) throw InputError("plot viewport must have four numbers");
      cfg.plot_viewport = std::array<double, 4>{v[0], v[1], v[2], v[3]};
    }
  }
  return cfg;
}

CurveConfig load_config(const std::string& path, FieldPtr field, const Budget& budget) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + path + ": " + e.what());
  }
  return parse_config(doc, std::move(field), budget);
}

// ---------------------------------------------------------------------------

json to_json(const ProjectivePoint& p, int orbit) {
  json coords = json::array();
  for (const auto& c : p.coords()) coords.push_back(to_json(c));
  return {{"coords", coords}, {"field", field_to_json(p.field())}, {"orbit", orbit}, {"display", p.to_string()}};
}

json to_json(const PlaneCurve& c) {
  json terms = json::array();
  for (auto it = c.form().terms().rbegin(); it != c.form().terms().rend(); ++it)
    terms.push_back({it->first[0], it->first[1], it->first[2], to_json(it->second)});
  return {{"degree", c.degree()}, {"field", field_to_json(c.field())}, {"terms", terms}, {"display", c.to_string()}};
}

PlaneCurve curve_from_json(const json& j, const Budget& budget) {
  if (j.is_array()) return PlaneCurve(terms_from_json(j, nullptr));
  FieldPtr k = field_from_json(j.value("field", json()), budget);
  return PlaneCurve(terms_from_json(j.at("terms"), k));
}

ProjectivePoint parse_point(const std::string& text, const FieldPtr& k) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char ch : text) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (ch == ':' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3) throw InputError("point \"" + text + "\" must have the form x:y:z");
  std::array<FieldElement, 3> c;
  for (int i = 0; i < 3; ++i) {
    if (!parts[i].empty() && parts[i].front() == '[') {
      json coords = json::array();
      for (const auto& s : split(parts[i].substr(1, parts[i].size() - 2), ',')) coords.push_back(s);
      c[i] = field_element_from_json(coords, k);
    } else {
      c[i] = FieldElement(parse_rational(parts[i]));
    }
  }
  return ProjectivePoint(c);
}

json to_json(const PointType& t) {
  if (t.infinite()) return {{"m", t.m}, {"n", "inf"}, {"display", t.to_string()}};
  return {{"m", t.m}, {"n", t.n}, {"display", t.to_string()}};
}

json to_json(const TangencyReport& r) {
  json contacts = json::array();
  for (const auto& c : r.contacts) {
    json x = {{"point", to_json(c.point, c.orbit)},
              {"multiplicity", c.multiplicity},
              {"branches_on_subject", c.branches_on_subject}};
    x["subject_type"] = c.subject_type ? to_json(*c.subject_type) : json();
    x["base_type"] = c.base_type ? to_json(*c.base_type) : json();
    contacts.push_back(x);
  }
  return {{"subject", to_json(r.subject)},
          {"contacts", contacts},
          {"total_branches", r.total_branches},
          {"bezout_total", r.bezout_total},
          {"hypertangent", r.hypertangent},
          {"hyper_bitangent", r.hyper_bitangent}};
}

json to_json(const MirrorReport& r) {
  json out = {{"l", r.l},
              {"m", r.m},
              {"predicted_type", to_json(r.predicted_type)},
              {"observed_type", r.observed_type ? to_json(*r.observed_type) : json()},
              {"branches_on_subject", r.branches_on_subject},
              {"delta_bound", to_string(r.delta_bound)},
              {"delta_observed", r.delta_observed ? json(*r.delta_observed) : json()},
              {"violations", r.violations},
              {"pass", r.pass}};
  return out;
}

json to_json(const HypCertificate& c) {
  json out = {{"curve", to_json(c.curve)}, {"orbit", c.orbit}, {"degree", c.degree}};
  if (!c.line_class.empty()) out["class"] = c.line_class;
  if (c.p) out["p"] = to_json(*c.p);
  if (c.q) out["q"] = to_json(*c.q);
  if (c.type_p) out["type_p"] = to_json(*c.type_p);
  if (c.type_q) out["type_q"] = to_json(*c.type_q);
  if (c.p) out["mult_p"] = c.mult_p;
  if (c.q) out["mult_q"] = c.mult_q;
  out["genus"] = c.genus ? json(*c.genus) : json();
  out["rational"] = c.genus ? json(*c.genus == 0) : json();
  out["hyper_bitangent"] = c.report.hyper_bitangent;
  out["total_branches"] = c.report.total_branches;
  json contacts = json::array();
  for (const auto& cp : c.report.contacts)
    contacts.push_back({{"point", to_json(cp.point, cp.orbit)},
                        {"multiplicity", cp.multiplicity},
                        {"branches", cp.branches_on_subject}});
  out["contacts"] = contacts;
  return out;
}

json to_json(const Configuration& b) {
  json comps = json::array();
  for (size_t k = 0; k < b.components.size(); ++k)
    comps.push_back({{"name", b.names[k]}, {"degree", b.degree(static_cast<int>(k))}, {"curve", to_json(b.components[k])}});
  json nodes = json::array();
  for (const auto& n : b.nodes) {
    json x = to_json(n.point, n.orbit);
    x["components"] = {b.names[n.i], b.names[n.j]};
    nodes.push_back(x);
  }
  return {{"components", comps}, {"nodes", nodes}, {"node_count", b.node_count()}};
}

json to_json(const EmptinessCertificate& e) {
  json refuted = json::array();
  for (const auto& r : e.refuted) {
    json x = {{"p", r.p}, {"q", r.q}, {"tangent_component", r.lp}, {"reason", r.reason}};
    if (r.candidate) x["candidate"] = to_json(*r.candidate);
    refuted.push_back(x);
  }
  return {{"reason", to_string(e.reason)}, {"justification", e.justification}, {"refuted", refuted}};
}

json to_json(const Hyp1Result& r) {
  json lines = json::array();
  for (const auto& c : r.lines) lines.push_back(to_json(c));
  json fams = json::array();
  for (const auto& f : r.families) fams.push_back({{"node", to_json(f.node.point, f.node.orbit)}, {"description", f.description}});
  std::map<std::string, int> classes;
  for (const auto& c : r.lines) classes[c.line_class] += c.orbit;
  return {{"count", r.count()},
          {"complete", r.complete()},
          {"classes", classes},
          {"lines", lines},
          {"families", fams},
          {"incomplete", r.incomplete}};
}

json to_json(const SearchResult& r) {
  json certs = json::array();
  for (const auto& c : r.certificates) certs.push_back(to_json(c));
  json out = {{"count", r.count()}, {"bound", r.bound}, {"certificates", certs}};
  out["emptiness"] = r.emptiness ? to_json(*r.emptiness) : json();
  json refuted = json::array();
  for (const auto& x : r.refuted) refuted.push_back({{"p", x.p}, {"q", x.q}, {"tangent_component", x.lp}, {"reason", x.reason}});
  out["refuted"] = refuted;
  out["notes"] = r.notes;
  return out;
}

json to_json(const TrianglePencilResult& r) {
  json fams = json::array();
  for (const auto& f : r.families) {
    json basis = json::array();
    for (const auto& b : f.basis) basis.push_back(b.to_string());
    json samples = json::array();
    for (const auto& s : f.samples)
      samples.push_back({{"curve", to_json(s.curve)},
                         {"hyper_bitangent", s.report.hyper_bitangent},
                         {"total_branches", s.report.total_branches}});
    fams.push_back({{"vertex", {f.h, f.i, f.j}},
                    {"basis", basis},
                    {"projective_dimension", f.projective_dimension},
                    {"samples", samples}});
  }
  return {{"degree", r.d}, {"families", fams}};
}

json to_json(const QbReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    json sing = json::array();
    for (const auto& s : e.r_singular) sing.push_back(to_json(s.point, s.orbit));
    entries.push_back({{"t", to_string(e.t)},
                       {"C_t", {{"curve", to_json(e.c_t)},
                                {"integral", e.c_integral},
                                {"smooth", e.c_smooth},
                                {"genus", e.c_genus},
                                {"hypertangent_at_q0", e.c_hypertangent_q0}}},
                       {"R_t", {{"curve", to_json(e.r_t)},
                                {"integral", e.r_integral},
                                {"genus", e.r_genus},
                                {"singular_points", sing},
                                {"type_at_qinf", e.r_type_qinf ? to_json(*e.r_type_qinf) : json()},
                                {"I_q0", e.r_i_q0},
                                {"I_qinf", e.r_i_qinf},
                                {"hyper_bitangent", e.r_hyper_bitangent}}},
                       {"problems", e.problems},
                       {"pass", e.pass}});
  }
  return {{"b", r.b}, {"d", r.d}, {"Q_b", to_json(r.q_b)}, {"entries", entries}, {"pass", r.pass}};
}

}  // namespace hypertan
