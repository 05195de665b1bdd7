#include "hypertan/commands.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hypertan/canonical.hpp"
#include "hypertan/plot.hpp"

namespace hypertan {

namespace fs = std::filesystem;

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "analyze-point", "intersect",   "delta",           "genus",       "flexes",         "mirror-check",
      "validate-3c",   "hyp-lines",   "hyp-search",      "multi-check", "triangle-pencil", "qb-families",
      "verify-fixtures", "plot"};
  return names;
}

namespace {

struct Context {
  const json& args;
  Budget budget;
  FieldPtr field;
  std::optional<CurveConfig> config;

  explicit Context(const json& a) : args(a) {
    if (has("budget_degree")) {
      budget.field_degree = integer("budget_degree", 8);
      if (budget.field_degree < 1) throw InputError("--budget-degree must be positive");
    }
    if (has("field")) field = parse_field_flag(args.at("field").get<std::string>(), budget);
    if (has("config")) config = load_config(args.at("config").get<std::string>(), field, budget);
    if (config && !field) field = config->field;
  }

  bool has(const char* key) const { return args.contains(key) && !args.at(key).is_null(); }

  int integer(const char* key, int fallback) const {
    if (!has(key)) return fallback;
    const json& v = args.at(key);
    if (v.is_number_integer()) return v.get<int>();
    if (v.is_string()) {
      try {
        size_t pos = 0;
        int r = std::stoi(v.get<std::string>(), &pos);
        if (pos == v.get<std::string>().size()) return r;
      } catch (const std::exception&) {
      }
    }
    throw InputError(std::string("--") + key + " must be an integer");
  }

  std::string text(const char* key) const {
    if (!has(key)) throw InputError(std::string("missing --") + key);
    return args.at(key).get<std::string>();
  }

  const CurveConfig& cfg() const {
    if (!config) throw InputError("this command needs --config");
    return *config;
  }

  PlaneCurve curve(const char* key) const { return cfg().curve(text(key)); }
  ProjectivePoint point() const { return parse_point(text("point"), field); }
};

json tree_to_json(const TreeNode& n) {
  json children = json::array();
  for (const auto& c : n.children) children.push_back(tree_to_json(c));
  return {{"multiplicity", n.multiplicity}, {"weight", n.weight}, {"children", children}};
}

CommandOutput analyze_point(const Context& ctx) {
  const PlaneCurve c = ctx.curve("curve");
  const ProjectivePoint p = ctx.point();
  if (!contains(c, p)) throw InputError("point " + p.to_string() + " is not on the curve");
  json r = {{"curve", to_json(c)}, {"point", to_json(p)}};
  r["multiplicity"] = multiplicity_at(c, p);
  const InfinitelyNearTree tree = infinitely_near_tree(c, p, ctx.budget);
  r["branches"] = tree.branches();
  r["unibranched"] = tree.branches() == 1;
  r["delta"] = tree.delta();
  r["tree"] = tree_to_json(tree.root);
  std::string summary = "multiplicity " + std::to_string(r["multiplicity"].get<int>()) + ", " +
                        std::to_string(tree.branches()) + " branch(es), delta " + std::to_string(tree.delta());
  if (tree.branches() == 1) {
    const PointType t = point_type(c, p, ctx.budget);
    r["type"] = to_json(t);
    r["tangent_line"] = to_json(tangent_line(c, p, ctx.budget));
    summary += ", type " + t.to_string();
    if (!t.infinite() && t.m > 1) {
      const BlowupPrediction b = classify_blowup(t);
      r["blowup"] = {{"case", to_string(b.kase)},
                     {"child_m", b.child_m},
                     {"child_n", b.child_n == 0 ? json() : json(b.child_n)},
                     {"tangent_to_exceptional", b.tangent_to_exceptional},
                     {"tangent_to_strict_line", b.tangent_to_strict_line}};
    }
  }
  return {{{"result", r}, {"summary", summary}}, kOk, ""};
}

CommandOutput intersect(const Context& ctx) {
  const PlaneCurve c = ctx.curve("curve"), b = ctx.curve("other");
  json pts = json::array();
  int total = 0;
  for (const auto& ip : intersection_points(c, b, ctx.budget)) {
    pts.push_back({{"point", to_json(ip.point, ip.orbit)}, {"multiplicity", ip.multiplicity}});
    total += ip.orbit * ip.multiplicity;
  }
  json r = {{"points", pts}, {"total", total}, {"bezout", c.degree() * b.degree()}};
  return {{{"result", r},
           {"summary", std::to_string(pts.size()) + " orbit(s), total multiplicity " + std::to_string(total)}},
          kOk,
          ""};
}

CommandOutput delta(const Context& ctx) {
  const PlaneCurve c = ctx.curve("curve");
  const ProjectivePoint p = ctx.point();
  const int d = delta_invariant(c, p, ctx.budget);
  return {{{"result", {{"point", to_json(p)}, {"delta", d}}}, {"summary", "delta = " + std::to_string(d)}}, kOk, ""};
}

CommandOutput genus(const Context& ctx) {
  const PlaneCurve c = ctx.curve("curve");
  json sing = json::array();
  for (const auto& s : singular_points(c, ctx.budget)) {
    json x = to_json(s.point, s.orbit);
    x["multiplicity"] = s.multiplicity;
    x["delta"] = s.delta;
    x["branches"] = s.branches;
    sing.push_back(x);
  }
  const int d = c.degree();
  const int g = geometric_genus(c, ctx.budget);
  json r = {{"degree", d}, {"arithmetic_genus", (d - 1) * (d - 2) / 2}, {"singular_points", sing}, {"genus", g}};
  return {{{"result", r}, {"summary", "geometric genus " + std::to_string(g)}}, kOk, ""};
}

CommandOutput flexes_cmd(const Context& ctx) {
  const PlaneCurve c = ctx.curve("curve");
  json out = json::array();
  int total = 0;
  for (const auto& f : flexes(c, ctx.budget)) {
    out.push_back({{"point", to_json(f.point, f.orbit)}, {"contact", f.contact}});
    total += f.orbit;
  }
  json r = {{"hessian", hessian(c).to_string()}, {"flexes", out}, {"count", total}};
  return {{{"result", r}, {"summary", std::to_string(total) + " flex(es) over the algebraic closure"}}, kOk, ""};
}

CommandOutput mirror(const Context& ctx) {
  const PlaneCurve c = ctx.curve("curve"), b = ctx.curve("other");
  const MirrorReport m = mirror_check(c, b, ctx.point(), ctx.budget);
  std::string summary = m.pass ? "pass" : "fail";
  summary += ": predicted " + m.predicted_type.to_string();
  if (m.observed_type) summary += ", observed " + m.observed_type->to_string();
  return {{{"result", to_json(m)}, {"summary", summary}}, m.pass ? kOk : kNegative, ""};
}

CommandOutput validate(const Context& ctx) {
  const auto comps = ctx.cfg().configuration_curves();
  if (comps.size() != 3) throw InputError("validate-3c needs exactly three components");
  try {
    const Configuration b = validate_configuration(comps, ctx.cfg().configuration, ctx.budget);
    json r = to_json(b);
    r["valid"] = true;
    return {{{"result", r}, {"summary", "valid 3C-curve with " + std::to_string(b.node_count()) + " nodes"}}, kOk, ""};
  } catch (const InvalidConfiguration& e) {
    return {{{"result", {{"valid", false}, {"reason", e.what()}}}, {"summary", std::string("invalid: ") + e.what()}},
            kNegative,
            ""};
  }
}

Configuration configuration(const Context& ctx) {
  return validate_configuration(ctx.cfg().configuration_curves(), ctx.cfg().configuration, ctx.budget);
}

CommandOutput hyp_lines(const Context& ctx) {
  const Hyp1Result r = hyp1_lines(configuration(ctx), ctx.budget);
  std::string summary = std::to_string(r.count()) + " hyper-bitangent line(s)";
  if (!r.families.empty()) summary += ", " + std::to_string(r.families.size()) + " pencil famil(ies)";
  if (!r.complete()) summary += " (incomplete)";
  const int code = !r.complete() ? kBudgetExceeded : (r.count() > 0 || !r.families.empty()) ? kOk : kNegative;
  return {{{"result", to_json(r)}, {"summary", summary}}, code, ""};
}

SearchResult search(const Context& ctx) {
  const Configuration b = configuration(ctx);
  if (b.components.size() != 3) throw InputError("hyp-search needs a 3C-curve (three components)");
  SearchOptions opt;
  opt.seed = static_cast<std::uint64_t>(ctx.integer("seed", 0));
  return hyp_ge2_search(b, opt, ctx.budget);
}

CommandOutput hyp_search(const Context& ctx) {
  const SearchResult r = search(ctx);
  std::string summary = r.emptiness ? "empty: " + to_string(r.emptiness->reason)
                                    : std::to_string(r.count()) + " curve(s), bound " + std::to_string(r.bound);
  return {{{"result", to_json(r)}, {"summary", summary}}, r.certificates.empty() ? kNegative : kOk, ""};
}

CommandOutput multi_check(const Context& ctx) {
  const MultiResult m = multi_component_check(configuration(ctx), ctx.integer("degree", 1), ctx.budget);
  json r;
  if (m.emptiness) {
    r = {{"emptiness", to_json(*m.emptiness)}};
    return {{{"result", r}, {"summary", "empty: " + to_string(m.emptiness->reason)}}, kNegative, ""};
  }
  r = {{"emptiness", nullptr}, {"lines", to_json(m.lines)}};
  return {{{"result", r}, {"summary", std::to_string(m.lines.count()) + " hyper-bitangent line(s)"}},
          m.lines.count() > 0 ? kOk : kNegative,
          ""};
}

CommandOutput triangle(const Context& ctx) {
  const int d = ctx.integer("degree", 1);
  const TrianglePencilResult r = triangle_pencil(configuration(ctx), d, ctx.integer("samples", 3), ctx.budget);
  bool ok = true;
  for (const auto& f : r.families) {
    ok = ok && f.projective_dimension >= 1;
    for (const auto& s : f.samples) ok = ok && s.report.hyper_bitangent;
  }
  return {{{"result", to_json(r)},
           {"summary", std::to_string(r.families.size()) + " families of degree " + std::to_string(d) +
                           (ok ? ", all verified" : ", verification failed")}},
          ok ? kOk : kNegative,
          ""};
}

CommandOutput qb(const Context& ctx) {
  std::vector<Rational> ts;
  const json& t = ctx.args.contains("t") ? ctx.args.at("t") : json("2");
  std::vector<std::string> items;
  if (t.is_array())
    for (const auto& x : t) items.push_back(x.is_string() ? x.get<std::string>() : x.dump());
  else {
    std::stringstream ss(t.is_string() ? t.get<std::string>() : t.dump());
    std::string s;
    while (std::getline(ss, s, ',')) items.push_back(s);
  }
  for (const auto& s : items) ts.push_back(parse_rational(s));
  const int b = ctx.integer("b", 4);
  const QbReport r = verify_qb_families(b, ctx.integer("d", b), ts, ctx.budget);
  return {{{"result", to_json(r)}, {"summary", r.pass ? "all members verified" : "verification failed"}},
          r.pass ? kOk : kNegative,
          ""};
}

std::array<double, 4> parse_viewport(const json& v) {
  std::vector<double> out;
  if (v.is_array()) {
    for (const auto& x : v) out.push_back(x.get<double>());
  } else {
    std::stringstream ss(v.get<std::string>());
    std::string s;
    while (std::getline(ss, s, ',')) {
      try {
        out.push_back(std::stod(s));
      } catch (const std::exception&) {
        throw InputError("bad viewport entry \"" + s + "\"");
      }
    }
  }
  if (out.size() != 4) throw InputError("viewport must be xmin,xmax,ymin,ymax");
  return {out[0], out[1], out[2], out[3]};
}

CommandOutput plot(const Context& ctx) {
  const CurveConfig& cfg = ctx.cfg();
  PlotOptions opt;
  opt.chart = ctx.has("chart") ? ctx.text("chart") : cfg.plot_chart;
  if (cfg.plot_viewport) opt.viewport = *cfg.plot_viewport;
  if (ctx.has("viewport")) opt.viewport = parse_viewport(ctx.args.at("viewport"));
  opt.resolution = ctx.integer("resolution", 400);
  std::vector<PlotCurve> curves;
  std::vector<std::string> warnings;
  const std::vector<std::string>& names = cfg.configuration.empty() ? cfg.names : cfg.configuration;
  for (const auto& n : names) curves.push_back({n, cfg.curve(n), "base"});
  const bool want_search = !ctx.has("search") || ctx.args.at("search").get<bool>();
  int found = 0;
  if (want_search && cfg.configuration.size() == 3) {
    try {
      const SearchResult r = search(ctx);
      for (const auto& c : r.certificates) curves.push_back({"C" + std::to_string(found++), c.curve, "found"});
    } catch (const PreconditionError& e) {
      warnings.push_back(std::string("no overlay: ") + e.what());
    }
  }
  PlotResult p = render_svg(curves, opt);
  for (auto& w : p.warnings) warnings.push_back(w);
  json r = {{"chart", opt.chart},
            {"viewport", opt.viewport},
            {"resolution", opt.resolution},
            {"curves", static_cast<int>(curves.size())},
            {"found", found},
            {"paths", p.paths},
            {"warnings", warnings}};
  return {{{"result", r}, {"summary", std::to_string(p.paths) + " path(s)"}}, kOk, p.svg};
}

json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

// Certificates in a result, re-read from JSON and checked against B.
int reverify_result(const json& result, const PlaneCurve& base, const Budget& budget, std::vector<std::string>& bad) {
  int checked = 0;
  auto check = [&](const json& certs) {
    for (const auto& c : certs) {
      const PlaneCurve curve = curve_from_json(c.at("curve"), budget);
      ++checked;
      if (!reverify(base, curve, budget)) bad.push_back(curve.to_string());
    }
  };
  if (result.contains("certificates")) check(result.at("certificates"));
  if (result.contains("lines") && result.at("lines").is_array()) check(result.at("lines"));
  return checked;
}

CommandOutput verify_fixtures(const Context& ctx) {
  const fs::path manifest_path = ctx.has("manifest") ? fs::path(ctx.text("manifest")) : fs::path("fixtures/manifest.json");
  const fs::path dir = manifest_path.parent_path();
  const json manifest = read_json(manifest_path);
  const bool update = ctx.has("update") && ctx.args.at("update").get<bool>();
  json entries = json::array();
  bool all = true;
  for (const auto& f : manifest.at("fixtures")) {
    json args = f.value("args", json::object());
    if (args.contains("config")) args["config"] = (dir / args["config"].get<std::string>()).string();
    if (args.contains("manifest")) throw InputError("fixtures cannot nest verify-fixtures");
    const std::string command = f.at("command").get<std::string>();
    const CommandOutput out = run_command_safe(command, args);
    const fs::path expected_path = dir / f.at("expected").get<std::string>();
    const int expected_exit = f.value("exit", 0);
    json entry = {{"name", f.at("name")}, {"command", command}, {"exit", out.exit_code}};
    std::vector<std::string> problems;
    if (out.exit_code != expected_exit)
      problems.push_back("exit " + std::to_string(out.exit_code) + ", expected " + std::to_string(expected_exit));
    const json got = out.report.contains("result") ? out.report.at("result") : out.report.value("error", json());
    if (update) {
      fs::create_directories(expected_path.parent_path());
      std::ofstream(expected_path) << json({{"schema", kReportSchema}, {"command", command}, {"result", got}}).dump(2)
                                   << "\n";
    } else {
      const json expected = read_json(expected_path);
      if (expected.at("result") != got) problems.push_back("result differs from " + expected_path.filename().string());
      // Round trip through text must be lossless.
      if (json::parse(out.report.dump()) != out.report) problems.push_back("report does not round-trip");
      if (args.contains("config")) {
        const CurveConfig cfg = load_config(args.at("config").get<std::string>(), ctx.field, ctx.budget);
        if (!cfg.configuration.empty()) {
          std::vector<std::string> bad;
          const int n = reverify_result(expected.at("result"), curve_product(cfg.configuration_curves()), ctx.budget, bad);
          entry["reverified"] = n;
          for (const auto& b : bad) problems.push_back("certificate fails re-verification: " + b);
        }
      }
    }
    entry["problems"] = problems;
    entry["pass"] = problems.empty();
    all = all && problems.empty();
    entries.push_back(entry);
  }
  const std::string summary = std::to_string(entries.size()) + " fixture(s), " + (all ? "all match" : "mismatches");
  return {{{"result", {{"fixtures", entries}, {"pass", all}}}, {"summary", update ? "snapshots written" : summary}},
          all ? kOk : kNegative,
          ""};
}

}  // namespace

CommandOutput run_command(const std::string& command, const json& args) {
  const Context ctx(args);
  CommandOutput out;
  if (command == "analyze-point") out = analyze_point(ctx);
  else if (command == "intersect") out = intersect(ctx);
  else if (command == "delta") out = delta(ctx);
  else if (command == "genus") out = genus(ctx);
  else if (command == "flexes") out = flexes_cmd(ctx);
  else if (command == "mirror-check") out = mirror(ctx);
  else if (command == "validate-3c") out = validate(ctx);
  else if (command == "hyp-lines") out = hyp_lines(ctx);
  else if (command == "hyp-search") out = hyp_search(ctx);
  else if (command == "multi-check") out = multi_check(ctx);
  else if (command == "triangle-pencil") out = triangle(ctx);
  else if (command == "qb-families") out = qb(ctx);
  else if (command == "verify-fixtures") out = verify_fixtures(ctx);
  else if (command == "plot") out = plot(ctx);
  else throw InputError("unknown command \"" + command + "\"");
  json report = {{"schema", kReportSchema}, {"command", command}, {"args", args}};
  report["result"] = out.report.at("result");
  report["summary"] = out.report.at("summary");
  out.report = std::move(report);
  return out;
}

CommandOutput run_command_safe(const std::string& command, const json& args) {
  auto fail = [&](const char* kind, const std::string& msg, int code) {
    CommandOutput out;
    out.report = {{"schema", kReportSchema},
                  {"command", command},
                  {"args", args},
                  {"error", {{"kind", kind}, {"message", msg}}},
                  {"summary", std::string(kind) + ": " + msg}};
    out.exit_code = code;
    return out;
  };
  try {
    return run_command(command, args);
  } catch (const InputError& e) {
    return fail("input_error", e.what(), kInputError);
  } catch (const json::exception& e) {
    return fail("input_error", e.what(), kInputError);
  } catch (const BudgetExceeded& e) {
    return fail("budget_exceeded", e.what(), kBudgetExceeded);
  } catch (const InternalError& e) {
    return fail("internal_error", e.what(), kInternalError);
  } catch (const std::exception& e) {
    return fail("internal_error", e.what(), kInternalError);
  }
}

}  // namespace hypertan
