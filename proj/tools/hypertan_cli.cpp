#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "hypertan/commands.hpp"

using hypertan::json;

namespace {

struct Options {
  std::string config, out, report, field, point, curve, other, viewport, chart, manifest, t;
  int budget_degree = 0, degree = 0, samples = 0, resolution = 0, b = 0, d = 0;
  long long seed = 0;
  bool no_search = false, update = false;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--config", o.config, "curve configuration file (JSON)");
  sub->add_option("--out", o.out, "write the report (or the SVG for plot) here instead of stdout");
  sub->add_option("--field", o.field, "number field as minimal polynomial coefficients c0,c1,...,1");
  sub->add_option("--budget-degree", o.budget_degree, "largest number field degree allowed (default 8)");
  sub->add_option("--seed", o.seed, "seed for randomized choices (0 = deterministic default)");
}

json collect(const CLI::App* sub, const Options& o) {
  json a = json::object();
  auto str = [&](const char* flag, const char* key, const std::string& v) {
    if (sub->get_option_no_throw(flag) && sub->count(flag)) a[key] = v;
  };
  auto num = [&](const char* flag, const char* key, long long v) {
    if (sub->get_option_no_throw(flag) && sub->count(flag)) a[key] = v;
  };
  str("--config", "config", o.config);
  str("--field", "field", o.field);
  num("--budget-degree", "budget_degree", o.budget_degree);
  num("--seed", "seed", o.seed);
  str("--curve", "curve", o.curve);
  str("--other", "other", o.other);
  str("--point", "point", o.point);
  num("--degree", "degree", o.degree);
  num("--samples", "samples", o.samples);
  str("--viewport", "viewport", o.viewport);
  num("--resolution", "resolution", o.resolution);
  str("--chart", "chart", o.chart);
  num("-b", "b", o.b);
  num("-d", "d", o.d);
  str("-t", "t", o.t);
  str("--manifest", "manifest", o.manifest);
  if (sub->get_option_no_throw("--no-search") && sub->count("--no-search")) a["search"] = false;
  if (sub->get_option_no_throw("--update") && sub->count("--update")) a["update"] = true;
  return a;
}

bool write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return true;
  }
  std::ofstream f(path);
  f << text;
  return static_cast<bool>(f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact plane-curve tangency toolkit"};
  app.require_subcommand(1);
  Options o;
  std::map<std::string, CLI::App*> subs;

  auto make = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    add_common(s, o);
    subs[name] = s;
    return s;
  };
  auto curve_opt = [&](CLI::App* s) { s->add_option("--curve", o.curve, "curve name from the config")->required(); };
  auto point_opt = [&](CLI::App* s) {
    s->add_option("--point", o.point, "point x:y:z; entries n/d or [c0,c1,...] over --field")->required();
  };

  auto* s = make("analyze-point", "multiplicity, branches, type and delta at a point");
  curve_opt(s);
  point_opt(s);
  s = make("intersect", "intersection points with multiplicities");
  curve_opt(s);
  s->add_option("--other", o.other, "second curve name")->required();
  s = make("delta", "delta invariant at a point");
  curve_opt(s);
  point_opt(s);
  s = make("genus", "singular points and geometric genus");
  curve_opt(s);
  s = make("flexes", "flexes and their contact orders");
  curve_opt(s);
  s = make("mirror-check", "type and delta of C at a contact point q with B");
  curve_opt(s);
  s->add_option("--other", o.other, "the curve B")->required();
  point_opt(s);
  make("validate-3c", "check that the configuration is a 3C-curve");
  make("hyp-lines", "all hyper-bitangent lines");
  make("hyp-search", "all hyper-bitangent curves of degree >= 2 of a 3C-curve");
  s = make("multi-check", "configurations with four or more components");
  s->add_option("--degree", o.degree, "degree of the curves sought")->required();
  s = make("triangle-pencil", "pencils of hyper-bitangent curves to a triangle");
  s->add_option("--degree", o.degree, "degree of the family")->required();
  s->add_option("--samples", o.samples, "members to verify per family (default 3)");
  s = make("qb-families", "verify the C_t and R_t families for Q_b");
  s->add_option("-b", o.b, "degree of Q_b (>= 4)")->required();
  s->add_option("-d", o.d, "degree of C_t (>= b)");
  s->add_option("-t", o.t, "comma separated parameters, e.g. 2,3,-1")->required();
  s = make("verify-fixtures", "rerun the fixture corpus and compare with the snapshots");
  s->add_option("--manifest", o.manifest, "fixture manifest (default fixtures/manifest.json)");
  s->add_flag("--update", o.update, "rewrite the snapshots instead of comparing");
  s = make("plot", "SVG of the real affine traces");
  s->add_option("--viewport", o.viewport, "xmin,xmax,ymin,ymax");
  s->add_option("--resolution", o.resolution, "grid cells per axis (<= 2048, default 400)");
  s->add_option("--chart", o.chart, "coordinate set to 1: x, y or z");
  s->add_option("--report", o.report, "also write the JSON report here");
  s->add_flag("--no-search", o.no_search, "do not overlay hyper-bitangent curves");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return hypertan::kInputError;
  }

  std::string name;
  CLI::App* sub = nullptr;
  for (const auto& [n, p] : subs)
    if (p->parsed()) {
      name = n;
      sub = p;
    }
  const json args = collect(sub, o);
  const hypertan::CommandOutput out = hypertan::run_command_safe(name, args);
  const std::string report = out.report.dump(2) + "\n";
  bool written = true;
  if (name == "plot" && out.exit_code == hypertan::kOk) {
    written = write_text(o.out, out.svg);
    if (!o.report.empty()) written = write_text(o.report, report) && written;
    for (const auto& w : out.report["result"]["warnings"]) std::cerr << "warning: " << w.get<std::string>() << "\n";
  } else {
    written = write_text(o.out, report);
  }
  std::cerr << name << ": " << out.report.value("summary", std::string()) << "\n";
  if (!written) {
    std::cerr << "cannot write output\n";
    return hypertan::kInputError;
  }
  return out.exit_code;
}
