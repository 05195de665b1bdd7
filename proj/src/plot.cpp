#include "hypertan/plot.hpp"

#include <cmath>
#include <cstdio>

namespace hypertan {

namespace {

struct Term {
  double c;
  int a, b;
};

int chart_index(const std::string& chart) {
  if (chart == "x") return 0;
  if (chart == "y") return 1;
  if (chart == "z") return 2;
  throw InputError("chart must be x, y or z, got \"" + chart + "\"");
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

}  // namespace

PlotResult render_svg(const std::vector<PlotCurve>& curves, const PlotOptions& options) {
  const auto [xmin, xmax, ymin, ymax] = options.viewport;
  if (!(std::isfinite(xmin) && std::isfinite(xmax) && std::isfinite(ymin) && std::isfinite(ymax)))
    throw InputError("viewport bounds must be finite");
  if (!(xmax > xmin) || !(ymax > ymin)) throw InputError("viewport has zero area");
  if (options.resolution < 2 || options.resolution > 2048) throw InputError("resolution must be in [2, 2048]");
  const int fixed = chart_index(options.chart);
  std::array<int, 2> axes{};
  for (int i = 0, n = 0; i < 3; ++i)
    if (i != fixed) axes[n++] = i;

  const int n = options.resolution;
  const double width = 600.0;
  const double height = std::round(width * (ymax - ymin) / (xmax - xmin));
  auto px = [&](double x) { return (x - xmin) / (xmax - xmin) * width; };
  auto py = [&](double y) { return (ymax - y) / (ymax - ymin) * height; };

  PlotResult res;
  std::string body;
  for (const auto& pc : curves) {
    std::vector<Term> terms;
    bool real = true;
    for (const auto& [e, c] : pc.curve.form().terms()) {
      if (!c.is_rational()) {
        real = false;
        break;
      }
      terms.push_back({c.rational().get_d(), e[axes[0]], e[axes[1]]});
    }
    if (!real) {
      res.warnings.push_back(pc.name + ": coefficients are not rational, curve not drawn");
      continue;
    }
    auto eval = [&](double x, double y) {
      double s = 0;
      for (const auto& t : terms) s += t.c * std::pow(x, t.a) * std::pow(y, t.b);
      return s;
    };
    std::vector<double> grid(static_cast<size_t>(n + 1) * (n + 1));
    auto gx = [&](int i) { return xmin + (xmax - xmin) * i / n; };
    auto gy = [&](int j) { return ymin + (ymax - ymin) * j / n; };
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n; ++i) grid[static_cast<size_t>(j) * (n + 1) + i] = eval(gx(i), gy(j));
    auto at = [&](int i, int j) { return grid[static_cast<size_t>(j) * (n + 1) + i]; };

    std::string d;
    auto seg = [&](double x0, double y0, double x1, double y1) {
      d += "M" + fmt(px(x0)) + "," + fmt(py(y0)) + "L" + fmt(px(x1)) + "," + fmt(py(y1));
    };
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        const double v[4] = {at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)};
        const double cx[4] = {gx(i), gx(i + 1), gx(i + 1), gx(i)};
        const double cy[4] = {gy(j), gy(j), gy(j + 1), gy(j + 1)};
        int mask = 0;
        for (int k = 0; k < 4; ++k)
          if (v[k] > 0) mask |= 1 << k;
        if (mask == 0 || mask == 15) continue;
        // Crossing on edge k (corner k to corner k+1).
        auto cross = [&](int k, double& x, double& y) {
          const int l = (k + 1) % 4;
          const double t = v[k] / (v[k] - v[l]);
          x = cx[k] + t * (cx[l] - cx[k]);
          y = cy[k] + t * (cy[l] - cy[k]);
        };
        std::vector<int> edges;
        for (int k = 0; k < 4; ++k)
          if (((mask >> k) & 1) != ((mask >> ((k + 1) % 4)) & 1)) edges.push_back(k);
        if (edges.size() == 4) {
          const bool center = (v[0] + v[1] + v[2] + v[3]) / 4 > 0;
          const bool c0 = v[0] > 0;
          if (center == c0) edges = {3, 2, 0, 1};
          else edges = {0, 3, 1, 2};
        }
        for (size_t k = 0; k + 1 < edges.size(); k += 2) {
          double x0, y0, x1, y1;
          cross(edges[k], x0, y0);
          cross(edges[k + 1], x1, y1);
          seg(x0, y0, x1, y1);
        }
      }
    }
    if (d.empty()) {
      res.warnings.push_back(pc.name + ": empty real trace in the viewport");
      continue;
    }
    body += "<path class=\"" + pc.css_class + "\" data-name=\"" + pc.name + "\" d=\"" + d + "\"/>\n";
    ++res.paths;
  }

  const std::string w = fmt(width), h = fmt(height);
  res.svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w + "\" height=\"" + h +
            "\" viewBox=\"0 0 " + w + " " + h + "\">\n"
            "<style>path{fill:none;stroke-width:1.5}.base{stroke:#222}.found{stroke:#c0392b;stroke-dasharray:4 2}</style>\n"
            "<rect x=\"0\" y=\"0\" width=\"" + w + "\" height=\"" + h + "\" fill=\"white\" stroke=\"#999\"/>\n" +
            body + "</svg>\n";
  return res;
}

}  // namespace hypertan
