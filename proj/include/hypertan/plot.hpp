#pragma once

#include <array>
#include <string>
#include <vector>

#include "hypertan/projective.hpp"

namespace hypertan {

struct PlotCurve {
  std::string name;
  PlaneCurve curve;
  std::string css_class = "base";  ///< "base" or "found"
};

struct PlotOptions {
  /// Coordinate set to 1: "x", "y" or "z". The other two, in order, are the axes.
  std::string chart = "z";
  std::array<double, 4> viewport{-3, 3, -3, 3};  ///< xmin, xmax, ymin, ymax
  int resolution = 400;                          ///< grid cells per axis
};

struct PlotResult {
  std::string svg;
  int paths = 0;
  std::vector<std::string> warnings;
};

/// Real affine traces by marching squares. Floating point is used here only.
PlotResult render_svg(const std::vector<PlotCurve>& curves, const PlotOptions& options);

}  // namespace hypertan
