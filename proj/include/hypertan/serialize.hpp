#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypertan/search.hpp"

namespace hypertan {

using json = nlohmann::ordered_json;

inline constexpr const char* kConfigSchema = "hypertan-config/1";
inline constexpr const char* kReportSchema = "hypertan-report/1";

/// Contents of a curve configuration file.
struct CurveConfig {
  FieldPtr field;
  std::vector<std::string> names;  ///< in file order
  std::map<std::string, PlaneCurve> curves;
  /// Curve names forming B, when the file has a "configuration" block.
  std::vector<std::string> configuration;
  std::string plot_chart = "z";
  std::optional<std::array<double, 4>> plot_viewport;

  const PlaneCurve& curve(const std::string& name) const;
  std::vector<PlaneCurve> configuration_curves() const;
};

/// Field given by its minimal polynomial coefficients, lowest degree first.
FieldPtr field_from_minpoly(const std::vector<Rational>& coeffs, const std::string& generator = "a",
                            const Budget& budget = {});
/// "c0,c1,...,cn" as used by the --field flag.
FieldPtr parse_field_flag(const std::string& text, const Budget& budget = {});

/// Parses a configuration document. `field`, when given, overrides the field
/// block of the file.
CurveConfig parse_config(const json& doc, FieldPtr field = nullptr, const Budget& budget = {});
CurveConfig load_config(const std::string& path, FieldPtr field = nullptr, const Budget& budget = {});

/// A coefficient: "n/d" for rationals, an array of power-basis coordinates otherwise.
json to_json(const FieldElement& a);
FieldElement field_element_from_json(const json& j, const FieldPtr& k);
json field_to_json(const FieldPtr& k);
FieldPtr field_from_json(const json& j, const Budget& budget = {});

json to_json(const ProjectivePoint& p, int orbit = 1);
json to_json(const PlaneCurve& c);
/// Reads a curve written by to_json(PlaneCurve); the field travels with it.
PlaneCurve curve_from_json(const json& j, const Budget& budget = {});
/// "x:y:z" with rational entries or bracketed coordinate lists over `k`.
ProjectivePoint parse_point(const std::string& text, const FieldPtr& k = nullptr);

json to_json(const PointType& t);
json to_json(const TangencyReport& r);
json to_json(const MirrorReport& r);
json to_json(const HypCertificate& c);
json to_json(const Configuration& b);
json to_json(const EmptinessCertificate& e);
json to_json(const Hyp1Result& r);
json to_json(const SearchResult& r);
json to_json(const TrianglePencilResult& r);
json to_json(const QbReport& r);

}  // namespace hypertan
