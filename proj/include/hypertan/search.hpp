#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypertan/tangency.hpp"

namespace hypertan {

/// One Galois orbit of intersection points of components i < j.
struct Node {
  ProjectivePoint point;
  int orbit = 1;
  int i = 0, j = 1;
};

/// A reduced curve whose integral components meet pairwise in nodes and
/// never three at a point. Components are sorted by degree.
struct Configuration {
  std::vector<PlaneCurve> components;
  std::vector<std::string> names;
  std::vector<Node> nodes;

  PlaneCurve curve() const { return curve_product(components); }
  int degree(int k) const { return components[k].degree(); }
  int total_degree() const;
  /// Node count over the algebraic closure.
  int node_count() const;
};

/// Thrown when components are tangent somewhere, three meet at a point, or
/// the union is not reduced.
class InvalidConfiguration : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

Configuration validate_configuration(std::vector<PlaneCurve> components, std::vector<std::string> names = {},
                                     const Budget& budget = {});
Configuration validate_3c(const PlaneCurve& b1, const PlaneCurve& b2, const PlaneCurve& b3, const Budget& budget = {});

/// A verified element of Hyp(B,2), possibly a Galois orbit of such curves.
struct HypCertificate {
  PlaneCurve curve;
  int orbit = 1;
  int degree = 1;
  /// For lines: "through_two_nodes", "tangent_through_node" (through one node,
  /// tangent elsewhere) or "tangent_at_node" (tangent to a component at a node).
  std::string line_class;
  std::optional<ProjectivePoint> p, q;
  std::optional<PointType> type_p, type_q;
  int mult_p = 0, mult_q = 0;
  std::optional<int> genus;
  TangencyReport report;
};

/// Lines through `node` all of which are hyper-bitangent (a pencil).
struct LineFamily {
  Node node;
  std::string description;
};

struct Hyp1Result {
  std::vector<HypCertificate> lines;
  std::vector<LineFamily> families;
  /// Nodes whose pencil could not be finished, with the reason.
  std::vector<std::string> incomplete;
  bool complete() const { return incomplete.empty(); }
  /// Number of lines over the algebraic closure.
  int count() const;
};

/// Complete enumeration of hyper-bitangent lines by the pencil method.
Hyp1Result hyp1_lines(const Configuration& b, const Budget& budget = {});

enum class EmptinessReason { B1_DEGREE, B2_DEGREE, B2_CONIC_HIGH_D, COMPONENTS_GE_5, MULTI_COMP_HIGH_D, SEARCH_EXHAUSTED };
std::string to_string(EmptinessReason r);

struct Refutation {
  std::string p, q, lp;
  std::string reason;
  std::optional<PlaneCurve> candidate;
};

struct EmptinessCertificate {
  EmptinessReason reason = EmptinessReason::SEARCH_EXHAUSTED;
  std::string justification;
  std::vector<Refutation> refuted;
};

/// Degree obstructions for Hyp_d(B,2) with d >= 2; nullopt means PROCEED.
std::optional<EmptinessCertificate> structural_emptiness(const Configuration& b, int d);

struct SearchOptions {
  /// Seed for the two free frame scalings; 0 keeps both equal to 1.
  std::uint64_t seed = 0;
};

struct SearchResult {
  std::vector<HypCertificate> certificates;
  std::optional<EmptinessCertificate> emptiness;
  std::vector<Refutation> refuted;
  std::vector<std::string> notes;
  int bound = 0;
  int count() const;
};

/// All hyper-bitangent curves of degree >= 2 for a 3C-curve.
SearchResult hyp_ge2_search(const Configuration& b, const SearchOptions& options = {}, const Budget& budget = {});

struct MultiResult {
  std::optional<EmptinessCertificate> emptiness;
  Hyp1Result lines;
};

/// Configurations with four or more components.
MultiResult multi_component_check(const Configuration& b, int d, const Budget& budget = {});

struct TriangleFamily {
  int h = 0, i = 1, j = 2;
  std::vector<Poly> basis;
  int projective_dimension = -1;
  std::vector<HypCertificate> samples;
};

struct TrianglePencilResult {
  int d = 1;
  std::vector<TriangleFamily> families;
};

/// Linear families of curves with a (d-1,d)-point at one vertex tangent to a
/// side and a d-fold contact with another side at a second vertex.
TrianglePencilResult triangle_pencil(const Configuration& b, int d, int samples = 3, const Budget& budget = {});

struct QbEntry {
  Rational t;
  PlaneCurve c_t, r_t;
  bool c_integral = false, c_smooth = false, c_hypertangent_q0 = false;
  int c_genus = -1;
  bool r_integral = false, r_hyper_bitangent = false;
  int r_genus = -1;
  std::vector<SingularPoint> r_singular;
  std::optional<PointType> r_type_qinf;
  int r_i_q0 = 0, r_i_qinf = 0;
  std::vector<std::string> problems;
  bool pass = false;
};

struct QbReport {
  int b = 4, d = 4;
  PlaneCurve q_b;
  std::vector<QbEntry> entries;
  bool pass = false;
};

PlaneCurve q_curve(int b);
QbReport verify_qb_families(int b, int d, const std::vector<Rational>& ts, const Budget& budget = {});

/// Independent re-check of a certificate against B: intersection points and
/// branch counts only.
bool reverify(const PlaneCurve& base, const PlaneCurve& c, const Budget& budget = {});

}  // namespace hypertan
