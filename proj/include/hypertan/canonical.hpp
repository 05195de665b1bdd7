#pragma once

#include <string>
#include <vector>

#include "hypertan/projective.hpp"

namespace hypertan {

/// Monic minimal polynomial over Q.
QPoly minimal_polynomial(const FieldElement& a);

/// Field-independent description of the Galois orbit of a tuple of algebraic
/// numbers. Two tuples get the same key exactly when they are conjugate.
struct OrbitKey {
  int size = 1;  ///< number of conjugates, [Q(values) : Q]
  std::string key;
  friend bool operator==(const OrbitKey& a, const OrbitKey& b) { return a.key == b.key; }
  friend bool operator<(const OrbitKey& a, const OrbitKey& b) {
    return a.size != b.size ? a.size < b.size : a.key < b.key;
  }
};

OrbitKey orbit_key(const std::vector<FieldElement>& values);
OrbitKey orbit_key(const ProjectivePoint& p);
/// Key of the normalized form; includes the monomial support.
OrbitKey orbit_key(const PlaneCurve& c);

/// Canonical curve order: degree, then orbit size, then key.
bool curve_less(const PlaneCurve& a, const PlaneCurve& b);

/// Same object over Q when every coordinate or coefficient is rational.
ProjectivePoint rationalize(const ProjectivePoint& p);
PlaneCurve rationalize(const PlaneCurve& c);

/// Image of `a` under the embedding of its field sending the generator to `image`.
FieldElement embed(const FieldElement& a, const FieldElement& image);

/// Representatives of the Galois orbits of pairs (p', q') with p' conjugate to
/// p and q' conjugate to q, all defined over a common field.
std::vector<std::pair<ProjectivePoint, ProjectivePoint>> pair_orbits(const ProjectivePoint& p,
                                                                    const ProjectivePoint& q,
                                                                    const Budget& budget = {});

}  // namespace hypertan
