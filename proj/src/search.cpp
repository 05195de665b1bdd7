#include "hypertan/search.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "hypertan/canonical.hpp"

namespace hypertan {

int Configuration::total_degree() const {
  int d = 0;
  for (const auto& c : components) d += c.degree();
  return d;
}

int Configuration::node_count() const {
  int n = 0;
  for (const auto& x : nodes) n += x.orbit;
  return n;
}

int Hyp1Result::count() const {
  int n = 0;
  for (const auto& c : lines) n += c.orbit;
  return n;
}

int SearchResult::count() const {
  int n = 0;
  for (const auto& c : certificates) n += c.orbit;
  return n;
}

std::string to_string(EmptinessReason r) {
  switch (r) {
    case EmptinessReason::B1_DEGREE:
      return "B1_DEGREE";
    case EmptinessReason::B2_DEGREE:
      return "B2_DEGREE";
    case EmptinessReason::B2_CONIC_HIGH_D:
      return "B2_CONIC_HIGH_D";
    case EmptinessReason::COMPONENTS_GE_5:
      return "COMPONENTS_GE_5";
    case EmptinessReason::MULTI_COMP_HIGH_D:
      return "MULTI_COMP_HIGH_D";
    case EmptinessReason::SEARCH_EXHAUSTED:
      return "SEARCH_EXHAUSTED";
  }
  return "?";
}

// ---------------------------------------------------------------------------

Configuration validate_configuration(std::vector<PlaneCurve> components, std::vector<std::string> names,
                                     const Budget& budget) {
  if (components.size() < 2) throw InputError("a configuration needs at least two components");
  if (names.empty())
    for (size_t k = 0; k < components.size(); ++k) names.push_back("B" + std::to_string(k + 1));
  if (names.size() != components.size()) throw InputError("component names do not match components");
  std::vector<size_t> order(components.size());
  for (size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return components[a].degree() < components[b].degree(); });
  Configuration cfg;
  for (size_t k : order) {
    cfg.components.push_back(components[k]);
    cfg.names.push_back(names[k]);
  }
  const int n = static_cast<int>(cfg.components.size());
  for (int k = 0; k < n; ++k)
    if (!is_integral(cfg.components[k], budget))
      throw InvalidConfiguration("component " + cfg.names[k] + " is not integral");
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const PlaneCurve &a = cfg.components[i], &b = cfg.components[j];
      if (poly_gcd(a.form(), b.form()).degree() > 0)
        throw InvalidConfiguration(cfg.names[i] + " and " + cfg.names[j] + " share a component");
      for (const auto& ip : intersection_points(a, b, budget)) {
        if (ip.multiplicity != 1)
          throw InvalidConfiguration(cfg.names[i] + " and " + cfg.names[j] + " are not transverse at " +
                                     ip.point.to_string() + " (multiplicity " + std::to_string(ip.multiplicity) +
                                     ")");
        cfg.nodes.push_back({rationalize(ip.point), ip.orbit, i, j});
      }
    }
  }
  for (const auto& x : cfg.nodes)
    for (int k = 0; k < n; ++k)
      if (k != x.i && k != x.j && contains(cfg.components[k], x.point))
        throw InvalidConfiguration("triple point at " + x.point.to_string());
  return cfg;
}

Configuration validate_3c(const PlaneCurve& b1, const PlaneCurve& b2, const PlaneCurve& b3, const Budget& budget) {
  return validate_configuration({b1, b2, b3}, {"B1", "B2", "B3"}, budget);
}

// ---------------------------------------------------------------------------

namespace {

int components_through(const Configuration& b, const ProjectivePoint& p) {
  int on = 0;
  for (const auto& c : b.components)
    if (contains(c, p)) ++on;
  return on;
}

Integer binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

class LineCollector {
 public:
  LineCollector(const Configuration& b, const Budget& budget) : b_(b), bc_(b.curve()), budget_(budget) {}

  void offer(const PlaneCurve& line_in) {
    PlaneCurve line = rationalize(line_in);
    OrbitKey key = orbit_key(line);
    if (seen_.count(key.key)) return;
    seen_[key.key] = true;
    TangencyReport rep;
    try {
      rep = tangency_report(line, bc_, budget_);
    } catch (const CommonComponentError&) {
      return;
    }
    if (!rep.hyper_bitangent) return;
    HypCertificate cert;
    cert.curve = line;
    cert.orbit = key.size;
    cert.degree = 1;
    int node_contacts = 0;
    bool tangent_at_node = false;
    for (const auto& cp : rep.contacts) {
      if (components_through(b_, cp.point) < 2) continue;
      node_contacts += cp.orbit;
      if (cp.multiplicity > 2) tangent_at_node = true;
    }
    if (node_contacts >= 2) cert.line_class = "through_two_nodes";
    else if (tangent_at_node) cert.line_class = "tangent_at_node";
    else cert.line_class = "tangent_through_node";
    cert.genus = 0;
    cert.report = std::move(rep);
    found_.emplace(key, std::move(cert));
  }

  std::vector<HypCertificate> take() {
    std::vector<HypCertificate> out;
    for (auto& [k, c] : found_) out.push_back(std::move(c));
    return out;
  }

 private:
  const Configuration& b_;
  PlaneCurve bc_;
  Budget budget_;
  std::map<std::string, bool> seen_;
  std::map<OrbitKey, HypCertificate> found_;
};

// Lines through a node x: points lambda x + mu v(s) with v(s) = e1 + s e2.
void pencil(const Configuration& b, const Node& node, LineCollector& out, std::vector<LineFamily>& families,
            const Budget& budget) {
  const ProjectivePoint& x = node.point;
  const FieldPtr k = x.field();
  int piv = 2;
  while (x[piv].is_zero()) --piv;
  std::array<int, 2> other{};
  for (int i = 0, n = 0; i < 3; ++i)
    if (i != piv) other[n++] = i;
  auto unit = [](int i) {
    std::array<FieldElement, 3> e{FieldElement(0), FieldElement(0), FieldElement(0)};
    e[i] = FieldElement(1);
    return e;
  };
  const auto e1 = unit(other[0]), e2 = unit(other[1]);

  const Poly lam = Poly::variable(0, 3), mu = Poly::variable(1, 3), s = Poly::variable(2, 3);
  std::vector<Poly> images;
  for (int i = 0; i < 3; ++i) images.push_back(lam.scaled(x[i]) + mu.scaled(e1[i]) + (mu * s).scaled(e2[i]));
  Poly g = Poly::constant(FieldElement(1), 3);
  for (const auto& c : b.components) g = g * c.form().in(k).compose(images);
  const int e = g.min_degree_in(1);
  const int dd = b.total_degree() - e;
  std::vector<std::vector<FieldElement>> hc(static_cast<size_t>(dd) + 1);
  for (const auto& [ex, c] : g.terms()) {
    auto& v = hc[ex[1] - e];
    if (static_cast<int>(v.size()) <= ex[2]) v.resize(ex[2] + 1);
    v[ex[2]] = v[ex[2]] + c;
  }
  std::vector<KPoly> h;
  for (auto& v : hc) h.emplace_back(std::move(v));

  auto through = [&](const std::array<FieldElement, 3>& dir, const FieldPtr& f) {
    std::array<FieldElement, 3> d;
    for (int i = 0; i < 3; ++i) d[i] = dir[i].in(f);
    out.offer(line_through(x.in(f), ProjectivePoint(d)));
  };
  auto at_s = [&](const FieldElement& sv, const FieldPtr& f) {
    std::array<FieldElement, 3> d;
    for (int i = 0; i < 3; ++i) d[i] = e1[i] + sv * e2[i];
    through(d, f);
  };

  if (dd <= 1) {
    families.push_back({node, "every line through the node meets B in at most two points"});
    return;
  }
  // Remaining roots form a single point iff h = h0 (1 + a u)^D, i.e.
  // h_i D^i h0^(i-1) = C(D,i) h1^i for i >= 2.
  KPoly common;
  bool any = false;
  for (int i = 2; i <= dd; ++i) {
    KPoly lhs = h[i] * h[0].pow(i - 1);
    FieldElement dpow(1);
    for (int t = 0; t < i; ++t) dpow = dpow * FieldElement(dd);
    lhs = lhs.scaled(dpow);
    KPoly rhs = h[1].pow(i).scaled(FieldElement(Rational(binomial(dd, i))));
    KPoly cond = lhs - rhs;
    if (cond.is_zero()) continue;
    common = any ? gcd(common, cond) : cond;
    any = true;
  }
  if (!any) {
    families.push_back({node, "pencil condition vanishes identically"});
    return;
  }
  if (common.degree() >= 1)
    for (const auto& r : roots_over(k, common, budget)) at_s(r.ext.root, r.ext.field);
  if (h[0].degree() >= 1)
    for (const auto& r : roots_over(k, h[0], budget)) at_s(r.ext.root, r.ext.field);
  through(e2, k);
}

}  // namespace

Hyp1Result hyp1_lines(const Configuration& b, const Budget& budget) {
  Hyp1Result res;
  LineCollector collector(b, budget);
  for (const auto& node : b.nodes) {
    try {
      pencil(b, node, collector, res.families, budget);
    } catch (const BudgetExceeded& e) {
      res.incomplete.push_back("node " + node.point.to_string() + ": " + e.what());
    }
  }
  res.lines = collector.take();
  return res;
}

// ---------------------------------------------------------------------------

std::optional<EmptinessCertificate> structural_emptiness(const Configuration& b, int d) {
  if (d < 2) throw InputError("structural_emptiness needs d >= 2");
  if (b.components.size() != 3) throw InputError("structural_emptiness needs a 3C-curve");
  EmptinessCertificate cert;
  if (b.degree(0) > 1) {
    cert.reason = EmptinessReason::B1_DEGREE;
    cert.justification = "b1 > 1: no hyper-bitangent curve of degree >= 2 exists";
    return cert;
  }
  if (b.degree(1) > 2) {
    cert.reason = EmptinessReason::B2_DEGREE;
    cert.justification = "b2 > 2: no hyper-bitangent curve of degree >= 2 exists";
    return cert;
  }
  if (b.degree(1) == 2 && d >= 3) {
    cert.reason = EmptinessReason::B2_CONIC_HIGH_D;
    cert.justification = "b2 = 2 allows only conics";
    return cert;
  }
  return std::nullopt;
}

namespace {

std::array<Rational, 2> frame_scales(std::uint64_t seed) {
  if (seed == 0) return {Rational(1), Rational(1)};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(1, 7), den(1, 5), sign(0, 1);
  std::array<Rational, 2> out;
  for (auto& s : out) {
    s = Rational(num(rng) * (sign(rng) ? 1 : -1), den(rng));
    s.canonicalize();
  }
  return out;
}

// Coefficient of x^i y^j in the affine equation, divided by the y coefficient.
FieldElement normalized_coeff(const Poly& f, int i, int j, const FieldElement& a01) {
  return f.coeff({i, j, 0}) / a01;
}

}  // namespace

SearchResult hyp_ge2_search(const Configuration& b, const SearchOptions& options, const Budget& budget) {
  SearchResult res;
  if (b.components.size() != 3) throw InputError("hyp_ge2_search needs a 3C-curve");
  if (b.degree(2) < 2) throw PreconditionError("b3 = 1: use the triangle pencil");
  res.bound = b.degree(1) == 1 ? 2 * b.degree(2) : b.degree(2);
  if (auto e = structural_emptiness(b, 2)) {
    res.emptiness = e;
    res.bound = 0;
    return res;
  }
  const PlaneCurve bc = b.curve();
  const PlaneCurve& b3 = b.components[2];
  const auto scales = frame_scales(options.seed);
  std::map<OrbitKey, HypCertificate> found;

  for (int j = 0; j < 2; ++j) {
    const int i = 1 - j;
    if (b.degree(i) > 1) {
      res.refuted.push_back({"", "", b.names[j],
                             "tangent to " + b.names[j] + " at p forces " + b.names[i] +
                                 " to be a line (its degree is " + std::to_string(b.degree(i)) + ")",
                             std::nullopt});
      continue;
    }
    for (const auto& pn : b.nodes) {
      if (pn.i != 0 || pn.j != 1) continue;
      for (const auto& qn : b.nodes) {
        if (!((qn.i == i && qn.j == 2) || (qn.i == 2 && qn.j == i))) continue;
        for (const auto& [p, q] : pair_orbits(pn.point, qn.point, budget)) {
          Refutation ref{p.to_string(), q.to_string(), b.names[j], "", std::nullopt};
          auto refute = [&](const std::string& why) {
            ref.reason = why;
            res.refuted.push_back(ref);
          };
          const PlaneCurve lp = tangent_line(b.components[j], p, budget);
          if (multiplicity_at(b3, q) != 1) {
            res.notes.push_back("q = " + q.to_string() + " is singular on B3; outside the smooth-node hypothesis");
            continue;
          }
          const PlaneCurve lq = tangent_line(b3, q, budget);
          const PointType t3 = point_type(b3, q, budget);
          if (t3.infinite()) {
            refute("B3 contains its tangent line at q");
            continue;
          }
          const int l = t3.n;
          if (l >= 3 && b.degree(1) == 2) {
            refute("b2 = 2 and l = " + std::to_string(l) + ": only conics are possible");
            continue;
          }
          if (contains(lq, p)) {
            refute("p lies on the tangent line of B3 at q");
            continue;
          }
          if (contains(lp, q)) {
            refute("q lies on the tangent line Lp");
            continue;
          }
          Projectivity t = frame_normalize(p, lp, q, lq, scales);
          Poly f = t.apply(b3).form().dehomogenize(2);
          const FieldElement a01 = f.coeff({0, 1, 0});
          if (a01.is_zero()) throw InternalError("normalized B3 is not tangent to y = 0 at the origin");
          const Poly x = Poly::variable(0, 3), y = Poly::variable(1, 3), z = Poly::variable(2, 3);
          Poly cand;
          int d = l;
          if (l >= 3) {
            const FieldElement c = -normalized_coeff(f, d, 0, a01);
            if (c.is_zero()) {
              refute("degenerate candidate (c_d = 0)");
              continue;
            }
            cand = y * z.pow(d - 1) - x.pow(d).scaled(c);
          } else {
            const FieldElement a20 = normalized_coeff(f, 2, 0, a01), a11 = normalized_coeff(f, 1, 1, a01),
                               a30 = normalized_coeff(f, 3, 0, a01);
            if (a30 != a11 * a20) {
              refute("l = 2 and a30 != a11*a20");
              continue;
            }
            d = 2;
            const FieldElement c = -a20;
            if (c.is_zero()) {
              refute("degenerate candidate (c_2 = 0)");
              continue;
            }
            cand = y * z - x.pow(2).scaled(c);
          }
          PlaneCurve curve = rationalize(t.inverse().apply(PlaneCurve(cand)));
          ref.candidate = curve;
          if (!is_integral(curve, budget)) {
            refute("candidate is not integral");
            continue;
          }
          TangencyReport rep;
          try {
            rep = tangency_report(curve, bc, budget);
          } catch (const CommonComponentError&) {
            refute("candidate shares a component with B");
            continue;
          }
          if (!rep.hyper_bitangent) {
            refute("candidate meets B in " + std::to_string(rep.total_branches) + " branches");
            continue;
          }
          HypCertificate cert;
          cert.curve = curve;
          cert.degree = d;
          cert.p = rationalize(p);
          cert.q = rationalize(q);
          cert.mult_p = multiplicity_at(curve, p);
          cert.mult_q = multiplicity_at(curve, q);
          if (branch_count(curve, p, budget) == 1) cert.type_p = point_type(curve, p, budget);
          if (branch_count(curve, q, budget) == 1) cert.type_q = point_type(curve, q, budget);
          if (!(cert.type_p && *cert.type_p == PointType{d - 1, d})) {
            refute("p is not a (d-1,d)-point of the candidate");
            continue;
          }
          if (!(cert.type_q && *cert.type_q == PointType{1, d})) {
            refute("q is not a (1,d)-point of the candidate");
            continue;
          }
          if (cert.mult_p + cert.mult_q != d) throw InternalError("mult_p + mult_q != d for a verified candidate");
          cert.genus = geometric_genus(curve, budget);
          if (*cert.genus != 0) throw InternalError("hyper-bitangent curve of positive genus found");
          cert.report = std::move(rep);
          OrbitKey key = orbit_key(curve);
          cert.orbit = key.size;
          found.emplace(key, std::move(cert));
        }
      }
    }
  }
  for (auto& [k, c] : found) res.certificates.push_back(std::move(c));
  if (res.count() > res.bound)
    throw InternalError("found " + std::to_string(res.count()) + " curves, above the bound " +
                        std::to_string(res.bound));
  if (res.certificates.empty()) {
    EmptinessCertificate e;
    e.reason = EmptinessReason::SEARCH_EXHAUSTED;
    e.justification = "every admissible (p, q) candidate was constructed and refuted";
    e.refuted = res.refuted;
    res.emptiness = e;
  }
  return res;
}

// ---------------------------------------------------------------------------

MultiResult multi_component_check(const Configuration& b, int d, const Budget& budget) {
  if (b.components.size() < 4) throw InputError("multi_component_check needs at least four components");
  if (d < 1) throw InputError("degree must be positive");
  MultiResult res;
  if (b.components.size() >= 5) {
    res.emptiness = EmptinessCertificate{EmptinessReason::COMPONENTS_GE_5,
                                         "a curve meeting B in two points can meet at most four components", {}};
    return res;
  }
  if (d >= 2) {
    res.emptiness = EmptinessCertificate{EmptinessReason::MULTI_COMP_HIGH_D,
                                         "with four components only lines can be hyper-bitangent", {}};
    return res;
  }
  res.lines = hyp1_lines(b, budget);
  return res;
}

// ---------------------------------------------------------------------------

TrianglePencilResult triangle_pencil(const Configuration& b, int d, int samples, const Budget& budget) {
  if (b.components.size() != 3) throw InputError("triangle_pencil needs three lines");
  for (const auto& c : b.components)
    if (c.degree() != 1) throw InputError("triangle_pencil needs three lines");
  if (d < 1) throw InputError("degree must be positive");
  Matrix m;
  for (const auto& c : b.components) {
    auto abc = line_coefficients(c);
    m.push_back({abc[0], abc[1], abc[2]});
  }
  if (determinant(m).is_zero()) throw PreconditionError("triangle_pencil: the lines are concurrent");
  const Projectivity t(m);  // Y_k = B_k(X)
  const Matrix& inv = t.inverse_matrix();
  const PlaneCurve bc = b.curve();

  std::vector<Exponent> monos;
  for (int a = d; a >= 0; --a)
    for (int c = d - a; c >= 0; --c) monos.push_back({a, d - a - c, c});
  // X^beta written in the Y coordinates.
  std::vector<Poly> yimages;
  for (int i = 0; i < 3; ++i) {
    Poly row(3);
    for (int j = 0; j < 3; ++j) row += Poly::variable(j, 3).scaled(inv[i][j]);
    yimages.push_back(row);
  }
  std::vector<Poly> expanded;
  for (const auto& beta : monos) expanded.push_back(Poly::monomial(FieldElement(1), beta, 3).compose(yimages));

  TrianglePencilResult res;
  res.d = d;
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& pr : perms) {
    TriangleFamily fam;
    fam.h = pr[0];
    fam.i = pr[1];
    fam.j = pr[2];
    Matrix rows;
    for (const auto& alpha : monos) {
      const int ai = alpha[fam.i], ah = alpha[fam.h];
      const bool zero = (ai == 0 && ah < d) || ai >= 2 || (ai == 1 && ah >= 1);
      if (!zero) continue;
      Vector row;
      for (const auto& ex : expanded) row.push_back(ex.coeff(alpha));
      rows.push_back(std::move(row));
    }
    LinearSolution sol = rows.empty() ? LinearSolution{true, 0, Vector(monos.size(), FieldElement(0)), {}}
                                      : solve_linear(rows, Vector(rows.size(), FieldElement(0)));
    if (rows.empty())
      for (size_t k = 0; k < monos.size(); ++k) {
        Vector v(monos.size(), FieldElement(0));
        v[k] = FieldElement(1);
        sol.kernel.push_back(v);
      }
    for (const auto& v : sol.kernel) {
      Poly f(3);
      for (size_t k = 0; k < monos.size(); ++k)
        if (!v[k].is_zero()) f += Poly::monomial(v[k], monos[k], 3);
      fam.basis.push_back(f);
    }
    fam.projective_dimension = static_cast<int>(fam.basis.size()) - 1;
    for (int tv = 1; tv <= 40 && static_cast<int>(fam.samples.size()) < samples && !fam.basis.empty(); ++tv) {
      Poly f(3);
      FieldElement w(1);
      for (const auto& g : fam.basis) {
        f += g.scaled(w);
        w = w * FieldElement(tv);
      }
      if (f.is_zero()) continue;
      PlaneCurve c(f);
      if (!is_integral(c, budget)) continue;
      HypCertificate cert;
      cert.curve = c;
      cert.degree = d;
      try {
        cert.report = tangency_report(c, bc, budget);
      } catch (const CommonComponentError&) {
        continue;
      }
      fam.samples.push_back(std::move(cert));
    }
    res.families.push_back(std::move(fam));
  }
  return res;
}

// ---------------------------------------------------------------------------

PlaneCurve q_curve(int b) {
  const Poly x = Poly::variable(0, 3), y = Poly::variable(1, 3), z = Poly::variable(2, 3);
  return PlaneCurve(z.pow(b - 1) * y - x.pow(b));
}

QbReport verify_qb_families(int b, int d, const std::vector<Rational>& ts, const Budget& budget) {
  if (b < 4) throw InputError("verify_qb_families needs b >= 4");
  if (d < b) throw InputError("verify_qb_families needs d >= b");
  for (const auto& t : ts)
    if (sgn(t) == 0 || t == 1) throw InputError("t must differ from 0 and 1 (t = " + to_string(t) + ")");
  const Poly x = Poly::variable(0, 3), y = Poly::variable(1, 3), z = Poly::variable(2, 3);
  const ProjectivePoint q0(FieldElement(0), FieldElement(0), FieldElement(1));
  const ProjectivePoint qinf(FieldElement(0), FieldElement(1), FieldElement(0));
  QbReport rep;
  rep.b = b;
  rep.d = d;
  rep.q_b = q_curve(b);
  rep.pass = true;
  for (const auto& t : ts) {
    QbEntry e;
    e.t = t;
    auto& pr = e.problems;
    e.c_t = PlaneCurve(y * z.pow(d - 1) - x.pow(b) * z.pow(d - b) + y.pow(d).scaled(FieldElement(t)));
    e.c_integral = is_integral(e.c_t, budget);
    if (!e.c_integral) pr.push_back("C_t is not integral");
    if (e.c_integral) {
      e.c_smooth = singular_points(e.c_t, budget).empty();
      e.c_genus = geometric_genus(e.c_t, budget);
      auto tr = tangency_report(e.c_t, rep.q_b, budget);
      e.c_hypertangent_q0 = tr.hypertangent && tr.contacts.size() == 1 && tr.contacts[0].point == q0;
    }
    if (!e.c_smooth) pr.push_back("C_t is singular");
    if (!e.c_hypertangent_q0) pr.push_back("C_t is not hypertangent to Q_b at q0");

    e.r_t = PlaneCurve(z.pow(b - 1) * y - x.pow(b).scaled(FieldElement(t)));
    e.r_integral = is_integral(e.r_t, budget);
    if (!e.r_integral) pr.push_back("R_t is not integral");
    if (e.r_integral) {
      e.r_genus = geometric_genus(e.r_t, budget);
      e.r_singular = singular_points(e.r_t, budget);
      if (e.r_singular.size() == 1 && e.r_singular[0].orbit == 1 && e.r_singular[0].point == qinf)
        e.r_type_qinf = point_type(e.r_t, qinf, budget);
      for (const auto& ip : intersection_points(e.r_t, rep.q_b, budget)) {
        if (ip.point == q0) e.r_i_q0 = ip.multiplicity;
        else if (ip.point == qinf) e.r_i_qinf = ip.multiplicity;
        else pr.push_back("R_t meets Q_b at " + ip.point.to_string());
      }
      e.r_hyper_bitangent = tangency_report(e.r_t, rep.q_b, budget).hyper_bitangent;
    }
    if (e.r_genus != 0) pr.push_back("R_t is not rational");
    if (!e.r_type_qinf) pr.push_back("singular set of R_t is not {q_inf}");
    else if (!(*e.r_type_qinf == PointType{b - 1, b})) pr.push_back("q_inf is not a (b-1,b)-point of R_t");
    if (e.r_i_q0 != b || e.r_i_qinf != b * (b - 1)) pr.push_back("R_t . Q_b is not b q0 + b(b-1) q_inf");
    if (!e.r_hyper_bitangent) pr.push_back("R_t is not hyper-bitangent to Q_b");
    e.pass = pr.empty();
    rep.pass = rep.pass && e.pass;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

bool reverify(const PlaneCurve& base, const PlaneCurve& c, const Budget& budget) {
  if (!is_integral(c, budget)) return false;
  int branches = 0, total = 0;
  for (const auto& ip : intersection_points(c, base, budget)) {
    branches += ip.orbit * branch_count(c, ip.point, budget);
    total += ip.orbit * ip.multiplicity;
  }
  return total == c.degree() * base.degree() && branches <= 2;
}

}  // namespace hypertan
