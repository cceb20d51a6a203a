#include "toric/mmp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "toric/dd.hpp"
#include "toric/errors.hpp"
#include "toric/linalg.hpp"

namespace toric {

namespace {

IRow to_int_row(const QRow& v) {
  Int lcm_den(1);
  for (const Rat& x : v) lcm_den = lcm(lcm_den, denominator_of(x));
  IRow r(v.size());
  Int g(0);
  for (size_t i = 0; i < v.size(); ++i) {
    r[i] = numerator_of(v[i] * lcm_den);
    g = gcd(g, r[i]);
  }
  if (g > 1)
    for (Int& x : r) x /= g;
  return r;
}

std::vector<Rat> primitive_rational(std::vector<Rat> v) {
  Int lcm_den(1), g(0);
  for (const Rat& x : v) lcm_den = lcm(lcm_den, denominator_of(x));
  for (Rat& x : v) x *= lcm_den;
  for (const Rat& x : v) g = gcd(g, numerator_of(x));
  if (g > 1)
    for (Rat& x : v) x /= g;
  return v;
}

}  // namespace

std::vector<Wall> walls(const Fan& fan) {
  const size_t n = fan.ambient_dim();
  if (!is_simplicial(fan)) throw ValidationError("walls: fan must be simplicial");

  // Codim-1 key -> (cone index, omitted ray).
  std::map<std::vector<NVec>, std::vector<std::pair<size_t, NVec>>> shared;
  for (size_t ci = 0; ci < fan.max_cones().size(); ++ci) {
    const Cone& c = fan.max_cones()[ci];
    if (c.dim() != n) throw ValidationError("walls: fan must be complete");
    for (size_t omit = 0; omit < c.rays().size(); ++omit) {
      std::vector<NVec> key;
      for (size_t i = 0; i < c.rays().size(); ++i)
        if (i != omit) key.push_back(c.rays()[i]);
      shared[key].emplace_back(ci, c.rays()[omit]);
    }
  }

  std::vector<Wall> out;
  for (const auto& [key, owners] : shared) {
    if (owners.size() != 2)
      throw ValidationError("walls: fan is not complete (a wall has " +
                            std::to_string(owners.size()) + " cones)");
    Wall w;
    w.rays = key;
    auto [ia, ra] = owners[0];
    auto [ib, rb] = owners[1];
    if (rb < ra) {
      std::swap(ia, ib);
      std::swap(ra, rb);
    }
    w.cone_a = ia;
    w.cone_b = ib;
    w.opposite_a = ra;
    w.opposite_b = rb;

    QMat cols(n, QRow(n + 1));
    for (size_t j = 0; j < n - 1; ++j)
      for (size_t i = 0; i < n; ++i) cols[i][j] = w.rays[j][i];
    for (size_t i = 0; i < n; ++i) {
      cols[i][n - 1] = w.opposite_a[i];
      cols[i][n] = w.opposite_b[i];
    }
    const QMat ker = kernel_basis(cols, n + 1);
    if (ker.size() != 1) throw Error("walls: wall relation is not one-dimensional");
    std::vector<Rat> rel = primitive_rational(ker[0]);
    if (rel[n - 1] < 0)
      for (Rat& x : rel) x = -x;
    if (rel[n - 1] <= 0 || rel[n] <= 0)
      throw Error("walls: opposite rays of a wall do not lie on opposite sides");
    w.relation = std::move(rel);
    out.push_back(std::move(w));
  }
  return out;
}

Rat wall_degree(const SupportFunction& h, const Wall& wall) {
  Rat s(0);
  for (size_t i = 0; i < wall.rays.size(); ++i) s += wall.relation[i] * h.at_ray(wall.rays[i]);
  s += wall.relation[wall.rays.size()] * h.at_ray(wall.opposite_a);
  s += wall.relation[wall.rays.size() + 1] * h.at_ray(wall.opposite_b);
  return -s;
}

CurveClass wall_class(const Fan& fan, const Wall& wall) {
  CurveClass c;
  c.degrees.assign(fan.rays().size(), Rat(0));
  for (size_t i = 0; i < wall.rays.size(); ++i)
    c.degrees[*fan.ray_index(wall.rays[i])] = wall.relation[i];
  c.degrees[*fan.ray_index(wall.opposite_a)] = wall.relation[wall.rays.size()];
  c.degrees[*fan.ray_index(wall.opposite_b)] = wall.relation[wall.rays.size() + 1];
  return c;
}

Rat class_degree(const SupportFunction& h, const CurveClass& c) {
  Rat s(0);
  for (size_t i = 0; i < c.degrees.size(); ++i) s += c.degrees[i] * h.values[i];
  return -s;
}

std::vector<CurveClass> extremal_rays(const Fan& fan, const std::vector<CurveClass>& classes) {
  (void)fan;
  std::vector<CurveClass> uniq = classes;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());

  std::vector<CurveClass> out;
  for (size_t j = 0; j < uniq.size(); ++j) {
    const size_t dim = uniq[j].degrees.size();
    QMat a(dim);
    for (size_t r = 0; r < dim; ++r)
      for (size_t other = 0; other < uniq.size(); ++other)
        if (other != j) a[r].push_back(uniq[other].degrees[r]);
    const bool expressible =
        uniq.size() > 1 && nonnegative_solution_exists(a, uniq[j].degrees);
    if (!expressible) out.push_back(uniq[j]);
  }
  return out;
}

namespace {

struct UnionFind {
  std::vector<size_t> parent;
  explicit UnionFind(size_t n) : parent(n) {
    for (size_t i = 0; i < n; ++i) parent[i] = i;
  }
  size_t find(size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(size_t a, size_t b) { parent[find(a)] = find(b); }
};

// Lineality space of the cone generated by the given rays.
QMat lineality_of_hull(size_t dim, const std::vector<NVec>& rays) {
  QMat rows;
  for (const NVec& r : rays) rows.push_back(r.coords());
  const GeneratorDescription dual = dual_description(dim, rows);
  QMat stacked = dual.rays;  // facet normals
  for (const QRow& e : dual.lineality) stacked.push_back(e);
  return kernel_basis(stacked, dim);
}

}  // namespace

ContractionResult classify_and_contract(const Fan& fan, const CurveClass& extremal,
                                        const SupportFunction& h_adjoint) {
  const size_t n = fan.ambient_dim();
  if (extremal.degrees.size() != fan.rays().size())
    throw ValidationError("classify_and_contract: class does not match the fan");

  const std::vector<Wall> ws = walls(fan);
  std::vector<size_t> matching;
  for (size_t i = 0; i < ws.size(); ++i)
    if (wall_class(fan, ws[i]) == extremal) matching.push_back(i);
  if (matching.empty())
    throw ValidationError("classify_and_contract: no wall carries the given class");

  std::vector<size_t> j_minus, j_plus;
  for (size_t i = 0; i < extremal.degrees.size(); ++i) {
    if (extremal.degrees[i] < 0) j_minus.push_back(i);
    if (extremal.degrees[i] > 0) j_plus.push_back(i);
  }

  UnionFind uf(fan.max_cones().size());
  for (size_t i : matching) uf.unite(ws[i].cone_a, ws[i].cone_b);
  std::set<size_t> touched;
  for (size_t i : matching) {
    touched.insert(ws[i].cone_a);
    touched.insert(ws[i].cone_b);
  }
  std::map<size_t, std::vector<size_t>> components;
  for (size_t c : touched) components[uf.find(c)].push_back(c);

  MMPStep step;
  step.extremal_class = extremal;
  step.adjoint_degree = class_degree(h_adjoint, extremal);
  step.before = std::make_shared<Fan>(fan);

  // Collected union of rays per merged region.
  std::vector<std::vector<NVec>> regions;
  std::set<size_t> merged_cones;
  for (const auto& [root, members] : components) {
    std::set<NVec> rays;
    for (size_t m : members) {
      merged_cones.insert(m);
      const Cone& c = fan.max_cones()[m];
      rays.insert(c.rays().begin(), c.rays().end());
    }
    regions.emplace_back(rays.begin(), rays.end());
  }

  if (j_minus.empty()) {
    // Fibration: the merged regions contain linear subspaces.
    step.kind = StepKind::fibration;
    QMat lin;
    for (const auto& region : regions) {
      lin = lineality_of_hull(n, region);
      if (lin.empty())
        throw Error("classify_and_contract: fibration region is strongly convex");
    }
    IMat lat;
    for (const QRow& l : lin) lat.push_back(to_int_row(l));
    const IMat proj = quotient_projection(lat, n);
    const size_t base_dim = proj.size();
    if (base_dim + lat.size() != n)
      throw Error("classify_and_contract: quotient projection rank mismatch");

    auto project_rays = [&](const std::vector<NVec>& rays) {
      std::vector<NVec> out;
      for (const NVec& r : rays) {
        std::vector<Rat> img(base_dim);
        bool zero = true;
        for (size_t j = 0; j < base_dim; ++j) {
          Rat s(0);
          for (size_t c = 0; c < n; ++c) s += Rat(proj[j][c]) * r[c];
          img[j] = s;
          if (s != 0) zero = false;
        }
        if (!zero) out.emplace_back(std::move(img));
      }
      return out;
    };

    std::vector<Cone> quotient_cones;
    for (const auto& region : regions) quotient_cones.emplace_back(base_dim, project_rays(region));
    for (size_t ci = 0; ci < fan.max_cones().size(); ++ci) {
      if (merged_cones.count(ci)) continue;
      quotient_cones.emplace_back(base_dim, project_rays(fan.max_cones()[ci].rays()));
    }
    FanPtr quotient = std::make_shared<Fan>(Fan::validated(base_dim, std::move(quotient_cones)));

    const Rat k_degree = [&] {
      Rat s(0);
      for (const Rat& d : extremal.degrees) s += d;
      return -s;
    }();
    step.fibration = FibrationData{lat.size(), base_dim, quotient, k_degree,
                                   step.adjoint_degree - k_degree};
    return {std::move(step), nullptr};
  }

  std::vector<Cone> next_cones;
  for (size_t ci = 0; ci < fan.max_cones().size(); ++ci)
    if (!merged_cones.count(ci)) next_cones.push_back(fan.max_cones()[ci]);

  if (j_minus.size() == 1) {
    step.kind = StepKind::divisorial;
    const NVec removed = fan.rays()[j_minus[0]];
    step.removed_ray = removed;
    for (const auto& region : regions) {
      Cone hull(n, region);
      if (hull.has_ray(removed))
        throw Error("classify_and_contract: contracted ray survives the merge; the class "
                    "is not extremal");
      next_cones.push_back(std::move(hull));
    }
    Fan next = Fan::validated(n, std::move(next_cones));
    if (next.rays().size() + 1 != fan.rays().size() || next.ray_index(removed))
      throw Error("classify_and_contract: divisorial step did not remove exactly one ray");
    FanPtr nextp = std::make_shared<Fan>(std::move(next));
    step.after = nextp;
    return {std::move(step), std::move(nextp)};
  }

  // Flip: re-triangulate each circuit region from the positive to the
  // negative side.
  step.kind = StepKind::flip;
  std::vector<NVec> circuit_minus, circuit_plus;
  for (size_t i : j_minus) circuit_minus.push_back(fan.rays()[i]);
  for (size_t i : j_plus) circuit_plus.push_back(fan.rays()[i]);

  // The flip's exceptional divisor sits on the interior ray of the circuit.
  {
    NVec hinge = NVec::zero(n);
    for (size_t i : j_plus) hinge = hinge + extremal.degrees[i] * fan.rays()[i];
    step.flip_hinge = primitivize(hinge);
  }

  for (const auto& region : regions) {
    std::set<NVec> region_set(region.begin(), region.end());
    for (const NVec& c : circuit_minus)
      if (!region_set.count(c))
        throw Error("classify_and_contract: circuit ray missing from a merged region");
    for (const NVec& c : circuit_plus)
      if (!region_set.count(c))
        throw Error("classify_and_contract: circuit ray missing from a merged region");
    for (const NVec& omit : circuit_minus) {
      std::vector<NVec> gens;
      for (const NVec& r : region)
        if (r != omit) gens.push_back(r);
      next_cones.emplace_back(n, std::move(gens));
    }
  }
  Fan next = Fan::validated(n, std::move(next_cones));
  if (next.rays() != fan.rays())
    throw Error("classify_and_contract: flip changed the ray set");
  FanPtr nextp = std::make_shared<Fan>(std::move(next));
  step.after = nextp;
  return {std::move(step), std::move(nextp)};
}

Fan flip(const Fan& fan, const CurveClass& extremal) {
  SupportFunction trivial(std::make_shared<Fan>(fan),
                          std::vector<Rat>(fan.rays().size(), Rat(0)));
  ContractionResult res = classify_and_contract(fan, extremal, trivial);
  if (res.step.kind != StepKind::flip)
    throw ValidationError("flip: the class is not of flipping type");
  return *res.successor;
}

namespace {

void verify_flip_step(const DivisorClassOfX& before, const DivisorClassOfX& after,
                      const MMPStep& step) {
  // Degree changes sign on the flipped circuit.
  const SupportFunction h_after = adjoint_support(after);
  CurveClass negated;
  negated.degrees.resize(step.extremal_class.degrees.size());
  for (size_t i = 0; i < negated.degrees.size(); ++i)
    negated.degrees[i] = -step.extremal_class.degrees[i];
  bool found = false;
  for (const Wall& w : walls(*after.fan()))
    if (wall_class(*after.fan(), w) == negated) {
      found = true;
      if (wall_degree(h_after, w) <= 0)
        throw Error("mmp_run: flipped wall degree did not become positive");
    }
  if (!found) throw Error("mmp_run: flipped circuit wall not found on the successor");

  // Discrepancy monotonicity on a common smooth refinement.
  const Fan refined = desingularize(common_refinement(*before.fan(), *after.fan()));
  bool strict = false;
  for (const NVec& u : refined.rays()) {
    if (before.fan()->ray_index(u)) continue;
    const Rat a = discrepancy_at(before, u);
    const Rat b = discrepancy_at(after, u);
    if (a > b) throw Error("mmp_run: discrepancy decreased across a flip");
    if (a < b) strict = true;
  }
  if (!strict) throw Error("mmp_run: no discrepancy increased across a flip");
}

}  // namespace

MMPOutcome mmp_run(const DivisorClassOfX& x_class, const MMPOptions& options) {
  FanPtr fan = x_class.fan();
  if (!is_complete(*fan) || !is_simplicial(*fan))
    throw ValidationError("mmp_run: requires a complete simplicial fan");
  if (!is_smooth(*fan) && !is_terminal_pair(x_class).terminal)
    throw ValidationError("mmp_run: the pair is not terminal");

  const size_t max_steps =
      options.max_steps ? options.max_steps : 10 * fan->rays().size() * fan->rays().size();

  DivisorClassOfX current = x_class;
  std::vector<MMPStep> trace;

  for (size_t iteration = 0; iteration <= max_steps; ++iteration) {
    const SupportFunction h = adjoint_support(current);
    if (check_nef(h).verdict == NefVerdict::nef) {
      Polytope box = box_of(h);
      const int kappa = box.dim();
      return {OutcomeKind::minimal_model, current.fan(), current,
              std::move(box), std::move(trace), kappa};
    }

    const std::vector<Wall> ws = walls(*current.fan());
    std::vector<CurveClass> classes;
    for (const Wall& w : ws) classes.push_back(wall_class(*current.fan(), w));
    std::vector<CurveClass> extremals = extremal_rays(*current.fan(), classes);
    std::vector<CurveClass> negative;
    for (const CurveClass& c : extremals)
      if (class_degree(h, c) < 0) negative.push_back(c);
    if (negative.empty())
      throw Error("mmp_run: adjoint not nef but no extremal ray has negative degree");
    const CurveClass chosen = *std::min_element(negative.begin(), negative.end());

    ContractionResult res = classify_and_contract(*current.fan(), chosen, h);

    if (res.step.kind == StepKind::fibration) {
      const FibrationData& fd = *res.step.fibration;
      OutcomeKind kind = OutcomeKind::mori_fibration;
      if (fd.fiber_dim == 1) {
        // P^1 fibers: K.l = -2 and X.l is an integer below 2.
        if (fd.canonical_degree != -2)
          throw Error("mmp_run: P^1 fiber with canonical degree != -2");
        if (denominator_of(fd.class_degree) != 1 || fd.class_degree < 0 ||
            fd.class_degree > 1)
          throw Error("mmp_run: fiber degree of the divisor is not 0 or 1");
        if (fd.class_degree == 1) kind = OutcomeKind::birational_to_projective_space;
      }
      Polytope box = box_of(h);
      trace.push_back(std::move(res.step));
      return {kind, current.fan(), current, std::move(box), std::move(trace), std::nullopt};
    }

    DivisorClassOfX next = proper_transform_class(current, res.successor);

    if (res.step.kind == StepKind::flip) {
      const NVec& hinge = *res.step.flip_hinge;
      const Rat alpha = discrepancy_at(current, hinge);
      const Rat alpha_next = discrepancy_at(next, hinge);
      res.step.flip_discrepancies = std::make_pair(alpha, alpha_next);
      if (alpha >= alpha_next)
        throw Error("mmp_run: flip discrepancy did not increase at the hinge ray");
    }

    if (options.verify_steps) {
      if (res.step.kind == StepKind::flip) verify_flip_step(current, next, res.step);
      if (!is_terminal_pair(next).terminal)
        throw Error("mmp_run: successor pair is not terminal");
    }

    trace.push_back(std::move(res.step));
    current = std::move(next);
  }
  throw ResourceError("mmp_run: step budget exceeded (" + std::to_string(max_steps) + ")");
}

}  // namespace toric
