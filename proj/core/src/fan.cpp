#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "toric/dd.hpp"
#include "toric/errors.hpp"

namespace toric {

namespace {

std::string describe(const Cone& c) {
  std::ostringstream os;
  os << "cone{";
  for (size_t i = 0; i < c.rays().size(); ++i) {
    if (i) os << " ";
    os << c.rays()[i];
  }
  os << "}";
  return os.str();
}

QMat rows_of(const std::vector<NVec>& vecs) {
  QMat m;
  for (const NVec& v : vecs) m.push_back(v.coords());
  return m;
}

QMat rows_of_m(const std::vector<MVec>& vecs) {
  QMat m;
  for (const MVec& v : vecs) m.push_back(v.coords());
  return m;
}

}  // namespace

Cone::Cone(size_t ambient_dim, std::vector<NVec> generators) : ambient_dim_(ambient_dim) {
  for (const NVec& g : generators)
    if (g.dim() != ambient_dim) throw ValidationError("cone: generator dimension mismatch");

  std::vector<NVec> prim;
  for (const NVec& g : generators) {
    if (g.is_zero()) continue;
    prim.push_back(primitivize(g));
  }
  std::sort(prim.begin(), prim.end());
  prim.erase(std::unique(prim.begin(), prim.end()), prim.end());

  // Dual cone in M: lineality there is the annihilator of the span, extreme
  // rays there are the facet normals within the span.
  const GeneratorDescription dual = dual_description(ambient_dim, rows_of(prim));
  for (const QRow& r : dual.lineality) span_equations_.emplace_back(MVec(r));
  for (const QRow& r : dual.rays) facet_normals_.emplace_back(MVec(r));
  dim_ = ambient_dim - span_equations_.size();

  // Strong convexity: the H-description admits no line.
  {
    QMat all = rows_of_m(facet_normals_);
    for (const MVec& e : span_equations_) all.push_back(e.coords());
    if (!prim.empty() && kernel_basis(all, ambient_dim).size() != 0)
      throw ValidationError("cone is not strongly convex: " + [&] {
        std::ostringstream os;
        for (const NVec& g : prim) os << g << " ";
        return os.str();
      }());
  }

  // Keep the generators that span one-dimensional faces.
  for (const NVec& g : prim) {
    QMat tight;
    for (const MVec& f : facet_normals_)
      if (pairing(g, f) == 0) tight.push_back(f.coords());
    for (const MVec& e : span_equations_) tight.push_back(e.coords());
    if (kernel_basis(tight, ambient_dim).size() == 1) rays_.push_back(g);
  }
  std::sort(rays_.begin(), rays_.end());
}

bool Cone::contains(const NVec& x) const {
  for (const MVec& e : span_equations_)
    if (pairing(x, e) != 0) return false;
  for (const MVec& f : facet_normals_)
    if (pairing(x, f) < 0) return false;
  return true;
}

bool Cone::contains(const Cone& other) const {
  for (const NVec& r : other.rays())
    if (!contains(r)) return false;
  return true;
}

bool Cone::has_ray(const NVec& primitive_ray) const {
  return std::binary_search(rays_.begin(), rays_.end(), primitive_ray);
}

Cone Cone::intersection(const Cone& other) const {
  if (ambient_dim_ != other.ambient_dim_) throw ValidationError("cone intersection: dimensions");
  QMat ineqs = rows_of_m(facet_normals_);
  for (const MVec& f : other.facet_normals_) ineqs.push_back(f.coords());
  QMat eqs = rows_of_m(span_equations_);
  for (const MVec& e : other.span_equations_) eqs.push_back(e.coords());
  const GeneratorDescription gen = dual_description(ambient_dim_, ineqs, eqs);
  std::vector<NVec> rays;
  for (const QRow& r : gen.rays) rays.emplace_back(NVec(r));
  return Cone(ambient_dim_, std::move(rays));
}

std::vector<Cone> Cone::facets() const {
  std::vector<Cone> out;
  for (const MVec& f : facet_normals_) {
    std::vector<NVec> sub;
    for (const NVec& r : rays_)
      if (pairing(r, f) == 0) sub.push_back(r);
    out.emplace_back(ambient_dim_, std::move(sub));
  }
  return out;
}

Cone Cone::smallest_face_containing(const NVec& x) const {
  if (!contains(x)) throw ValidationError("smallest_face_containing: point outside cone");
  std::vector<NVec> sub;
  for (const NVec& r : rays_) {
    bool in_face = true;
    for (const MVec& f : facet_normals_)
      if (pairing(x, f) == 0 && pairing(r, f) != 0) {
        in_face = false;
        break;
      }
    if (in_face) sub.push_back(r);
  }
  return Cone(ambient_dim_, std::move(sub));
}

bool Cone::is_face(const Cone& candidate) const {
  if (!contains(candidate)) return false;
  if (candidate.rays().empty()) return true;  // the zero cone
  return smallest_face_containing(candidate.ray_sum()) == candidate;
}

NVec Cone::ray_sum() const {
  if (rays_.empty()) throw ValidationError("ray_sum of the zero cone");
  NVec s = NVec::zero(ambient_dim_);
  for (const NVec& r : rays_) s = s + r;
  return s;
}

Fan Fan::validated(size_t dim, std::vector<Cone> maximal_cones) {
  Fan fan = unchecked(dim, std::move(maximal_cones));
  const auto& cones = fan.max_cones();
  for (size_t i = 0; i < cones.size(); ++i)
    for (size_t j = i + 1; j < cones.size(); ++j) {
      if (cones[i].contains(cones[j]) || cones[j].contains(cones[i]))
        throw ValidationError("fan: cone contained in another: " + describe(cones[i]) +
                              " vs " + describe(cones[j]));
      const Cone meet = cones[i].intersection(cones[j]);
      if (!cones[i].is_face(meet) || !cones[j].is_face(meet))
        throw ValidationError("fan: intersection is not a common face: " +
                              describe(cones[i]) + " vs " + describe(cones[j]));
    }
  return fan;
}

Fan Fan::unchecked(size_t dim, std::vector<Cone> maximal_cones) {
  Fan fan;
  fan.dim_ = dim;
  for (const Cone& c : maximal_cones)
    if (c.ambient_dim() != dim) throw ValidationError("fan: cone dimension mismatch");
  std::sort(maximal_cones.begin(), maximal_cones.end());
  maximal_cones.erase(std::unique(maximal_cones.begin(), maximal_cones.end()),
                      maximal_cones.end());
  fan.max_cones_ = std::move(maximal_cones);
  std::set<NVec> rays;
  for (const Cone& c : fan.max_cones_) rays.insert(c.rays().begin(), c.rays().end());
  fan.rays_.assign(rays.begin(), rays.end());
  return fan;
}

std::optional<size_t> Fan::ray_index(const NVec& ray) const {
  const auto it = std::lower_bound(rays_.begin(), rays_.end(), ray);
  if (it != rays_.end() && *it == ray) return static_cast<size_t>(it - rays_.begin());
  return std::nullopt;
}

size_t Fan::cone_containing(const NVec& x) const {
  for (size_t i = 0; i < max_cones_.size(); ++i)
    if (max_cones_[i].contains(x)) return i;
  throw ValidationError("point outside the support of the fan");
}

bool Fan::supports(const NVec& x) const {
  for (const Cone& c : max_cones_)
    if (c.contains(x)) return true;
  return false;
}

bool Fan::refines(const Fan& coarser) const {
  for (const Cone& piece : max_cones_) {
    bool inside = false;
    for (const Cone& big : coarser.max_cones())
      if (big.contains(piece)) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

Fan validate_fan(size_t dim, std::vector<Cone> cones) {
  return Fan::validated(dim, std::move(cones));
}

namespace {

// Facet key -> indices of the maximal cones containing it.
std::map<std::vector<NVec>, std::vector<size_t>> facet_incidence(const Fan& fan) {
  std::map<std::vector<NVec>, std::vector<size_t>> inc;
  for (size_t i = 0; i < fan.max_cones().size(); ++i)
    for (const Cone& f : fan.max_cones()[i].facets()) inc[f.rays()];  // create key
  for (auto& [key, owners] : inc) {
    const Cone face(fan.ambient_dim(), key);
    for (size_t i = 0; i < fan.max_cones().size(); ++i)
      if (fan.max_cones()[i].contains(face)) owners.push_back(i);
  }
  return inc;
}

}  // namespace

bool is_complete(const Fan& fan) {
  if (fan.max_cones().empty()) return false;
  for (const Cone& c : fan.max_cones())
    if (c.dim() != fan.ambient_dim()) return false;
  for (const auto& [key, owners] : facet_incidence(fan))
    if (owners.size() != 2) return false;
  // A pseudo-generic ray must lie in some cone.
  std::vector<Rat> g(fan.ambient_dim());
  Rat t(1);
  for (size_t i = 0; i < g.size(); ++i) {
    g[i] = t;
    t /= 97;
  }
  return fan.supports(NVec(std::move(g)));
}

bool is_simplicial(const Fan& fan) {
  for (const Cone& c : fan.max_cones())
    if (!c.is_simplicial()) return false;
  return true;
}

bool is_smooth(const Fan& fan) {
  for (const Cone& c : fan.max_cones()) {
    if (!c.is_simplicial()) return false;
    if (c.dim() == fan.ambient_dim() && cone_multiplicity(c.rays()) != 1) return false;
  }
  return true;
}

Fan dual_fan(const Polytope& poly) {
  const size_t n = poly.ambient_dim();
  if (poly.dim() != static_cast<int>(n))
    throw ValidationError("dual_fan: polytope is not full-dimensional");
  std::vector<Cone> cones;
  for (size_t v = 0; v < poly.vertices().size(); ++v) {
    std::vector<NVec> gens;
    for (size_t i : poly.vertex_active_sets()[v]) gens.push_back(poly.halfspaces()[i].normal);
    cones.emplace_back(n, std::move(gens));
  }
  return Fan::unchecked(n, std::move(cones));
}

Fan star_subdivide(const Fan& fan, const NVec& direction) {
  if (direction.is_zero()) throw ValidationError("star_subdivide: zero direction");
  const NVec u = primitivize(direction);
  if (!fan.supports(u)) throw ValidationError("star_subdivide: point outside the support");

  std::vector<Cone> cones;
  for (const Cone& c : fan.max_cones()) {
    if (!c.contains(u)) {
      cones.push_back(c);
      continue;
    }
    for (const Cone& f : c.facets()) {
      if (f.contains(u)) continue;
      std::vector<NVec> gens = f.rays();
      gens.push_back(u);
      cones.emplace_back(fan.ambient_dim(), std::move(gens));
    }
  }
  return Fan::unchecked(fan.ambient_dim(), std::move(cones));
}

namespace {

// Recursive pulling triangulation: join the lexicographically least ray with
// the triangulated facets that avoid it. Compatible across shared faces, so
// the per-cone results glue into a fan.
void pull_triangulate(const Cone& cone, std::vector<Cone>& out) {
  if (cone.is_simplicial()) {
    out.push_back(cone);
    return;
  }
  const NVec& least = cone.rays().front();
  for (const Cone& f : cone.facets()) {
    if (f.has_ray(least)) continue;
    std::vector<Cone> pieces;
    pull_triangulate(f, pieces);
    for (const Cone& p : pieces) {
      std::vector<NVec> gens = p.rays();
      gens.push_back(least);
      out.emplace_back(cone.ambient_dim(), std::move(gens));
    }
  }
}

// Nonzero lattice points of the half-open fundamental parallelepiped of a
// full-dimensional simplicial cone, with their generator coordinates.
std::vector<std::pair<NVec, std::vector<Rat>>> parallelepiped_points(const Cone& c) {
  const size_t n = c.ambient_dim();
  std::vector<Int> lo(n, Int(0)), hi(n, Int(0));
  for (size_t coord = 0; coord < n; ++coord) {
    for (const NVec& r : c.rays()) {
      if (r[coord] < 0) lo[coord] += numerator_of(r[coord]);
      if (r[coord] > 0) hi[coord] += numerator_of(r[coord]);
    }
  }
  std::vector<std::pair<NVec, std::vector<Rat>>> found;
  std::vector<Int> x = lo;
  while (true) {
    NVec p(std::vector<Rat>(x.begin(), x.end()));
    if (!p.is_zero()) {
      bool inside_box = false;
      try {
        const std::vector<Rat> coords = simplicial_coordinates(p, c.rays());
        inside_box = true;
        for (const Rat& t : coords)
          if (t < 0 || t >= 1) {
            inside_box = false;
            break;
          }
        if (inside_box) found.emplace_back(p, coords);
      } catch (const ValidationError&) {
        // outside the span; skip
      }
    }
    size_t coord = 0;
    while (coord < n) {
      if (x[coord] < hi[coord]) {
        ++x[coord];
        break;
      }
      x[coord] = lo[coord];
      ++coord;
    }
    if (coord == n) break;
  }
  return found;
}

}  // namespace

Fan make_simplicial(const Fan& fan) {
  std::vector<Cone> cones;
  for (const Cone& c : fan.max_cones()) pull_triangulate(c, cones);
  return Fan::unchecked(fan.ambient_dim(), std::move(cones));
}

Fan desingularize(const Fan& fan) {
  Fan current = is_simplicial(fan) ? fan : make_simplicial(fan);
  const size_t guard = 64 * (current.max_cones().size() + 4) * (fan.ambient_dim() + 1);
  for (size_t step = 0; step <= guard; ++step) {
    Int worst(1);
    size_t worst_idx = 0;
    for (size_t i = 0; i < current.max_cones().size(); ++i) {
      const Cone& c = current.max_cones()[i];
      if (c.dim() != current.ambient_dim()) continue;
      const Int mult = cone_multiplicity(c.rays());
      if (mult > worst) {
        worst = mult;
        worst_idx = i;
      }
    }
    if (worst == 1) return current;

    // Subdivide at the parallelepiped point with the least coefficient sum.
    auto points = parallelepiped_points(current.max_cones()[worst_idx]);
    if (points.empty()) throw Error("desingularize: no subdivision point found");
    size_t best = 0;
    auto coeff_sum = [](const std::vector<Rat>& t) {
      Rat s(0);
      for (const Rat& x : t) s += x;
      return s;
    };
    for (size_t i = 1; i < points.size(); ++i) {
      const Rat si = coeff_sum(points[i].second), sb = coeff_sum(points[best].second);
      if (si < sb || (si == sb && points[i].first < points[best].first)) best = i;
    }
    current = star_subdivide(current, points[best].first);
  }
  throw ResourceError("desingularize: iteration guard exceeded");
}

Fan common_refinement(const Fan& a, const Fan& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw ValidationError("common_refinement: dimension mismatch");
  std::vector<Cone> cones;
  for (const Cone& ca : a.max_cones())
    for (const Cone& cb : b.max_cones()) {
      Cone meet = ca.intersection(cb);
      if (meet.dim() == a.ambient_dim()) cones.push_back(std::move(meet));
    }
  return Fan::unchecked(a.ambient_dim(), std::move(cones));
}

}  // namespace toric
