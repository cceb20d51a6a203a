#include "toric/polytope.hpp"

#include <algorithm>
#include <map>

#include "toric/dd.hpp"
#include "toric/errors.hpp"

namespace toric {

Halfspace::Halfspace(NVec n, Rat a) {
  if (n.is_zero()) throw ValidationError("halfspace: zero normal");
  const NVec prim = primitivize(n);
  // (n,m) >= a and (n/s, m) >= a/s describe the same set for s > 0.
  Rat factor;
  for (size_t i = 0; i < n.dim(); ++i)
    if (n[i] != 0) {
      factor = n[i] / prim[i];
      break;
    }
  normal = prim;
  level = a / factor;
}

Polytope Polytope::intersect(std::vector<Halfspace> halfspaces) {
  if (halfspaces.empty()) throw ValidationError("intersect: empty halfspace list");
  const size_t n = halfspaces[0].normal.dim();
  for (const Halfspace& h : halfspaces)
    if (h.normal.dim() != n) throw ValidationError("intersect: mixed dimensions");

  // Homogenize: (m, t) with (p, m) - a t >= 0 and t >= 0. Rays with t > 0 are
  // vertices, rays with t = 0 are recession directions.
  QMat ineqs;
  for (const Halfspace& h : halfspaces) {
    QRow row(n + 1);
    for (size_t i = 0; i < n; ++i) row[i] = h.normal[i];
    row[n] = -h.level;
    ineqs.push_back(std::move(row));
  }
  QRow last(n + 1, Rat(0));
  last[n] = Rat(1);
  ineqs.push_back(std::move(last));

  const GeneratorDescription gen = dual_description(n + 1, ineqs);

  Polytope out;
  out.ambient_dim_ = n;
  out.halfspaces_ = std::move(halfspaces);

  bool has_recession = !gen.lineality.empty();
  std::vector<MVec> verts;
  for (const QRow& r : gen.rays) {
    if (r[n] == 0) {
      has_recession = true;
      continue;
    }
    std::vector<Rat> coords(n);
    for (size_t i = 0; i < n; ++i) coords[i] = r[i] / r[n];
    verts.emplace_back(std::move(coords));
  }
  if (verts.empty()) return out;  // empty polytope, dim -1
  if (has_recession)
    throw UnboundedError("intersect: unbounded intersection (" +
                         std::to_string(out.halfspaces_.size()) + " halfspaces)");

  std::sort(verts.begin(), verts.end());
  out.vertices_ = std::move(verts);
  for (const MVec& v : out.vertices_) {
    std::vector<size_t> act;
    for (size_t i = 0; i < out.halfspaces_.size(); ++i)
      if (pairing(out.halfspaces_[i].normal, v) == out.halfspaces_[i].level) act.push_back(i);
    out.active_.push_back(std::move(act));
  }
  QMat pts;
  for (const MVec& v : out.vertices_) pts.push_back(v.coords());
  out.dim_ = static_cast<int>(affine_rank(pts));
  return out;
}

bool Polytope::contains(const MVec& m) const {
  for (const Halfspace& h : halfspaces_)
    if (pairing(h.normal, m) < h.level) return false;
  return true;
}

Rat support_value(const NVec& p, const Polytope& poly) {
  if (poly.empty()) throw ValidationError("support_value: empty polytope");
  bool first = true;
  Rat best;
  for (const MVec& v : poly.vertices()) {
    const Rat val = pairing(p, v);
    if (first || val < best) {
      best = val;
      first = false;
    }
  }
  return best;
}

bool contributes(const Polytope& poly, size_t i) {
  if (poly.empty()) return false;
  const Halfspace& h = poly.halfspaces()[i];
  return support_value(h.normal, poly) == h.level;
}

bool contributes_properly(const std::vector<Halfspace>& halfspaces, size_t i) {
  std::vector<Halfspace> rest;
  for (size_t j = 0; j < halfspaces.size(); ++j)
    if (j != i) rest.push_back(halfspaces[j]);
  if (rest.empty()) return true;  // a single halfspace always matters
  const Polytope full = Polytope::intersect(halfspaces);
  Polytope without = [&] {
    try {
      return Polytope::intersect(rest);
    } catch (const UnboundedError&) {
      return Polytope();  // unbounded certainly differs from a polytope
    }
  }();
  if (without.empty() && without.halfspaces().empty()) return true;  // unbounded case
  return !(full == without);
}

namespace {

// Distinct boundary hyperplanes, with the vertices lying on each.
struct HyperplaneIncidence {
  std::vector<size_t> halfspace_indices;
  std::vector<size_t> vertex_indices;
};

std::vector<HyperplaneIncidence> boundary_hyperplanes(const Polytope& poly) {
  std::map<std::pair<NVec, Rat>, HyperplaneIncidence> seen;
  const auto& hs = poly.halfspaces();
  for (size_t i = 0; i < hs.size(); ++i)
    seen[{hs[i].normal, hs[i].level}].halfspace_indices.push_back(i);
  std::vector<HyperplaneIncidence> out;
  for (auto& [key, inc] : seen) {
    for (size_t v = 0; v < poly.vertices().size(); ++v)
      if (pairing(key.first, poly.vertices()[v]) == key.second) inc.vertex_indices.push_back(v);
    out.push_back(std::move(inc));
  }
  return out;
}

}  // namespace

bool is_simple(const Polytope& poly) {
  const size_t n = poly.ambient_dim();
  if (poly.dim() != static_cast<int>(n))
    throw ValidationError("is_simple: polytope is not full-dimensional");

  // Facet hyperplanes: those meeting the polytope in dimension n-1.
  std::vector<HyperplaneIncidence> planes = boundary_hyperplanes(poly);
  std::vector<size_t> facet_plane;
  for (size_t pi = 0; pi < planes.size(); ++pi) {
    QMat pts;
    for (size_t v : planes[pi].vertex_indices) pts.push_back(poly.vertices()[v].coords());
    if (!pts.empty() && affine_rank(pts) == n - 1) facet_plane.push_back(pi);
  }

  for (size_t v = 0; v < poly.vertices().size(); ++v) {
    QMat normals;
    size_t count = 0;
    for (size_t pi : facet_plane) {
      const auto& verts = planes[pi].vertex_indices;
      if (std::find(verts.begin(), verts.end(), v) == verts.end()) continue;
      ++count;
      normals.push_back(poly.halfspaces()[planes[pi].halfspace_indices[0]].normal.coords());
    }
    if (count != n || rank_of(normals) != n) return false;
  }
  return true;
}

Polytope scale(const Polytope& poly, const Int& m) {
  if (poly.empty()) throw ValidationError("scale: empty polytope");
  if (m <= 0) throw ValidationError("scale: factor must be positive");
  Polytope out;
  out.ambient_dim_ = poly.ambient_dim_;
  for (const Halfspace& h : poly.halfspaces_) out.halfspaces_.emplace_back(h.normal, h.level * m);
  for (const MVec& v : poly.vertices_) out.vertices_.push_back(Rat(m) * v);
  out.active_ = poly.active_;
  out.dim_ = poly.dim_;
  return out;
}

Int count_lattice_points(const Polytope& poly) {
  if (poly.empty()) return Int(0);
  const size_t n = poly.ambient_dim();
  std::vector<Int> lo(n), hi(n);
  for (size_t c = 0; c < n; ++c) {
    Rat mn = poly.vertices()[0][c], mx = mn;
    for (const MVec& v : poly.vertices()) {
      mn = std::min(mn, v[c]);
      mx = std::max(mx, v[c]);
    }
    lo[c] = ceil_of(mn);
    hi[c] = floor_of(mx);
  }
  Int cells(1);
  for (size_t c = 0; c < n; ++c) {
    if (hi[c] < lo[c]) return Int(0);
    cells *= hi[c] - lo[c] + 1;
    if (cells > 10'000'000) throw ResourceError("count_lattice_points: bounding box too large");
  }
  Int count(0);
  std::vector<Int> x = lo;
  while (true) {
    MVec m(std::vector<Rat>(x.begin(), x.end()));
    if (poly.contains(m)) ++count;
    size_t c = 0;
    while (c < n) {
      if (x[c] < hi[c]) {
        ++x[c];
        break;
      }
      x[c] = lo[c];
      ++c;
    }
    if (c == n) break;
  }
  return count;
}

std::vector<std::vector<size_t>> combinatorial_signature(const Polytope& poly) {
  std::vector<std::vector<size_t>> sig = poly.vertex_active_sets();
  std::sort(sig.begin(), sig.end());
  return sig;
}

}  // namespace toric
