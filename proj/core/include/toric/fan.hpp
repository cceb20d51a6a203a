#pragma once

// Strongly convex rational polyhedral cones in N_R and complete fans built
// from them: validation, smoothness, normal fans of polytopes, star
// subdivision, desingularization and common refinements.

#include <memory>
#include <optional>
#include <vector>

#include "toric/lattice.hpp"
#include "toric/polytope.hpp"

namespace toric {

class Cone {
 public:
  // Canonicalizes the generators to the primitive extreme rays, sorted
  // lexicographically. Throws when the generated cone contains a line.
  Cone(size_t ambient_dim, std::vector<NVec> generators);

  size_t ambient_dim() const { return ambient_dim_; }
  size_t dim() const { return dim_; }
  const std::vector<NVec>& rays() const { return rays_; }
  bool is_simplicial() const { return rays_.size() == dim_; }

  // Irredundant facet inequalities within the span, plus the span equations.
  const std::vector<MVec>& facet_normals() const { return facet_normals_; }
  const std::vector<MVec>& span_equations() const { return span_equations_; }

  bool contains(const NVec& x) const;
  bool contains(const Cone& other) const;
  bool has_ray(const NVec& primitive_ray) const;

  Cone intersection(const Cone& other) const;
  std::vector<Cone> facets() const;
  Cone smallest_face_containing(const NVec& x) const;
  bool is_face(const Cone& candidate) const;

  // Sum of the extreme rays; a relative interior point when dim > 0.
  NVec ray_sum() const;

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.rays_ == b.rays_;
  }
  friend bool operator!=(const Cone& a, const Cone& b) { return !(a == b); }
  friend bool operator<(const Cone& a, const Cone& b) { return a.rays_ < b.rays_; }

 private:
  size_t ambient_dim_ = 0;
  size_t dim_ = 0;
  std::vector<NVec> rays_;
  std::vector<MVec> facet_normals_;
  std::vector<MVec> span_equations_;
};

class Fan {
 public:
  // Checks the fan axioms pairwise; the error message names the offending
  // pair of cones.
  static Fan validated(size_t dim, std::vector<Cone> maximal_cones);
  // For internally constructed fans that are valid by construction.
  static Fan unchecked(size_t dim, std::vector<Cone> maximal_cones);

  size_t ambient_dim() const { return dim_; }
  const std::vector<Cone>& max_cones() const { return max_cones_; }
  const std::vector<NVec>& rays() const { return rays_; }

  std::optional<size_t> ray_index(const NVec& ray) const;
  // Index of some maximal cone containing x; throws when none does.
  size_t cone_containing(const NVec& x) const;
  bool supports(const NVec& x) const;

  // Every maximal cone of this fan lies inside some cone of the coarser fan.
  bool refines(const Fan& coarser) const;

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.dim_ == b.dim_ && a.max_cones_ == b.max_cones_;
  }
  friend bool operator!=(const Fan& a, const Fan& b) { return !(a == b); }

 private:
  Fan() = default;

  size_t dim_ = 0;
  std::vector<Cone> max_cones_;  // sorted canonically
  std::vector<NVec> rays_;       // deduplicated union, lex sorted
};

using FanPtr = std::shared_ptr<const Fan>;

// Spec-level validation entry point.
Fan validate_fan(size_t dim, std::vector<Cone> cones);

bool is_complete(const Fan& fan);
bool is_simplicial(const Fan& fan);
bool is_smooth(const Fan& fan);

// Normal fan of a full-dimensional polytope: one maximal cone per vertex,
// spanned by the normals of the facets through it.
Fan dual_fan(const Polytope& poly);

// Star subdivision at a primitive lattice direction inside the support.
Fan star_subdivide(const Fan& fan, const NVec& u);

// Pulling triangulation at lexicographically least rays; introduces no new
// rays and leaves simplicial cones untouched.
Fan make_simplicial(const Fan& fan);

// Smooth refinement: triangulate, then repeatedly star-subdivide a cone of
// maximal multiplicity at the minimal lattice point of its fundamental
// parallelepiped. Deterministic; returns the input when already smooth.
Fan desingularize(const Fan& fan);

// Fan of the pairwise intersections of two complete fans.
Fan common_refinement(const Fan& a, const Fan& b);

}  // namespace toric
