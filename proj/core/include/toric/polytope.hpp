#pragma once

// Exact polytopes in M_R as halfspace intersections with computed vertex
// sets. Empty and lower-dimensional polytopes are first-class values; only
// a nonempty unbounded intersection is an error.

#include <cstddef>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

// { m in M_R : (normal, m) >= level }. The normal is kept primitive; the
// level is rescaled with it.
struct Halfspace {
  NVec normal;
  Rat level;

  Halfspace(NVec n, Rat a);
};

class Polytope {
 public:
  // Vertex enumeration by exact double description on the homogenization.
  // Throws UnboundedError when the intersection is nonempty and unbounded.
  static Polytope intersect(std::vector<Halfspace> halfspaces);

  size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
  // Extreme points in lexicographic order.
  const std::vector<MVec>& vertices() const { return vertices_; }
  // For each vertex, the sorted indices of halfspaces active at it.
  const std::vector<std::vector<size_t>>& vertex_active_sets() const { return active_; }

  int dim() const { return dim_; }  // -1 for the empty polytope
  bool empty() const { return vertices_.empty(); }

  bool contains(const MVec& m) const;

  // Equality of the described sets (ambient dimension and vertex lists).
  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
  }
  friend bool operator!=(const Polytope& a, const Polytope& b) { return !(a == b); }

 private:
  Polytope() = default;

  size_t ambient_dim_ = 0;
  std::vector<Halfspace> halfspaces_;
  std::vector<MVec> vertices_;
  std::vector<std::vector<size_t>> active_;
  int dim_ = -1;

  friend Polytope scale(const Polytope&, const Int&);
};

// min over the polytope of the pairing with p; attained at a vertex.
Rat support_value(const NVec& p, const Polytope& poly);

// The i-th halfspace boundary meets the polytope.
bool contributes(const Polytope& poly, size_t i);

// Dropping the i-th halfspace changes the intersection.
bool contributes_properly(const std::vector<Halfspace>& halfspaces, size_t i);

// Every vertex of a full-dimensional polytope lies on exactly n facet
// hyperplanes with independent normals.
bool is_simple(const Polytope& poly);

// Dilation by a positive integer: every level multiplied by m.
Polytope scale(const Polytope& poly, const Int& m);

// Exact enumeration of lattice points by a bounding-box scan.
Int count_lattice_points(const Polytope& poly);

// Sorted facet-index sets of the vertices; the combinatorial type used for
// chamber stability checks.
std::vector<std::vector<size_t>> combinatorial_signature(const Polytope& poly);

}  // namespace toric
