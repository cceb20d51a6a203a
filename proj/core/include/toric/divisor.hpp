#pragma once

// The support-function / divisor dictionary: adjoint support functions,
// divisor polytopes, nef and ample certification, proper transforms,
// discrepancies, terminality and the Kodaira dimension of the adjoint
// system.

#include <optional>
#include <vector>

#include "toric/fan.hpp"
#include "toric/polytope.hpp"

namespace toric {

// Ray values of a piecewise linear function on a fan; value i belongs to
// fan->rays()[i]. Encodes the invariant Q-Cartier divisor -sum h(p) D_p.
struct SupportFunction {
  FanPtr fan;
  std::vector<Rat> values;

  SupportFunction(FanPtr f, std::vector<Rat> vals);
  const Rat& at(size_t ray_index) const { return values[ray_index]; }
  Rat at_ray(const NVec& ray) const;
};

// An invariant Q-divisor  sum coefficients[i] * D_{ray i}.
struct ToricDivisor {
  FanPtr fan;
  std::vector<Rat> coefficients;

  ToricDivisor(FanPtr f, std::vector<Rat> coeffs);

  friend bool operator==(const ToricDivisor& a, const ToricDivisor& b) {
    return *a.fan == *b.fan && a.coefficients == b.coefficients;
  }
};

// The divisor class of a generic member X of a base-point-free system,
// carried by its ray values g and its class polytope.
class DivisorClassOfX {
 public:
  // Validates: Q-Cartier, nonempty class polytope, g upper convex on the fan.
  static DivisorClassOfX checked(FanPtr fan, std::vector<Rat> class_values);
  // For proper transforms and synthetic fixtures; only Q-Cartier and a
  // nonempty class polytope are enforced.
  static DivisorClassOfX transported(FanPtr fan, std::vector<Rat> class_values);

  const FanPtr& fan() const { return fan_; }
  const std::vector<Rat>& values() const { return g_; }
  const Polytope& class_polytope() const { return box_; }

 private:
  DivisorClassOfX(FanPtr fan, std::vector<Rat> g, Polytope box);

  FanPtr fan_;
  std::vector<Rat> g_;
  Polytope box_;
};

struct DiscrepancyEntry {
  NVec ray;
  size_t host_cone;  // index of a maximal cone of the base fan containing it
  Rat discrepancy;
  bool meets_x;
};

struct DiscrepancyReport {
  FanPtr resolution;
  std::vector<DiscrepancyEntry> entries;
  bool terminal;  // all entries with meets_x have positive discrepancy
};

enum class MeetsXMode { strong, relaxed };

enum class NefVerdict { nef, not_nef, empty_box };

struct NefStatus {
  NefVerdict verdict;
  std::optional<size_t> offending_cone;  // for not_nef
};

struct TerminalityResult {
  bool terminal;
  FanPtr witness;
  DiscrepancyReport report;
};

// h(p) = -c_p; fails on non-Q-Cartier input on a non-simplicial fan.
SupportFunction support_from_divisor(const ToricDivisor& divisor);
ToricDivisor divisor_from_support(const SupportFunction& h);

// Support function of K + X given the class of X; the invariant canonical
// divisor is -sum D_p, so the adjoint ray values are 1 + g(p).
SupportFunction adjoint_support(const DivisorClassOfX& x_class);

// box of h: the intersection of (p, m) >= h(p) over all rays.
Polytope box_of(const SupportFunction& h);

// The point h_sigma of M_Q with (p, h_sigma) = h(p) on every ray of the cone.
MVec linear_extension(const SupportFunction& h, const Cone& cone);
// Value of the piecewise linear extension at an arbitrary point.
Rat evaluate(const SupportFunction& h, const NVec& u);

// Nef iff h_sigma lies in box_of(h) for every maximal cone; an empty box is
// reported separately. Requires a complete simplicial fan.
NefStatus check_nef(const SupportFunction& h);
bool is_nef(const SupportFunction& h);
// Nef, full-dimensional box, and cone -> h_sigma bijective onto the vertices.
bool is_ample(const SupportFunction& h);

// Class of the proper transform on another fan of the same lattice:
// g'(p) = p(class polytope).
DivisorClassOfX proper_transform_class(const DivisorClassOfX& x_class, FanPtr target);

// Discrepancies of K + X at the new rays of a refinement. The base fan must
// be simplicial.
DiscrepancyReport discrepancies(const DivisorClassOfX& x_class, const Fan& refinement,
                                MeetsXMode mode = MeetsXMode::strong);

// Discrepancy at a single direction inside the support.
Rat discrepancy_at(const DivisorClassOfX& x_class, const NVec& u);

// Builds one smooth refinement as witness and checks positivity of every
// discrepancy there. An explicit witness refinement may be supplied.
TerminalityResult is_terminal_pair(const DivisorClassOfX& x_class,
                                   const Fan* witness = nullptr);

// Growth order of sections of multiples of K + X: nullopt (kappa = -infinity)
// when the adjoint polytope is empty, its dimension otherwise.
std::optional<int> kappa_adjoint(const DivisorClassOfX& x_class);

}  // namespace toric
