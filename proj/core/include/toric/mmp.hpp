#pragma once

// Toric Mori theory on complete simplicial fans: wall curves and their
// relations, the Mori cone and its extremal rays, classification and
// execution of elementary contractions (fibration / divisorial / flip), and
// the full minimal model loop with termination bookkeeping.

#include <optional>
#include <utility>
#include <vector>

#include "toric/divisor.hpp"

namespace toric {

// A codimension-one cone between two maximal cones, with the unique integral
// relation among the n+1 involved rays, normalized so the two opposite rays
// carry positive coefficients.
struct Wall {
  std::vector<NVec> rays;  // the n-1 shared rays, lex sorted
  NVec opposite_a, opposite_b;
  size_t cone_a, cone_b;
  std::vector<Rat> relation;  // aligned with [rays..., opposite_a, opposite_b]
};

// Degrees of the invariant divisors on a curve class, indexed like the fan
// rays. For a wall curve these are the relation coefficients.
struct CurveClass {
  std::vector<Rat> degrees;

  friend bool operator==(const CurveClass& x, const CurveClass& y) {
    return x.degrees == y.degrees;
  }
  friend bool operator<(const CurveClass& x, const CurveClass& y) {
    return x.degrees < y.degrees;
  }
};

std::vector<Wall> walls(const Fan& fan);

// -sum a_i h(u_i); positive exactly when h is strictly upper convex across
// the wall, and D_h . C has this sign.
Rat wall_degree(const SupportFunction& h, const Wall& wall);

CurveClass wall_class(const Fan& fan, const Wall& wall);
Rat class_degree(const SupportFunction& h, const CurveClass& c);

// The classes spanning extreme rays of the cone generated by all of them;
// membership decided by exact nonnegative-combination feasibility.
std::vector<CurveClass> extremal_rays(const Fan& fan, const std::vector<CurveClass>& classes);

enum class StepKind { divisorial, flip, fibration };

struct FibrationData {
  size_t fiber_dim;
  size_t base_dim;
  FanPtr quotient_fan;
  Rat canonical_degree;  // K . ell = -sum of the relation coefficients
  Rat class_degree;      // X . ell
};

struct MMPStep {
  StepKind kind;
  CurveClass extremal_class;  // on the rays of `before`
  Rat adjoint_degree;
  FanPtr before;
  FanPtr after;  // null for a fibration stop
  std::optional<NVec> removed_ray;                     // divisorial
  std::optional<NVec> flip_hinge;                      // ray of the flip's divisor
  std::optional<std::pair<Rat, Rat>> flip_discrepancies;  // (alpha, alpha') there
  std::optional<FibrationData> fibration;
};

struct ContractionResult {
  MMPStep step;
  FanPtr successor;  // null when the contraction is a fibration
};

// Merge the maximal cones across every wall of the extremal class and
// classify by the sign pattern of the relation: no negative coefficient
// among the wall rays gives a fibration, exactly one a divisorial
// contraction, two or more a flip.
ContractionResult classify_and_contract(const Fan& fan, const CurveClass& extremal,
                                        const SupportFunction& h_adjoint);

// The flip across a flipping class: the merged circuit regions are
// re-triangulated from the positive side to the negative side; the ray set
// is preserved.
Fan flip(const Fan& fan, const CurveClass& extremal);

enum class OutcomeKind { minimal_model, mori_fibration, birational_to_projective_space };

struct MMPOutcome {
  OutcomeKind kind;
  FanPtr final_fan;
  DivisorClassOfX final_class;
  Polytope final_adjoint_box;
  std::vector<MMPStep> trace;
  std::optional<int> kappa;  // nullopt encodes -infinity
};

struct MMPOptions {
  size_t max_steps = 0;      // 0: 10 * (initial ray count)^2
  bool verify_steps = false; // re-check terminality and flip monotonicity per step
};

// The contraction loop: contract the lexicographically least adjoint-negative
// extremal ray until the adjoint is nef or a fibration appears.
MMPOutcome mmp_run(const DivisorClassOfX& x_class, const MMPOptions& options = {});

}  // namespace toric
