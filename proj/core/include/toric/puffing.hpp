#pragma once

// Construction of a projective minimal model by puffing up the adjoint
// polytope: contributing halfspaces, an epsilon assignment sampled inside a
// generic chamber, the dual fan of the puffed polytope, and mandatory
// re-verification of every claim on the output.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "toric/divisor.hpp"

namespace toric {

struct EpsilonAssignment {
  std::vector<Rat> weights;  // one per contributing halfspace, in (1, 2)
  Rat scale;                 // global factor t

  std::vector<Rat> epsilons() const {
    std::vector<Rat> e(weights.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = scale * weights[i];
    return e;
  }
};

struct ChamberCertificate {
  bool simple = false;
  bool all_contribute_properly = false;
  bool stable = false;  // combinatorial type constant at t, t/2, t/4
  Rat stability_scale;  // the accepted t
  std::vector<std::vector<size_t>> signature;  // combinatorial type of Box(eps)

  bool valid() const { return simple && all_contribute_properly && stable; }
};

struct MinimalModelChecks {
  bool sigma_rays_equal_contributing = false;
  bool k_matches_h = false;
  bool k_sigma_in_box = false;
  bool nef = false;
  bool terminal = false;
  bool box_preserved = false;
};

struct MinimalModelReport {
  FanPtr sigma;
  DivisorClassOfX transported_class;
  SupportFunction adjoint_on_sigma;  // k
  Polytope adjoint_box;              // Box_k = Box_h
  MinimalModelChecks checks;
  std::optional<int> kappa;
  EpsilonAssignment epsilon;
  ChamberCertificate certificate;
  DiscrepancyReport terminality;
};

// The halfspaces of the adjoint box whose boundary meets it, in ray order,
// together with the indices of their rays.
std::vector<std::pair<size_t, Halfspace>> contributing_halfspaces(const SupportFunction& h);

// Intersection of the contributing halfspaces relaxed by epsilon; always
// full-dimensional for valid inputs.
Polytope puffed_polytope(const SupportFunction& h, const EpsilonAssignment& eps);

// Deterministic sample: distinct rational weights in (1,2) with small
// denominators, scale halved until the puffed polytope is simple, every
// halfspace contributes properly, and the combinatorial type is stable under
// two more halvings.
std::pair<EpsilonAssignment, ChamberCertificate> sample_epsilon_in_chamber(
    const SupportFunction& h, uint64_t seed);

// The full construction with verification; throws ClaimError naming the
// first failed check.
MinimalModelReport construct_minimal_model(const DivisorClassOfX& x_class, uint64_t seed);

}  // namespace toric
