#pragma once

// Built-in sample pairs at desk scale. The published data fixes the ray sets
// and the divisor classes; the cone structure here is one smooth completion
// of those rays, reconstructed as a diagonally split normal fan of the class
// polytope. Every downstream output (adjoint polytope, its dual fan, kappa)
// depends only on the ray set.

#include <string>
#include <vector>

#include "toric/divisor.hpp"

namespace toric::corpus {

struct SamplePair {
  std::string name;
  FanPtr fan;
  std::vector<NVec> document_rays;        // presentation order
  std::vector<Rat> divisor_coefficients;  // aligned with document_rays
  DivisorClassOfX x_class;
};

// Adjoint polytope a single point; kappa 0. Axis rays with coefficient 1,
// corner rays with coefficient 2.
SamplePair sample_point();

// Adjoint polytope a segment; kappa 1. Doubled coefficients on one axis.
SamplePair sample_segment();

// A smooth complete fan containing the quadrilateral circuit
// e1 + e2 = e3 + (e1 + e2 - e3), together with class values making the
// circuit wall adjoint-negative; the smallest flip fixture.
SamplePair flip_fixture();

}  // namespace toric::corpus
