#pragma once

// Exact double description: generators of a polyhedral cone given by linear
// inequalities and equations. Both the polytope vertex enumeration and the
// cone duality computations sit on top of this.

#include <vector>

#include "toric/linalg.hpp"

namespace toric {

struct GeneratorDescription {
  // The cone is  span(lineality) + cone(rays).
  QMat lineality;  // primitive integral rows, a basis of the lineality space
  QMat rays;       // primitive integral rows, the extreme rays modulo lineality
};

// Generators of { x in R^dim : (a,x) >= 0 for a in inequalities,
//                              (e,x) =  0 for e in equations }.
GeneratorDescription dual_description(size_t dim, const QMat& inequalities,
                                      const QMat& equations = {});

}  // namespace toric
