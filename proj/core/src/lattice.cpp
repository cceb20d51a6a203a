#include "toric/lattice.hpp"

#include "toric/linalg.hpp"

namespace toric {

std::vector<Rat> simplicial_coordinates(const NVec& u, const std::vector<NVec>& generators) {
  if (generators.empty()) throw ValidationError("simplicial_coordinates: no generators");
  const size_t n = u.dim();
  QMat a(n, QRow(generators.size()));
  for (size_t j = 0; j < generators.size(); ++j) {
    if (generators[j].dim() != n)
      throw ValidationError("simplicial_coordinates: dimension mismatch");
    for (size_t i = 0; i < n; ++i) a[i][j] = generators[j][i];
  }
  {
    QMat gens;
    for (const NVec& g : generators) gens.push_back(g.coords());
    if (rank_of(gens) != generators.size())
      throw ValidationError("simplicial_coordinates: dependent generators");
  }
  auto x = solve_unique(a, u.coords());
  if (!x) throw ValidationError("simplicial_coordinates: point outside the span");
  return *x;
}

Int cone_multiplicity(const std::vector<NVec>& generators) {
  if (generators.empty()) throw ValidationError("cone_multiplicity: no generators");
  const size_t n = generators[0].dim();
  if (generators.size() != n)
    throw ValidationError("cone_multiplicity: need exactly n generators");
  QMat m;
  for (const NVec& g : generators) m.push_back(g.coords());
  const Rat d = determinant(m);
  if (d == 0) throw ValidationError("cone_multiplicity: dependent generators");
  Rat a = d < 0 ? -d : d;
  if (denominator_of(a) != 1)
    throw ValidationError("cone_multiplicity: generators are not lattice points");
  return numerator_of(a);
}

}  // namespace toric
