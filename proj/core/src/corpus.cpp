#include "toric/corpus.hpp"

#include <algorithm>

#include "toric/errors.hpp"

namespace toric::corpus {

namespace {

NVec nvec(std::initializer_list<int> coords) {
  std::vector<Rat> c;
  for (int x : coords) c.emplace_back(x);
  return NVec(std::move(c));
}

std::vector<NVec> axis_and_corner_rays() {
  std::vector<NVec> rays;
  rays.push_back(nvec({1, 0, 0}));
  rays.push_back(nvec({-1, 0, 0}));
  rays.push_back(nvec({0, 1, 0}));
  rays.push_back(nvec({0, -1, 0}));
  rays.push_back(nvec({0, 0, 1}));
  rays.push_back(nvec({0, 0, -1}));
  rays.push_back(nvec({1, 1, 1}));
  rays.push_back(nvec({-1, -1, -1}));
  rays.push_back(nvec({1, 1, -1}));
  rays.push_back(nvec({-1, -1, 1}));
  rays.push_back(nvec({1, -1, 1}));
  rays.push_back(nvec({-1, 1, -1}));
  rays.push_back(nvec({-1, 1, 1}));
  rays.push_back(nvec({1, -1, -1}));
  return rays;
}

bool is_axis_ray(const NVec& r) {
  size_t nonzero = 0;
  for (size_t i = 0; i < r.dim(); ++i)
    if (r[i] != 0) ++nonzero;
  return nonzero == 1;
}

bool unit_pieces(const Cone& a, const Cone& b) {
  return cone_multiplicity(a.rays()) == 1 && cone_multiplicity(b.rays()) == 1;
}

// Normal fan of the class polytope with every square cone split along a
// diagonal; the diagonal through the two axis rays is preferred, the other
// one is the fallback.
Fan reconstructed_fan(const std::vector<NVec>& rays, const std::vector<Rat>& coefficients) {
  std::vector<Halfspace> hs;
  for (size_t i = 0; i < rays.size(); ++i) hs.emplace_back(rays[i], -coefficients[i]);
  const Polytope class_polytope = Polytope::intersect(std::move(hs));
  const Fan coarse = dual_fan(class_polytope);

  std::vector<Cone> cones;
  for (const Cone& c : coarse.max_cones()) {
    if (c.is_simplicial()) {
      cones.push_back(c);
      continue;
    }
    if (c.rays().size() != 4)
      throw Error("sample reconstruction: unexpected non-simplicial cone shape");
    std::vector<NVec> axis, corner;
    for (const NVec& r : c.rays()) (is_axis_ray(r) ? axis : corner).push_back(r);
    if (axis.size() != 2 || corner.size() != 2)
      throw Error("sample reconstruction: square cone without an axis diagonal");
    Cone a(3, {axis[0], axis[1], corner[0]});
    Cone b(3, {axis[0], axis[1], corner[1]});
    if (!unit_pieces(a, b)) {
      a = Cone(3, {corner[0], corner[1], axis[0]});
      b = Cone(3, {corner[0], corner[1], axis[1]});
      if (!unit_pieces(a, b))
        throw Error("sample reconstruction: neither diagonal split is smooth");
    }
    cones.push_back(std::move(a));
    cones.push_back(std::move(b));
  }
  Fan fan = Fan::validated(3, std::move(cones));
  if (!is_smooth(fan)) throw Error("sample reconstruction: fan is not smooth");
  return fan;
}

SamplePair build_sample(std::string name, std::vector<Rat> coefficients) {
  const std::vector<NVec> rays = axis_and_corner_rays();
  FanPtr fan = std::make_shared<Fan>(reconstructed_fan(rays, coefficients));
  std::vector<Rat> class_values(fan->rays().size());
  for (size_t i = 0; i < rays.size(); ++i) {
    const auto idx = fan->ray_index(rays[i]);
    if (!idx) throw Error("sample reconstruction: ray missing from the fan");
    class_values[*idx] = -coefficients[i];
  }
  DivisorClassOfX x = DivisorClassOfX::checked(fan, std::move(class_values));
  return {std::move(name), fan, rays, std::move(coefficients), std::move(x)};
}

}  // namespace

SamplePair sample_point() {
  std::vector<Rat> coeffs(14, Rat(2));
  for (size_t i = 0; i < 6; ++i) coeffs[i] = Rat(1);
  return build_sample("sample-point", std::move(coeffs));
}

SamplePair sample_segment() {
  std::vector<Rat> coeffs(14, Rat(3));
  coeffs[0] = coeffs[1] = Rat(2);
  for (size_t i = 2; i < 6; ++i) coeffs[i] = Rat(1);
  return build_sample("sample-segment", std::move(coeffs));
}

SamplePair flip_fixture() {
  // Octant fan with the cone (e1, e2, -e3) star-subdivided at w = (1,1,-1).
  std::vector<NVec> axes = {nvec({1, 0, 0}), nvec({-1, 0, 0}), nvec({0, 1, 0}),
                            nvec({0, -1, 0}), nvec({0, 0, 1}), nvec({0, 0, -1})};
  std::vector<Cone> octants;
  for (int sx : {1, -1})
    for (int sy : {1, -1})
      for (int sz : {1, -1})
        octants.emplace_back(3, std::vector<NVec>{nvec({sx, 0, 0}), nvec({0, sy, 0}),
                                                  nvec({0, 0, sz})});
  Fan base = Fan::unchecked(3, std::move(octants));
  const NVec w = nvec({1, 1, -1});
  FanPtr fan = std::make_shared<Fan>(star_subdivide(base, w));

  // Class values convex on the flipped side only; the (e1,e2)-wall of this
  // fan has adjoint degree -1/2.
  std::vector<NVec> rays = axes;
  rays.push_back(w);
  std::vector<Rat> coeffs = {Rat(1), Rat(0), Rat(1), Rat(0),
                             Rat(1, 2), Rat(0), Rat(1)};
  std::vector<Rat> class_values(fan->rays().size());
  for (size_t i = 0; i < rays.size(); ++i) class_values[*fan->ray_index(rays[i])] = -coeffs[i];
  DivisorClassOfX x = DivisorClassOfX::transported(fan, std::move(class_values));
  return {"flip-fixture", fan, std::move(rays), std::move(coeffs), std::move(x)};
}

}  // namespace toric::corpus
